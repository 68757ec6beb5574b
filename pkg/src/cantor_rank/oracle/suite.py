"""
Acceptance battery run by ``cantor-rank check-suite``.

Each check returns None on success or a short counterexample description.
Checks are independent and may run on a thread pool; results keep registration order.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from .. import corpus
from ..automaton.analysis import is_e_minimal, least_generating_set_info
from ..automaton.derivative import (
    cardinality_class,
    derivative,
    deterministic_suffix_states,
    enumerate_points,
    espectrum,
    find_accumulation_point,
    has_branching_component,
    is_accumulation_point,
    kernel,
    point_rank,
    rank_degree,
)
from ..automaton.graph import PathAutomaton
from ..automaton.ops import restrict_prefix, set_eq, union
from ..balg import TraceAlgebra, iso_equivalent
from ..dsl.compile import compile_expr
from ..dsl.evaluate import ONES, evaluate
from ..dsl.expr import Canon
from ..dsl.parser import parse
from ..errors import CantorRankException
from ..models import CheckResult, SuiteReport
from ..ordinals import ONE, Cardinal, OrdinalCNF, RankValue, parse_ordinal
from ..util import config
from .naive import derivative_naive, rank_naive
from .random_automata import random_automata, random_pairs
from .sampling import isolated_points, isolation_bruteforce, sample_coherence

logger = logging.getLogger("cantor_rank.oracle.suite")


@dataclass(frozen=True)
class SuiteContext:
    seed: int
    random_count: int
    pair_count: int

    def random(self) -> List[PathAutomaton]:
        return random_automata(self.random_count, self.seed)


Check = Callable[[SuiteContext], Optional[str]]
CHECKS: List[Tuple[str, Check]] = []


def check(name: str):
    def register(fn: Check) -> Check:
        CHECKS.append((name, fn))
        return fn
    return register


def _same_report(left, right) -> bool:
    if left.rank != right.rank or left.degree != right.degree:
        return False
    return set(left.top_points or ()) == set(right.top_points or ())


def _isolation_bound(a: PathAutomaton, w) -> int:
    return len(w.prefix) + len(w.period) * len(a.states) + 1


@check("e-minimal-sequences")
def check_e_minimal(ctx: SuiteContext) -> Optional[str]:
    for name, a in corpus.converging_sequences():
        report = rank_degree(a)
        if (report.rank, report.degree) != (RankValue.of(1), 1):
            return f"{name}: ({report.rank},{report.degree})"
        if len(enumerate_points(derivative(a))) != 1 or not is_e_minimal(a):
            return f"{name}: accumulation points are not a single point"
    return None


@check("canon-2-1-blocks")
def check_canon21(ctx: SuiteContext) -> Optional[str]:
    e = parse("canon(2,1)")
    profile = evaluate(e)
    if (profile.rank, profile.degree) != (RankValue.of(2), 1):
        return f"evaluate gave ({profile.rank},{profile.degree})"
    a = compile_expr(e)
    if not _same_report(profile, rank_degree(a)):
        return "compiled automaton disagrees with evaluate"
    if point_rank(a, ONES) != RankValue.of(2):
        return f"point rank of (1)^w is {point_rank(a, ONES)}"
    if not is_accumulation_point(a, ONES):
        return "(1)^w is not an accumulation point"
    for n in range(6):
        block = restrict_prefix(a, "1" * n + "0")
        if is_accumulation_point(block, ONES):
            return f"(1)^w accumulates inside block {n}"
    return None


@check("espec-rank-1")
def check_espec_rank1(ctx: SuiteContext) -> Optional[str]:
    for n in range(1, 11):
        profile = evaluate(Canon(ONE, n))
        if profile.espec != Cardinal.finite(n) or profile.degree != n:
            return f"canon(1,{n}): espec {profile.espec}, degree {profile.degree}"
    return None


@check("espec-rank-2")
def check_espec_rank2(ctx: SuiteContext) -> Optional[str]:
    e = Canon(OrdinalCNF.of(2), 1)
    if evaluate(e).espec != Cardinal.aleph0():
        return f"canon(2,1): espec {evaluate(e).espec}"
    if espectrum(compile_expr(e)) != Cardinal.aleph0():
        return "compiled canon(2,1) has a finite e-spectrum"
    return None


@check("closure-rank-agreement")
def check_closure_agreement(ctx: SuiteContext) -> Optional[str]:
    for text in corpus.DSL_TEXTS:
        e = parse(text)
        if not _same_report(evaluate(e), rank_degree(compile_expr(e))):
            return text
    return None


@check("perfect-kernel-trichotomy")
def check_trichotomy(ctx: SuiteContext) -> Optional[str]:
    for i, a in enumerate(ctx.random()):
        perfect = not kernel(a).is_empty()
        verdicts = (
            perfect,
            rank_degree(a).rank.is_infinity,
            cardinality_class(a) == Cardinal.continuum(),
            has_branching_component(a),
        )
        if len(set(verdicts)) != 1:
            return f"random automaton #{i} (seed {ctx.seed}): {verdicts}"
    return None


CANON_ORDINALS = ("0", "1", "2", "3", "w", "w+1", "w*2", "w^2", "w^2+w*3+2")


@check("canon-invariants")
def check_canon(ctx: SuiteContext) -> Optional[str]:
    for literal in CANON_ORDINALS:
        alpha = parse_ordinal(literal)
        for n in (1, 2, 3):
            try:
                profile = evaluate(Canon(alpha, n))
            except CantorRankException as err:
                return f"canon({literal},{n}): {err.message}"
            if profile.rank != RankValue.of(alpha) or profile.degree != n:
                return f"canon({literal},{n}) gave ({profile.rank},{profile.degree})"
    return None


@check("derivative-union-law")
def check_union_law(ctx: SuiteContext) -> Optional[str]:
    for i, (a, b) in enumerate(random_pairs(ctx.pair_count, ctx.seed + 1)):
        if not set_eq(derivative(union(a, b)), union(derivative(a), derivative(b))):
            return f"random pair #{i} (seed {ctx.seed + 1})"
    return None


@check("least-generating-sets")
def check_lgs(ctx: SuiteContext) -> Optional[str]:
    for name, a in corpus.automata().items():
        isolated = deterministic_suffix_states(a)
        dense = all(a.reachable_from(q) & isolated for q in a.states)
        info = least_generating_set_info(a)
        if info.exists != dense:
            return f"{name}: exists={info.exists}, dense={dense}"
        for cell in info.generators:
            if isolation_bruteforce(a, cell.point, _isolation_bound(a, cell.point)) is not True:
                return f"{name}: generator {cell.point} not isolated"
    return None


@check("superatomic-iso")
def check_superatomic(ctx: SuiteContext) -> Optional[str]:
    for name, a in corpus.automata().items():
        if TraceAlgebra(a, name).is_superatomic() == rank_degree(a).rank.is_infinity:
            return f"{name}: superatomicity disagrees with rank"
    for name, a, b in corpus.equal_invariant_pairs():
        if not iso_equivalent(TraceAlgebra(a), TraceAlgebra(b)):
            return f"{name}: expected isomorphic"
    for name, a, b in corpus.unequal_invariant_pairs():
        if iso_equivalent(TraceAlgebra(a), TraceAlgebra(b)):
            return f"{name}: expected non-isomorphic"
    return None


@check("oracle-equivalence")
def check_oracle(ctx: SuiteContext) -> Optional[str]:
    named = list(corpus.automata().items())
    named += [(f"random #{i} (seed {ctx.seed})", a) for i, a in enumerate(ctx.random())]
    for name, a in named:
        if not set_eq(derivative_naive(a), derivative(a)):
            return f"{name}: derivatives differ"
        if not _same_report(rank_naive(a), rank_degree(a)):
            return f"{name}: rank reports differ"
    return None


@check("isolation-bruteforce")
def check_isolation(ctx: SuiteContext) -> Optional[str]:
    for name, a in corpus.automata().items():
        for w in isolated_points(a, 4):
            if isolation_bruteforce(a, w, _isolation_bound(a, w)) is not True or point_rank(a, w) != RankValue.of(0):
                return f"{name}: {w} should be isolated"
        if not derivative(a).is_empty():
            w = find_accumulation_point(a)
            if isolation_bruteforce(a, w, _isolation_bound(a, w)) is not None:
                return f"{name}: accumulation point {w} reported isolated"
    return None


@check("sample-coherence")
def check_sampling(ctx: SuiteContext) -> Optional[str]:
    for text in corpus.DSL_TEXTS:
        report = sample_coherence(parse(text), config.SAMPLE_GENERATORS)
        if not report.passed:
            return f"{text}: {report.detail} {report.counterexample}"
    return None


def _run(ctx: SuiteContext, name: str, fn: Check) -> CheckResult:
    start = time.perf_counter()
    try:
        detail = fn(ctx)
    except CantorRankException as err:
        detail = f"{err.code}: {err.message}"
    except Exception as err:
        logger.exception("check %s crashed", name)
        detail = f"{type(err).__name__}: {err}"
    seconds = time.perf_counter() - start
    passed = detail is None
    logger.info("%s %s in %.2fs", "PASS" if passed else "FAIL", name, seconds)
    return CheckResult(name=name, passed=passed, seconds=seconds, detail=detail or "", seed=ctx.seed)


def run_suite(seed: Optional[int] = None, random_count: Optional[int] = None, workers: Optional[int] = None) -> SuiteReport:
    ctx = SuiteContext(
        seed=config.CHECK_SUITE_SEED if seed is None else seed,
        random_count=config.CHECK_SUITE_RANDOM_AUTOMATA if random_count is None else random_count,
        pair_count=config.CHECK_SUITE_RANDOM_PAIRS if random_count is None else max(1, random_count // 2),
    )
    width = config.CHECK_SUITE_WORKERS if workers is None else workers
    with ThreadPoolExecutor(max_workers=max(1, width)) as pool:
        results = list(pool.map(lambda item: _run(ctx, *item), CHECKS))
    return SuiteReport(seed=ctx.seed, results=tuple(results))
