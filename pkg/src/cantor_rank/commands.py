"""
Command handlers behind the ``cantor-rank`` CLI.

Every handler takes plain arguments (texts, paths), calls the engine and returns a
report model; printing and exit codes are left to ``main``.
"""

import logging
from pathlib import Path
from typing import Optional

from .automaton.analysis import alpha_minimal_parts, least_generating_set_info, two_tree_witness
from .automaton.derivative import cardinality_class, is_accumulation_point, kernel, point_rank, rank_degree
from .automaton.textio import dump_steps, read_automaton, to_dot, write_automaton
from .balg import TraceAlgebra, iso_equivalent
from .cantor.words import parse_upword
from .dsl.compile import compile_expr
from .dsl.evaluate import profile_of
from .dsl.parser import parse
from .models import (
    CompileReport,
    DecomposeReport,
    DerivativeReport,
    DotExport,
    InvariantsReport,
    IsoReport,
    KernelReport,
    LeastGeneratingSetInfo,
    PointReport,
    Profile,
    SuiteReport,
)
from .oracle.suite import run_suite
from .ordinals import RankValue

logger = logging.getLogger("cantor_rank.commands")


# ===============================
# Expressions
# ===============================

def cmd_eval(text: str) -> Profile:
    """Rank, degree, top points and e-spectrum of a DSL expression"""
    return profile_of(text)


def cmd_compile(text: str, out: str) -> CompileReport:
    """Compile a DSL expression and write the automaton file"""
    automaton = compile_expr(parse(text))
    path = write_automaton(automaton, out)
    logger.info("compiled %r into %s", text, path)
    return CompileReport(path=str(path), states=len(automaton))


# ===============================
# Automaton files
# ===============================

def cmd_rank(path: str, dump_dir: Optional[str] = None) -> DerivativeReport:
    """Derivative chain of an automaton file, optionally dumped as DOT steps"""
    report = rank_degree(read_automaton(path))
    if dump_dir is not None:
        dump_steps(report, dump_dir)
    return report


def cmd_decompose(path: str) -> DecomposeReport:
    return DecomposeReport(parts=tuple(alpha_minimal_parts(read_automaton(path))))


def cmd_invariants(path: str) -> InvariantsReport:
    alpha, degree = TraceAlgebra(read_automaton(path), path).cb_invariants()
    return InvariantsReport(rank=RankValue.of(alpha), degree=degree)


def cmd_iso(left: str, right: str) -> IsoReport:
    h1 = TraceAlgebra(read_automaton(left), left)
    h2 = TraceAlgebra(read_automaton(right), right)
    same = iso_equivalent(h1, h2)
    (a1, d1), (a2, d2) = h1.cb_invariants(), h2.cb_invariants()
    return IsoReport(isomorphic=same, left=(RankValue.of(a1), d1), right=(RankValue.of(a2), d2))


def cmd_lgs(path: str) -> LeastGeneratingSetInfo:
    return least_generating_set_info(read_automaton(path))


def cmd_kernel(path: str) -> KernelReport:
    automaton = read_automaton(path)
    return KernelReport(
        kernel=kernel(automaton),
        cardinality=cardinality_class(automaton),
        two_tree=two_tree_witness(automaton),
    )


def cmd_acc(path: str, point: str) -> PointReport:
    w = parse_upword(point)
    return PointReport(point=w, accumulation=is_accumulation_point(read_automaton(path), w))


def cmd_pointrank(path: str, point: str) -> PointReport:
    w = parse_upword(point)
    return PointReport(point=w, rank=point_rank(read_automaton(path), w))


def cmd_export_dot(path: str, out: Optional[str] = None) -> DotExport:
    dot = to_dot(read_automaton(path), Path(path).stem)
    if out is None:
        return DotExport(source=path, dot=dot)
    Path(out).write_text(dot, encoding="utf-8")
    return DotExport(source=path, dot=dot, path=out)


# ===============================
# Acceptance battery
# ===============================

def cmd_check_suite(seed: Optional[int] = None, random_count: Optional[int] = None) -> SuiteReport:
    report = run_suite(seed=seed, random_count=random_count)
    logger.info("check-suite: %d check(s), %d failed", len(report.results), len(report.failed()))
    return report
