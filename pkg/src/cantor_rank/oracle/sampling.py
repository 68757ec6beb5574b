"""
Sampling checks: generators against compiled automata, and isolation by cylinder search.
"""

from __future__ import annotations

import logging
from typing import Callable, List, Optional

from ..automaton.derivative import deterministic_suffix_states
from ..automaton.graph import PathAutomaton, lasso_from, membership, run
from ..cantor.words import UPWord
from ..dsl.compile import compile_expr
from ..dsl.expr import FamilyExpr, format_expr
from ..dsl.generators import enumerate_generators, generators_up_to
from ..errors import PreconditionException
from ..models import CoherenceReport
from ..util import config
from .naive import single_path

logger = logging.getLogger("cantor_rank.oracle.sampling")


def isolated_points(a: PathAutomaton, max_access: int) -> List[UPWord]:
    """Isolated points whose run enters the deterministic suffix within max_access steps."""
    if a.is_empty():
        return []
    isolated = deterministic_suffix_states(a)
    points = []
    stack = [(a.root, "")]
    while stack:
        q, path = stack.pop()
        if q in isolated:
            points.append(lasso_from(a, q, path))
            continue
        if len(path) == max_access:
            continue
        for b, t in a.successors(q):
            stack.append((t, path + b))
    return sorted(set(points), key=UPWord.sort_key)


def sample_coherence(
    e: FamilyExpr,
    n: int,
    compiler: Callable[[FamilyExpr], PathAutomaton] = compile_expr,
    access_depth: Optional[int] = None,
) -> CoherenceReport:
    """Generators lie in the compiled closure, and its shallow isolated points are generators."""
    depth = config.SAMPLE_ACCESS_DEPTH if access_depth is None else access_depth
    a = compiler(e)
    generators = enumerate_generators(e, n)
    for w in generators:
        if not membership(a, w):
            logger.warning("generator %s of %s is not accepted", w, format_expr(e))
            return CoherenceReport(
                passed=False, checked=len(generators), counterexample=str(w),
                detail="generator outside the compiled family",
            )
    known = generators_up_to(e, depth)
    points = isolated_points(a, depth)
    for w in points:
        if w not in known:
            logger.warning("isolated point %s of compiled %s is not a generator", w, format_expr(e))
            return CoherenceReport(
                passed=False, checked=len(generators) + len(points), counterexample=str(w),
                detail="isolated point missing from the generators",
            )
    return CoherenceReport(passed=True, checked=len(generators) + len(points))


def isolation_bruteforce(a: PathAutomaton, w: UPWord, k_max: int) -> Optional[bool]:
    """True when some cylinder of depth <= k_max around w meets [A] only in w; None otherwise."""
    if not membership(a, w):
        raise PreconditionException(f"point {w} is not a member of the family", str(w))
    for k in range(k_max + 1):
        q = run(a, w.unfold(k))
        if single_path(a, q):
            logger.debug("%s isolated by a depth-%d cylinder", w, k)
            return True
    return None
