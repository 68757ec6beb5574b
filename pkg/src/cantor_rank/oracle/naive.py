"""
Definition-direct recomputation of derivatives and ranks.

Nothing here goes through the graph library or the main derivative code: reachability
is a plain depth-first search and points of finite sets are read off path by path.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Set

from ..automaton.graph import PathAutomaton, empty_automaton
from ..cantor.words import UPWord
from ..models import DerivativeReport
from ..ordinals import RankValue

logger = logging.getLogger("cantor_rank.oracle.naive")


def _reach(a: PathAutomaton, q: str) -> Set[str]:
    seen = {q}
    stack = [q]
    while stack:
        p = stack.pop()
        for bit in "01":
            t = a.step(p, bit)
            if t is not None and t not in seen:
                seen.add(t)
                stack.append(t)
    return seen


def single_path(a: PathAutomaton, q: str) -> bool:
    """Residual path set of q is one infinite word."""
    return all(sum(a.step(p, bit) is not None for bit in "01") == 1 for p in _reach(a, q))


def _cleanup(a: PathAutomaton, keep: Set[str]) -> PathAutomaton:
    """Largest sub-automaton on kept states where every state is live and reachable."""
    alive = set(keep)
    changed = True
    while changed:
        changed = False
        for q in list(alive):
            if not any(a.step(q, bit) in alive for bit in "01"):
                alive.discard(q)
                changed = True
    if a.root not in alive:
        return empty_automaton()
    reachable = {a.root}
    stack = [a.root]
    while stack:
        p = stack.pop()
        for bit in "01":
            t = a.step(p, bit)
            if t in alive and t not in reachable:
                reachable.add(t)
                stack.append(t)
    edges = {(q, bit): t for (q, bit), t in a.edges.items() if q in reachable and t in reachable}
    return PathAutomaton(reachable, a.root, edges)


def derivative_naive(a: PathAutomaton) -> PathAutomaton:
    if a.is_empty():
        return a
    isolated = {q for q in a.states if single_path(a, q)}
    return _cleanup(a, set(a.states) - isolated)


def _points(a: PathAutomaton) -> List[UPWord]:
    """Every infinite path of a finite path set, as a lasso closed at the first repeated state."""
    found: Dict[UPWord, None] = {}

    def walk(q: str, bits: str, order: Dict[str, int]):
        if q in order:
            cut = order[q]
            found[UPWord(bits[:cut], bits[cut:])] = None
            return
        order = {**order, q: len(bits)}
        for bit in "01":
            t = a.step(q, bit)
            if t is not None:
                walk(t, bits + bit, order)

    walk(a.root, "", {})
    return sorted(found, key=UPWord.sort_key)


def rank_naive(a: PathAutomaton) -> DerivativeReport:
    chain = [a]
    while not chain[-1].is_empty():
        nxt = derivative_naive(chain[-1])
        if nxt.states == chain[-1].states:
            break
        chain.append(nxt)
    if a.is_empty():
        return DerivativeReport(chain=tuple(chain), rank=RankValue.minus_one())
    if not chain[-1].is_empty():
        return DerivativeReport(chain=tuple(chain), rank=RankValue.infinity())
    top = _points(chain[-2])
    logger.debug("naive rank %d with %d top point(s)", len(chain) - 2, len(top))
    return DerivativeReport(
        chain=tuple(chain), rank=RankValue.of(len(chain) - 2), degree=len(top), top_points=tuple(top)
    )
