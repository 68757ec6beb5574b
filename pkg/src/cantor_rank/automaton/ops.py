"""
Set operations on path automata: union, intersection, clopen restriction,
semantic equality and residual-merging minimization.
"""

from __future__ import annotations

import logging
from collections import deque
from typing import Callable, Dict, Iterable, Optional, Tuple

from ..cantor.clopen import Clopen
from .graph import BITS, PathAutomaton, empty_automaton, ensure_pruned, prune, relabel

logger = logging.getLogger("cantor_rank.automaton.ops")

Pair = Tuple[Optional[str], Optional[str]]


def _product(a: PathAutomaton, b: PathAutomaton, combine: Callable[[Optional[str], Optional[str]], Optional[Pair]]) -> PathAutomaton:
    start = combine(a.root, b.root)
    if start is None:
        return empty_automaton()
    names: Dict[Pair, str] = {start: "q0"}
    edges = {}
    queue = deque([start])
    while queue:
        pa, pb = pair = queue.popleft()
        for bit in BITS:
            ta = a.step(pa, bit) if pa is not None else None
            tb = b.step(pb, bit) if pb is not None else None
            target = combine(ta, tb)
            if target is None:
                continue
            if target not in names:
                names[target] = f"q{len(names)}"
                queue.append(target)
            edges[(names[pair], bit)] = names[target]
    return minimize(prune(PathAutomaton(names.values(), "q0", edges)))


def union(a: PathAutomaton, b: PathAutomaton) -> PathAutomaton:
    """[A] ∪ [B]; a side stays dead once its run dies, so pair states stay deterministic."""
    ensure_pruned(a, "union")
    ensure_pruned(b, "union")
    return _product(a, b, lambda x, y: None if x is None and y is None else (x, y))


def intersect(a: PathAutomaton, b: PathAutomaton) -> PathAutomaton:
    ensure_pruned(a, "intersect")
    ensure_pruned(b, "intersect")
    return _product(a, b, lambda x, y: None if x is None or y is None else (x, y))


def cells_automaton(cells: Iterable[str]) -> PathAutomaton:
    """Automaton of the union of cylinders over the given prefixes."""
    cells = set(cells)
    if not cells:
        return empty_automaton()
    if "" in cells:
        return PathAutomaton(("*",), "*", {("*", "0"): "*", ("*", "1"): "*"})
    nodes = {c[:i] for c in cells for i in range(len(c))}
    states = {f"p{p}" for p in nodes} | {"*"}
    edges = {("*", "0"): "*", ("*", "1"): "*"}
    for p in nodes:
        for bit in BITS:
            child = p + bit
            if child in cells:
                edges[(f"p{p}", bit)] = "*"
            elif child in nodes:
                edges[(f"p{p}", bit)] = f"p{child}"
    return prune(PathAutomaton(states, "p", edges))


def clopen_automaton(c: Clopen) -> PathAutomaton:
    return cells_automaton(c.cover)


def restrict(a: PathAutomaton, c: Clopen) -> PathAutomaton:
    """[A] ∩ c, the definable subfamily cut out by a sentence."""
    return intersect(a, clopen_automaton(c))


def restrict_prefix(a: PathAutomaton, prefix: str) -> PathAutomaton:
    """[A] ∩ cylinder(prefix), for cylinders of any depth."""
    return intersect(a, cells_automaton([prefix]))


def set_eq(a: PathAutomaton, b: PathAutomaton) -> bool:
    """[A] = [B], by matching enabled letters on every reachable pair of states."""
    ensure_pruned(a, "set_eq")
    ensure_pruned(b, "set_eq")
    if a.is_empty() or b.is_empty():
        return a.is_empty() and b.is_empty()
    seen = {(a.root, b.root)}
    queue = deque(seen)
    while queue:
        pa, pb = queue.popleft()
        for bit in BITS:
            ta, tb = a.step(pa, bit), b.step(pb, bit)
            if (ta is None) != (tb is None):
                logger.debug("set_eq: letter %s separates %s and %s", bit, pa, pb)
                return False
            if ta is not None and (ta, tb) not in seen:
                seen.add((ta, tb))
                queue.append((ta, tb))
    return True


def is_subset(a: PathAutomaton, b: PathAutomaton) -> bool:
    return set_eq(intersect(a, b), a)


def minimize(a: PathAutomaton) -> PathAutomaton:
    """Merge states with equal residual path sets (a is pruned)."""
    if a.is_empty():
        return a
    block = {q: tuple(a.step(q, bit) is not None for bit in BITS) for q in a.states}
    count = len(set(block.values()))
    while True:
        signature = {
            q: (block[q],) + tuple(block.get(a.step(q, bit)) for bit in BITS)
            for q in a.states
        }
        ids = {sig: i for i, sig in enumerate(sorted(set(signature.values()), key=repr))}
        refined = {q: ids[signature[q]] for q in a.states}
        new_count = len(ids)
        block = refined
        if new_count == count:
            break
        count = new_count
    rep = {}
    for q in sorted(a.states):
        rep.setdefault(block[q], q)
    edges = {(rep[block[q]], bit): rep[block[t]] for (q, bit), t in a.edges.items()}
    return relabel(PathAutomaton(rep.values(), rep[block[a.root]], edges))
