"""
Path automata: finite deterministic edge-labelled graphs whose infinite paths from the
root form a closed subset of Cantor space.

An automaton is *pruned* when every state is reachable from the root and has an
outgoing edge, so every state lies on an infinite path. Engine operations require
pruned inputs; ``prune`` turns any raw automaton into one with the same path set.
"""

from __future__ import annotations

import logging
from collections import deque
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import networkx as nx

from ..cantor.words import UPWord
from ..errors import PreconditionException, ValidationException

logger = logging.getLogger("cantor_rank.automaton.graph")

BITS = ("0", "1")
Edge = Tuple[str, str]


class PathAutomaton:
    """Deterministic graph with partial step map (state, bit) -> state."""

    __slots__ = ("states", "root", "_edges", "_graph")

    def __init__(self, states: Iterable[str], root: Optional[str], edges: Mapping[Edge, str]):
        states = frozenset(states)
        if states and root not in states:
            raise ValidationException(f"root {root!r} is not a state")
        if not states and root is not None:
            raise ValidationException("an automaton without states has no root")
        table: Dict[Edge, str] = {}
        for (q, b), t in edges.items():
            if b not in BITS:
                raise ValidationException(f"edge label must be 0 or 1, got {b!r}")
            if q not in states or t not in states:
                raise ValidationException(f"edge {q} -{b}-> {t} uses an unknown state")
            table[(q, b)] = t
        self.states = states
        self.root = root
        self._edges = MappingProxyType(table)
        self._graph = None

    # ---------- structure ----------

    @property
    def edges(self) -> Mapping[Edge, str]:
        return self._edges

    def step(self, q: str, b: str) -> Optional[str]:
        return self._edges.get((q, b))

    def successors(self, q: str) -> List[Tuple[str, str]]:
        return [(b, self._edges[(q, b)]) for b in BITS if (q, b) in self._edges]

    def out_degree(self, q: str) -> int:
        return sum(1 for b in BITS if (q, b) in self._edges)

    def is_empty(self) -> bool:
        return not self.states

    def __len__(self):
        return len(self.states)

    def graph(self) -> nx.DiGraph:
        """State graph for reachability queries (labels kept on the 'bits' attribute)."""
        if self._graph is None:
            g = nx.DiGraph()
            g.add_nodes_from(self.states)
            for (q, b), t in self._edges.items():
                if g.has_edge(q, t):
                    g[q][t]["bits"] += b
                else:
                    g.add_edge(q, t, bits=b)
            self._graph = g
        return self._graph

    def reachable_from(self, q: str) -> frozenset:
        """States reachable from q, q included."""
        return frozenset(nx.descendants(self.graph(), q)) | {q}

    def is_pruned(self) -> bool:
        if self.is_empty():
            return True
        if self.reachable_from(self.root) != self.states:
            return False
        return all(self.out_degree(q) for q in self.states)

    def structure(self):
        """Hashable structural signature (root, states, edges)."""
        return self.root, self.states, frozenset(self._edges.items())

    def induced(self, keep: Iterable[str]) -> "PathAutomaton":
        """Raw sub-automaton on the kept states; empty when the root is dropped."""
        keep = frozenset(keep) & self.states
        if self.root not in keep:
            return empty_automaton()
        edges = {(q, b): t for (q, b), t in self._edges.items() if q in keep and t in keep}
        return PathAutomaton(keep, self.root, edges)

    def __repr__(self):
        return f"PathAutomaton(states={len(self.states)}, root={self.root!r}, edges={len(self._edges)})"


# ---------- builders ----------

def empty_automaton() -> PathAutomaton:
    return PathAutomaton((), None, {})


def full_binary() -> PathAutomaton:
    return PathAutomaton(("q0",), "q0", {("q0", "0"): "q0", ("q0", "1"): "q0"})


def from_word(w: UPWord, tag: str = "q") -> PathAutomaton:
    """Chain for the prefix followed by a lasso for the period."""
    chain = [f"{tag}{i}" for i in range(len(w.prefix))]
    cycle = [f"{tag}{len(chain) + j}" for j in range(len(w.period))]
    edges = {}
    for i, b in enumerate(w.prefix):
        edges[(chain[i], b)] = chain[i + 1] if i + 1 < len(chain) else cycle[0]
    for j, b in enumerate(w.period):
        edges[(cycle[j], b)] = cycle[(j + 1) % len(cycle)]
    states = chain + cycle
    return PathAutomaton(states, states[0], edges)


def ensure_pruned(a: PathAutomaton, operation: str = "operation") -> None:
    if not a.is_pruned():
        raise PreconditionException(f"{operation} requires a pruned automaton")


def prune(a: PathAutomaton) -> PathAutomaton:
    """Drop unreachable states, then states with no infinite continuation."""
    if a.is_empty():
        return a
    alive = set(a.reachable_from(a.root))
    rounds = 0
    while True:
        dead = {q for q in alive if not any(t in alive for _, t in a.successors(q))}
        if not dead:
            break
        alive -= dead
        rounds += 1
    logger.debug("prune: %d -> %d states after %d round(s)", len(a.states), len(alive), rounds)
    pruned = a.induced(alive)
    if pruned.is_empty():
        return pruned
    return pruned.induced(pruned.reachable_from(pruned.root))


def access_words(a: PathAutomaton) -> Dict[str, str]:
    """Shortest access word of every reachable state (0 explored before 1)."""
    if a.is_empty():
        return {}
    words = {a.root: ""}
    queue = deque([a.root])
    while queue:
        q = queue.popleft()
        for b, t in a.successors(q):
            if t not in words:
                words[t] = words[q] + b
                queue.append(t)
    return words


def relabel(a: PathAutomaton, tag: str = "q") -> PathAutomaton:
    """Rename states q0, q1, ... in breadth-first access order."""
    if a.is_empty():
        return a
    order = sorted(access_words(a).items(), key=lambda kv: (len(kv[1]), kv[1]))
    names = {q: f"{tag}{i}" for i, (q, _) in enumerate(order)}
    edges = {(names[q], b): names[t] for (q, b), t in a.edges.items() if q in names and t in names}
    return PathAutomaton(names.values(), names[a.root], edges)


def run(a: PathAutomaton, bits: str, start: Optional[str] = None) -> Optional[str]:
    """State reached after reading bits, or None when the run dies."""
    q = a.root if start is None else start
    for b in bits:
        if q is None:
            return None
        q = a.step(q, b)
    return q


def membership(a: PathAutomaton, w: UPWord) -> bool:
    """True iff the run of w from the root exists forever."""
    if a.is_empty():
        return False
    q = run(a, w.prefix)
    seen = set()
    while q is not None:
        if q in seen:
            return True
        seen.add(q)
        q = run(a, w.period, q)
    return False


def lasso_from(a: PathAutomaton, q: str, prefix: str = "") -> UPWord:
    """The unique infinite path from a state whose reachable states all have out-degree 1."""
    bits = []
    position = {}
    while q not in position:
        position[q] = len(bits)
        (b, t), = a.successors(q)
        bits.append(b)
        q = t
    cut = position[q]
    word = "".join(bits)
    return UPWord(prefix + word[:cut], word[cut:])
