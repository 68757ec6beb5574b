"""
Cantor–Bendixson analysis of path automata.

A point of [A] is isolated exactly when its run enters a deterministic-suffix
state (every state reachable from it has one outgoing edge). Deleting those
states and pruning gives the derivative; iterating it yields the rank, the
degree (number of points in the last nonempty derivative) and, for uncountable
families, the perfect kernel.
"""

from __future__ import annotations

import logging
from typing import List

import networkx as nx

from ..cantor.words import UPWord
from ..errors import PreconditionException
from ..models import DerivativeReport
from ..ordinals import Cardinal, RankValue
from .graph import PathAutomaton, ensure_pruned, lasso_from, membership, prune

logger = logging.getLogger("cantor_rank.automaton.derivative")


def deterministic_suffix_states(a: PathAutomaton) -> frozenset:
    """States from which exactly one infinite path leaves."""
    ensure_pruned(a, "deterministic_suffix_states")
    branching = [q for q in a.states if a.out_degree(q) == 2]
    g = a.graph()
    blocked = set(branching)
    for q in branching:
        blocked |= nx.ancestors(g, q)
    return a.states - blocked


def derivative(a: PathAutomaton) -> PathAutomaton:
    """[A] minus its isolated points."""
    if a.is_empty():
        return a
    isolated = deterministic_suffix_states(a)
    if not isolated:
        return a
    return prune(a.induced(a.states - isolated))


def derivative_chain(a: PathAutomaton) -> List[PathAutomaton]:
    """A, A', A'', ... up to the first empty derivative or nonempty fixpoint."""
    ensure_pruned(a, "derivative_chain")
    chain = [a]
    current = a
    while not current.is_empty():
        nxt = derivative(current)
        if nxt.states == current.states:
            break
        chain.append(nxt)
        current = nxt
    logger.debug("derivative chain: %s", [len(x.states) for x in chain])
    return chain


def enumerate_points(a: PathAutomaton) -> List[UPWord]:
    """All points of a finite path set (every run ends in a deterministic suffix)."""
    if a.is_empty():
        return []
    isolated = deterministic_suffix_states(a)
    points = []
    stack = [(a.root, "", frozenset())]
    while stack:
        q, prefix, visited = stack.pop()
        if q in isolated:
            points.append(lasso_from(a, q, prefix))
            continue
        if q in visited:
            raise PreconditionException("path set is infinite; points cannot be enumerated")
        for b, t in reversed(a.successors(q)):
            stack.append((t, prefix + b, visited | {q}))
    return sorted(points, key=UPWord.sort_key)


def rank_degree(a: PathAutomaton) -> DerivativeReport:
    chain = derivative_chain(a)
    last = chain[-1]
    if a.is_empty():
        report = DerivativeReport(chain=tuple(chain), rank=RankValue.minus_one())
    elif not last.is_empty():
        report = DerivativeReport(chain=tuple(chain), rank=RankValue.infinity())
    else:
        top = enumerate_points(chain[-2])
        report = DerivativeReport(
            chain=tuple(chain),
            rank=RankValue.of(len(chain) - 2),
            degree=len(top),
            top_points=tuple(top),
        )
    logger.info("rank_degree: %d states -> rank %s", len(a.states), report.rank)
    return report


def kernel(a: PathAutomaton) -> PathAutomaton:
    """Perfect kernel: the derivative fixpoint, possibly empty."""
    if a.is_empty():
        return a
    return derivative_chain(a)[-1]


def has_branching_component(a: PathAutomaton) -> bool:
    """True iff some strongly connected component carries two distinct cycles."""
    g = a.graph()
    for component in nx.strongly_connected_components(g):
        for q in component:
            if sum(1 for _, t in a.successors(q) if t in component) == 2:
                return True
    return False


def cardinality_class(a: PathAutomaton) -> Cardinal:
    report = rank_degree(a)
    if report.rank.is_minus_one:
        return Cardinal.finite(0)
    if report.rank.is_infinity:
        return Cardinal.continuum()
    if not report.rank.ordinal:
        return Cardinal.finite(report.degree)
    return Cardinal.aleph0()


def espectrum(a: PathAutomaton) -> Cardinal:
    """Number of closure points beyond the isolated (least generating) points."""
    ensure_pruned(a, "espectrum")
    return cardinality_class(derivative(a))


def is_accumulation_point(a: PathAutomaton, w: UPWord) -> bool:
    ensure_pruned(a, "is_accumulation_point")
    return membership(derivative(a), w)


def point_rank(a: PathAutomaton, w: UPWord) -> RankValue:
    """Largest α with w in the α-th derivative; infinity inside the kernel."""
    ensure_pruned(a, "point_rank")
    if not membership(a, w):
        raise PreconditionException(f"point {w} is not a member of the family", str(w))
    chain = derivative_chain(a)
    if not chain[-1].is_empty() and membership(chain[-1], w):
        return RankValue.infinity()
    alpha = max(i for i, layer in enumerate(chain) if membership(layer, w))
    return RankValue.of(alpha)


def find_accumulation_point(a: PathAutomaton) -> UPWord:
    """Greedy lasso inside the derivative: follow edges until a state repeats."""
    ensure_pruned(a, "find_accumulation_point")
    limits = derivative(a)
    if limits.is_empty():
        raise PreconditionException("family is finite and has no accumulation point")
    q, bits, position = limits.root, [], {}
    while q not in position:
        position[q] = len(bits)
        b, t = limits.successors(q)[0]
        bits.append(b)
        q = t
    word = "".join(bits)
    cut = position[q]
    return UPWord(word[:cut], word[cut:])

