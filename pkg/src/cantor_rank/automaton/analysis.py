"""
Structural questions about closed families: least generating sets, 2-tree
witnesses of infinite rank, α-minimal decompositions and e-minimal neighbourhoods.
"""

from __future__ import annotations

import itertools
import logging
from collections import deque
from typing import List, Optional

import networkx as nx

from ..cantor.clopen import Clopen
from ..cantor.words import first_difference
from ..errors import EmptyCarrierException, InvariantViolation, PreconditionException
from ..models import DecompositionPart, GeneratorCell, LeastGeneratingSetInfo, TwoTreeWitness
from ..ordinals import RankValue
from .derivative import deterministic_suffix_states, derivative, kernel, rank_degree
from .graph import PathAutomaton, access_words, ensure_pruned, lasso_from
from .ops import restrict

logger = logging.getLogger("cantor_rank.automaton.analysis")


def least_generating_set_info(a: PathAutomaton) -> LeastGeneratingSetInfo:
    """A least generating set exists iff the isolated points are dense in [A]."""
    ensure_pruned(a, "least_generating_set_info")
    if a.is_empty():
        raise EmptyCarrierException("least_generating_set_info")
    isolated = deterministic_suffix_states(a)
    g = a.graph()
    reaches = set(isolated)
    for q in isolated:
        reaches |= nx.ancestors(g, q)
    access = access_words(a)
    order = sorted(a.states, key=lambda q: (len(access[q]), access[q]))
    stuck = [q for q in order if q not in reaches]
    if stuck:
        witness = Clopen.cylinder(access[stuck[0]])
        logger.debug("no least generating set: state %s reaches no isolated point", stuck[0])
        return LeastGeneratingSetInfo(exists=False, counterexample=witness)
    entries = [
        q for q in order
        if q in isolated and (q == a.root or any(
            t == q for (p, _), t in a.edges.items() if p not in isolated
        ))
    ]
    cells = tuple(
        GeneratorCell(state=q, access=access[q], point=lasso_from(a, q, access[q]))
        for q in entries
    )
    return LeastGeneratingSetInfo(exists=True, generators=cells)


def _cycle_back(a: PathAutomaton, component: frozenset, start: str, target: str) -> Optional[str]:
    """Shortest label of a path from start to target inside the component."""
    words = {start: ""}
    queue = deque([start])
    while queue:
        q = queue.popleft()
        if q == target:
            return words[q]
        for b, t in a.successors(q):
            if t in component and t not in words:
                words[t] = words[q] + b
                queue.append(t)
    return None


def two_tree_witness(a: PathAutomaton) -> Optional[TwoTreeWitness]:
    """Kernel state with two distinct cycles through it, seeding a 2-tree of sentences."""
    ensure_pruned(a, "two_tree_witness")
    k = kernel(a)
    if k.is_empty():
        return None
    components = {}
    for component in nx.strongly_connected_components(k.graph()):
        frozen = frozenset(component)
        for q in frozen:
            components[q] = frozen
    access = access_words(k)
    for q in sorted(k.states, key=lambda s: (len(access[s]), access[s])):
        component = components[q]
        succ = k.successors(q)
        if len(succ) == 2 and all(t in component for _, t in succ):
            (b0, t0), (b1, t1) = succ
            word0 = b0 + _cycle_back(k, component, t0, q)
            word1 = b1 + _cycle_back(k, component, t1, q)
            return TwoTreeWitness(state=q, word0=word0, word1=word1)
    raise InvariantViolation("nonempty kernel without a branching component")


def decompose_alpha_minimal(a: PathAutomaton) -> List[Clopen]:
    """Split [A] into ds(A) disjoint clopen parts, each of rank RS(A) and degree 1."""
    ensure_pruned(a, "decompose_alpha_minimal")
    report = rank_degree(a)
    if not report.rank.is_ordinal or not report.rank.ordinal:
        raise PreconditionException(
            f"decomposition needs an ordinal rank >= 1, got rank {report.rank}"
        )
    points = report.top_points
    if len(points) == 1:
        parts = [Clopen.whole()]
    else:
        depth = 1 + max(first_difference(p, q) for p, q in itertools.combinations(points, 2))
        cells = [Clopen.cylinder(p.unfold(depth)) for p in points[1:]]
        rest = Clopen.empty()
        for c in cells:
            rest = rest | c
        parts = [rest.complement()] + cells
    for part in parts:
        sub = rank_degree(restrict(a, part))
        if sub.rank != report.rank or sub.degree != 1:
            raise InvariantViolation(f"part {part} has rank {sub.rank} and degree {sub.degree}")
    logger.info("decomposed rank %s family into %d part(s)", report.rank, len(parts))
    return parts


def alpha_minimal_parts(a: PathAutomaton) -> List[DecompositionPart]:
    parts = []
    for c in decompose_alpha_minimal(a):
        sub = rank_degree(restrict(a, c))
        parts.append(DecompositionPart(clopen=c, rank=sub.rank, degree=sub.degree))
    return parts


def is_alpha_minimal(a: PathAutomaton) -> bool:
    """Ordinal rank with degree 1."""
    report = rank_degree(a)
    return report.rank.is_ordinal and report.degree == 1


def is_e_minimal(a: PathAutomaton) -> bool:
    """Rank 1 and degree 1; equivalently exactly one accumulation point."""
    report = rank_degree(a)
    return report.rank == RankValue.of(1) and report.degree == 1


def is_a_minimal(a: PathAutomaton) -> bool:
    """Rank 2 and degree 1."""
    report = rank_degree(a)
    return report.rank == RankValue.of(2) and report.degree == 1


def e_minimal_neighbourhood(a: PathAutomaton) -> Optional[Clopen]:
    """A cylinder whose trace on [A] is e-minimal, if [A] has a point of rank exactly 1."""
    ensure_pruned(a, "e_minimal_neighbourhood")
    limits = derivative(a)
    if limits.is_empty():
        return None
    isolated = deterministic_suffix_states(limits)
    if not isolated:
        return None
    access = access_words(limits)
    q = min(isolated, key=lambda s: (len(access[s]), access[s]))
    return Clopen.cylinder(access[q])
