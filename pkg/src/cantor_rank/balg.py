"""
The Boolean algebra of clopen traces on a closed family.

Elements are clopen sets of Cantor space, identified when they cut out the same
subfamily of the carrier. The algebra is never materialized; every query is an
automaton computation on traces.
"""

from __future__ import annotations

import logging
from functools import cached_property
from typing import Optional, Tuple

from .automaton.derivative import kernel, rank_degree
from .automaton.graph import PathAutomaton, ensure_pruned
from .automaton.ops import restrict, set_eq
from .cantor.clopen import Clopen
from .errors import EmptyCarrierException, NotSuperatomicException
from .models import DerivativeReport
from .ordinals import OrdinalCNF, RankValue

logger = logging.getLogger("cantor_rank.balg")


class TraceAlgebra:
    """Handle on B(carrier); immutable view over a pruned automaton."""

    def __init__(self, carrier: PathAutomaton, name: Optional[str] = None):
        ensure_pruned(carrier, "trace algebra")
        self.carrier = carrier
        self.name = name

    def __repr__(self):
        return f"TraceAlgebra({self.name or self.carrier!r})"

    @cached_property
    def report(self) -> DerivativeReport:
        return rank_degree(self.carrier)

    def trace(self, c: Clopen) -> PathAutomaton:
        return restrict(self.carrier, c)

    def trace_eq(self, c1: Clopen, c2: Clopen) -> bool:
        return set_eq(self.trace(c1), self.trace(c2))

    def is_zero(self, c: Clopen) -> bool:
        return self.trace(c).is_empty()

    def is_atom(self, c: Clopen) -> bool:
        """The trace is a single point."""
        sub = rank_degree(self.trace(c))
        return sub.rank == RankValue.of(0) and sub.degree == 1

    def is_superatomic(self) -> bool:
        return kernel(self.carrier).is_empty()

    def cb_invariants(self) -> Tuple[OrdinalCNF, int]:
        if self.carrier.is_empty():
            raise EmptyCarrierException("cb_invariants")
        if not self.is_superatomic():
            raise NotSuperatomicException(self.name)
        return self.report.rank.ordinal, self.report.degree


def iso_equivalent(h1: TraceAlgebra, h2: TraceAlgebra) -> bool:
    """Countable superatomic algebras are isomorphic iff their CB-invariants agree."""
    left, right = h1.cb_invariants(), h2.cb_invariants()
    logger.info("iso: %s vs %s", left, right)
    return left == right
