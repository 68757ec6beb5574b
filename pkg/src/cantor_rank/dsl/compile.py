"""
Compilation of finite-rank family expressions to path automata denoting their closures.
"""

from __future__ import annotations

import logging
from typing import Dict, Optional, Tuple

from ..automaton.graph import PathAutomaton, empty_automaton, prune, relabel
from ..errors import NonCompilableException
from .evaluate import canon_expand
from .expr import Canon, DiagSum, DisjointUnion, Empty, FamilyExpr, FullSpace, OmegaSum, Singleton, format_expr

logger = logging.getLogger("cantor_rank.dsl.compile")


class _Builder:
    """Accumulates states and edges under fresh names s0, s1, ..."""

    def __init__(self):
        self.count = 0
        self.edges: Dict[Tuple[str, str], str] = {}

    def fresh(self) -> str:
        name = f"s{self.count}"
        self.count += 1
        return name

    def states(self):
        return [f"s{i}" for i in range(self.count)]

    def build(self, e: FamilyExpr) -> Optional[str]:
        """Root of the sub-automaton for e, or None when e denotes the empty family."""
        if isinstance(e, Empty):
            return None
        if isinstance(e, Singleton):
            return self._lasso(e.word.prefix, e.word.period)
        if isinstance(e, FullSpace):
            q = self.fresh()
            self.edges[(q, "0")] = q
            self.edges[(q, "1")] = q
            return q
        if isinstance(e, OmegaSum):
            r = self.build(e.sub)
            if r is None:
                return None
            for _ in range(e.times):
                sub, r = r, self.fresh()
                self.edges[(r, "1")] = r
                self.edges[(r, "0")] = sub
            return r
        if isinstance(e, DisjointUnion):
            return self._graft(e.branches)
        if isinstance(e, Canon):
            if not e.alpha.is_finite:
                raise NonCompilableException(format_expr(e))
            return self.build(canon_expand(e.alpha, e.n))
        if isinstance(e, DiagSum):
            raise NonCompilableException(format_expr(e))
        raise TypeError(f"not a family expression: {e!r}")

    def _lasso(self, prefix: str, period: str) -> str:
        chain = [self.fresh() for _ in prefix]
        cycle = [self.fresh() for _ in period]
        path = chain + cycle
        for i, b in enumerate(prefix + period):
            self.edges[(path[i], b)] = path[i + 1] if i + 1 < len(path) else cycle[0]
        return path[0]

    def _graft(self, branches) -> Optional[str]:
        roots = [(prefix, self.build(sub)) for prefix, sub in branches]
        roots = [(prefix, r) for prefix, r in roots if r is not None]
        if not roots:
            return None
        if len(roots) == 1 and roots[0][0] == "":
            return roots[0][1]
        nodes = {"": self.fresh()}
        for prefix, r in roots:
            for i in range(1, len(prefix)):
                if prefix[:i] not in nodes:
                    nodes[prefix[:i]] = self.fresh()
            self.edges[(nodes[prefix[:-1]], prefix[-1])] = r
        for p, q in nodes.items():
            if p:
                self.edges[(nodes[p[:-1]], p[-1])] = q
        return nodes[""]


def compile_expr(e: FamilyExpr) -> PathAutomaton:
    """Pruned automaton whose path set is the closure of the family."""
    builder = _Builder()
    root = builder.build(e)
    if root is None:
        return empty_automaton()
    automaton = relabel(prune(PathAutomaton(builder.states(), root, builder.edges)))
    logger.debug("compiled %s to %d state(s)", format_expr(e), len(automaton))
    return automaton