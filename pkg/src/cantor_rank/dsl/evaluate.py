"""
Symbolic rank, degree and e-spectrum of family expressions, by structural recursion.
"""

from __future__ import annotations

import logging
from functools import reduce
from typing import Tuple

from ..cantor.words import UPWord
from ..errors import InvariantViolation
from ..models import Profile
from ..ordinals import Cardinal, OrdinalCNF, RankValue, ord_add_nat, split_finite
from .expr import Canon, DiagSum, DisjointUnion, Empty, FamilyExpr, FullSpace, OmegaSum, Singleton
from .parser import parse

logger = logging.getLogger("cantor_rank.dsl.evaluate")

ZEROS = UPWord("", "0")
ONES = UPWord("", "1")


def comb_prefixes(n: int) -> Tuple[str, ...]:
    """0, 10, ..., 1^(n-2)0, 1^(n-1): n pairwise incomparable prefixes."""
    if n == 1:
        return ("",)
    return tuple("1" * i + "0" for i in range(n - 1)) + ("1" * (n - 1),)


def canon_expand(alpha: OrdinalCNF, n: int = 1) -> FamilyExpr:
    """Canonical expression of rank alpha and degree n."""
    if n > 1:
        block = canon_expand(alpha, 1)
        return DisjointUnion(tuple((p, block) for p in comb_prefixes(n)))
    lam, m = split_finite(alpha)
    core = DiagSum(lam) if lam else Singleton(ZEROS)
    return OmegaSum(core, m) if m else core


def _empty() -> Profile:
    return Profile(rank=RankValue.minus_one(), espec=Cardinal.finite(0))


def _perfect() -> Profile:
    return Profile(rank=RankValue.infinity(), espec=Cardinal.continuum())


def _limit_block(rank: OrdinalCNF, espec: Cardinal) -> Profile:
    return Profile(rank=RankValue.of(rank), degree=1, top_points=(ONES,), espec=espec)


def _union(branches) -> Profile:
    profiles = [(prefix, evaluate(sub)) for prefix, sub in branches]
    top_rank = max(p.rank for _, p in profiles)
    if top_rank.is_infinity:
        return _perfect()
    if top_rank.is_minus_one:
        return _empty()
    tops = sorted(
        (w.prepend(prefix) for prefix, p in profiles if p.rank == top_rank for w in p.top_points),
        key=UPWord.sort_key,
    )
    espec = reduce(lambda a, b: a + b, (p.espec for _, p in profiles))
    return Profile(rank=top_rank, degree=len(tops), top_points=tuple(tops), espec=espec)


def _omega(sub: Profile, times: int) -> Profile:
    if sub.rank.is_minus_one:
        return _empty()
    if sub.rank.is_infinity:
        return _perfect()
    rank = ord_add_nat(sub.rank.ordinal, times)
    if times == 1 and not sub.rank.ordinal:
        return _limit_block(rank, Cardinal.finite(1))
    return _limit_block(rank, Cardinal.aleph0())


def evaluate(e: FamilyExpr) -> Profile:
    if isinstance(e, Empty):
        return _empty()
    if isinstance(e, Singleton):
        return Profile(rank=RankValue.of(0), degree=1, top_points=(e.word,), espec=Cardinal.finite(0))
    if isinstance(e, FullSpace):
        return _perfect()
    if isinstance(e, DisjointUnion):
        return _union(e.branches)
    if isinstance(e, OmegaSum):
        return _omega(evaluate(e.sub), e.times)
    if isinstance(e, DiagSum):
        return _limit_block(e.lam, Cardinal.aleph0())
    if isinstance(e, Canon):
        profile = evaluate(canon_expand(e.alpha, e.n))
        if profile.rank != RankValue.of(e.alpha) or profile.degree != e.n:
            raise InvariantViolation(f"canon({e.alpha}, {e.n}) evaluated to ({profile.rank}, {profile.degree})")
        return profile
    raise TypeError(f"not a family expression: {e!r}")


def profile_of(text_or_expr) -> Profile:
    """Evaluate DSL text or an already parsed expression."""
    e = parse(text_or_expr) if isinstance(text_or_expr, str) else text_or_expr
    profile = evaluate(e)
    logger.info("evaluated %s: rank %s", type(e).__name__, profile.rank)
    return profile
