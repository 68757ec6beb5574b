"""
Fair enumeration of the generator points of a family expression.

Every generator gets a weight: the sum of the copy indices n chosen at OmegaSum
and DiagSum nodes along its derivation (FullSpace words weigh |u| + |v| - 1).
Only finitely many generators share a weight, so listing by increasing weight
reaches every generator eventually.
"""

from __future__ import annotations

import itertools
import logging
from typing import Dict, Iterator, List, Tuple

from ..cantor.words import UPWord
from ..errors import ValidationException
from ..ordinals import fund_seq
from .evaluate import canon_expand, evaluate
from .expr import Canon, DiagSum, DisjointUnion, Empty, FamilyExpr, FullSpace, OmegaSum, Singleton

logger = logging.getLogger("cantor_rank.dsl.generators")


def _full_space(budget: int) -> Dict[UPWord, int]:
    points = {}
    for size in range(1, budget + 2):
        for cut in range(size):
            for bits in itertools.product("01", repeat=size):
                word = "".join(bits)
                prefix, period = word[:cut], word[cut:]
                w = UPWord(prefix, period)
                if w.prefix == prefix and w.period == period:
                    points[w] = size - 1
    return points


def _copy_prefixes(layers: int, budget: int) -> Iterator[Tuple[int, str]]:
    """(n, 1^c1 0 ... 1^ck 0) for every choice of copy indices c1 + ... + ck = n <= budget."""
    for n in range(budget + 1):
        for picks in itertools.combinations_with_replacement(range(layers), n):
            counts = [0] * layers
            for layer in picks:
                counts[layer] += 1
            yield n, "".join("1" * c + "0" for c in counts)


def generators_up_to(e: FamilyExpr, budget: int) -> Dict[UPWord, int]:
    """All generators of weight <= budget, mapped to their weight."""
    if budget < 0 or isinstance(e, Empty):
        return {}
    if isinstance(e, Singleton):
        return {e.word: 0}
    if isinstance(e, FullSpace):
        return _full_space(budget)
    if isinstance(e, DisjointUnion):
        points = {}
        for prefix, sub in e.branches:
            for w, weight in generators_up_to(sub, budget).items():
                points[w.prepend(prefix)] = weight
        return points
    if isinstance(e, Canon):
        return generators_up_to(canon_expand(e.alpha, e.n), budget)
    if isinstance(e, OmegaSum):
        points = {}
        for w, weight in generators_up_to(e.sub, budget).items():
            for n, prefix in _copy_prefixes(e.times, budget - weight):
                points[w.prepend(prefix)] = weight + n
        return points
    if isinstance(e, DiagSum):
        points = {}
        for n in range(budget + 1):
            for w, weight in generators_up_to(Canon(fund_seq(e.lam, n), 1), budget - n).items():
                points[w.prepend("1" * n + "0")] = weight + n
        return points
    raise TypeError(f"not a family expression: {e!r}")


def enumerate_generators(e: FamilyExpr, limit: int) -> List[UPWord]:
    """First `limit` generators, by weight and then by word size."""
    if limit < 0:
        raise ValidationException(f"generator limit must be non-negative, got {limit}")
    rank = evaluate(e).rank
    if rank.is_minus_one or limit == 0:
        return []
    finite = rank.is_ordinal and not rank.ordinal
    budget = 0
    while True:
        points = generators_up_to(e, budget)
        if finite or len(points) >= limit:
            break
        budget += 1
    ordered = sorted(points, key=lambda w: (points[w],) + w.sort_key())
    logger.debug("enumerated %d generator(s) at weight budget %d", len(ordered), budget)
    return ordered[:limit]
