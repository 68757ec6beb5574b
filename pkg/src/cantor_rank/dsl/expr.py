"""
Family expressions: a small combinator language for countable families of points.

    Empty | Singleton(w) | DisjointUnion((prefix, sub), ...) | OmegaSum(sub, k)
    | DiagSum(λ) | FullSpace | Canon(α, n)

OmegaSum places copy n of its sub-family under the prefix 1ⁿ0, k times over; DiagSum
places Canon(λ[n], 1) there instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Tuple, Union

from ..cantor.words import UPWord
from ..errors import ValidationException, validate_bits, validate_positive
from ..ordinals import OrdinalCNF, format_ordinal, is_limit


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Singleton:
    word: UPWord


@dataclass(frozen=True)
class DisjointUnion:
    branches: Tuple[Tuple[str, "FamilyExpr"], ...]

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple((p, sub) for p, sub in self.branches))
        if not self.branches:
            raise ValidationException("union needs at least one branch")
        prefixes = [p for p, _ in self.branches]
        for p in prefixes:
            validate_bits(p, "union prefix")
        clash = comparable_prefixes(prefixes)
        if clash is not None:
            raise ValidationException(f"union prefixes {clash[0]!r} and {clash[1]!r} are comparable")


@dataclass(frozen=True)
class OmegaSum:
    """OmegaSum applied `times` times; nested OmegaSums fold into one node."""

    sub: "FamilyExpr"
    times: int = 1

    def __post_init__(self):
        validate_positive(self.times, "omega repetitions")
        if isinstance(self.sub, OmegaSum):
            object.__setattr__(self, "times", self.times + self.sub.times)
            object.__setattr__(self, "sub", self.sub.sub)


@dataclass(frozen=True)
class DiagSum:
    lam: OrdinalCNF

    def __post_init__(self):
        if not is_limit(self.lam):
            raise ValidationException(f"diag needs a limit ordinal, got {format_ordinal(self.lam)}")


@dataclass(frozen=True)
class FullSpace:
    pass


@dataclass(frozen=True)
class Canon:
    alpha: OrdinalCNF
    n: int = 1

    def __post_init__(self):
        validate_positive(self.n, "canon multiplicity")


FamilyExpr = Union[Empty, Singleton, DisjointUnion, OmegaSum, DiagSum, FullSpace, Canon]


def comparable_prefixes(prefixes) -> Union[Tuple[str, str], None]:
    """First pair (p, q) where p is a prefix of q, or None."""
    ordered = sorted(prefixes)
    for p, q in zip(ordered, ordered[1:]):
        if q.startswith(p):
            return p, q
    return None


def format_expr(e: FamilyExpr) -> str:
    if isinstance(e, Empty):
        return "empty"
    if isinstance(e, Singleton):
        return f"point({e.word})"
    if isinstance(e, DisjointUnion):
        return "union(" + ", ".join(f"{p}:{format_expr(sub)}" for p, sub in e.branches) + ")"
    if isinstance(e, OmegaSum):
        return "omega(" * e.times + format_expr(e.sub) + ")" * e.times
    if isinstance(e, DiagSum):
        return f"diag({format_ordinal(e.lam)})"
    if isinstance(e, FullSpace):
        return "full"
    if isinstance(e, Canon):
        return f"canon({format_ordinal(e.alpha)}, {e.n})"
    raise TypeError(f"not a family expression: {e!r}")


def children(e: FamilyExpr) -> Tuple[FamilyExpr, ...]:
    if isinstance(e, DisjointUnion):
        return tuple(sub for _, sub in e.branches)
    if isinstance(e, OmegaSum):
        return (OmegaSum(e.sub, e.times - 1),) if e.times > 1 else (e.sub,)
    return ()


def subterms(e: FamilyExpr) -> Iterator[FamilyExpr]:
    """Preorder walk, e first."""
    yield e
    for child in children(e):
        yield from subterms(child)


def depth(e: FamilyExpr) -> int:
    if isinstance(e, OmegaSum):
        return e.times + depth(e.sub)
    return 1 + max((depth(c) for c in children(e)), default=0)
