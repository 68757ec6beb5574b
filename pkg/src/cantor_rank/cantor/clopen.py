"""
Clopen subsets of Cantor space, held as their minimal cover by cylinders.

These are the sentence-level neighbourhoods of a family: every sentence of the
unary empty/complete language constrains finitely many coordinates. The canonical
depth k and the allowed length-k cells are derived from the cover on demand.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import FrozenSet, Iterable

from ..errors import ParseException, ValidationException, validate_bits, validate_depth
from .words import UPWord


def all_words(k: int) -> Iterable[str]:
    return ("".join(bits) for bits in itertools.product("01", repeat=k))


def _minimal_cover(prefixes: Iterable[str]) -> FrozenSet[str]:
    """Drop covered prefixes, then merge sibling pairs p0, p1 into p until none are left."""
    cover = set()
    for p in sorted(set(prefixes), key=len):
        if not any(p.startswith(q) for q in cover):
            cover.add(p)
    pending = sorted(cover, key=len, reverse=True)
    while pending:
        p = pending.pop(0)
        if not p or p not in cover:
            continue
        sibling = p[:-1] + ("1" if p[-1] == "0" else "0")
        if sibling in cover:
            cover -= {p, sibling}
            cover.add(p[:-1])
            pending.insert(0, p[:-1])
    return frozenset(cover)


@dataclass(frozen=True)
class Clopen:
    cover: FrozenSet[str]

    def __post_init__(self):
        cover = frozenset(self.cover)
        for p in cover:
            validate_bits(p, "cylinder prefix")
        object.__setattr__(self, "cover", _minimal_cover(cover))

    @classmethod
    def whole(cls) -> "Clopen":
        return cls(frozenset({""}))

    @classmethod
    def empty(cls) -> "Clopen":
        return cls(frozenset())

    @classmethod
    def cylinder(cls, prefix: str) -> "Clopen":
        validate_bits(prefix, "cylinder prefix")
        return cls(frozenset({prefix}))

    @classmethod
    def from_prefixes(cls, prefixes: Iterable[str]) -> "Clopen":
        return cls(frozenset(prefixes))

    @classmethod
    def from_cells(cls, depth: int, cells: Iterable[str]) -> "Clopen":
        """Clopen given by a depth k and a set of allowed length-k cells."""
        cells = frozenset(cells)
        for w in cells:
            validate_bits(w, "clopen cell")
            if len(w) != depth:
                raise ValidationException(f"cell {w!r} does not have depth {depth}")
        return cls(cells)

    @property
    def depth(self) -> int:
        """Least k at which the clopen is a union of length-k cells."""
        return max((len(p) for p in self.cover), default=0)

    @property
    def allowed(self) -> FrozenSet[str]:
        return self.pad(self.depth)

    def pad(self, k: int) -> FrozenSet[str]:
        """Allowed cells re-expressed at depth k >= depth."""
        validate_depth(k)
        return frozenset(p + s for p in self.cover for s in all_words(k - len(p)))

    def complement(self) -> "Clopen":
        if not self.cover:
            return Clopen.whole()
        inner = {p[:i] for p in self.cover for i in range(len(p))}
        return Clopen(frozenset(
            n + b for n in inner for b in "01"
            if n + b not in self.cover and n + b not in inner
        ))

    def __or__(self, other: "Clopen") -> "Clopen":
        return Clopen(self.cover | other.cover)

    def __and__(self, other: "Clopen") -> "Clopen":
        return Clopen(frozenset(
            p if p.startswith(q) else q
            for p in self.cover for q in other.cover
            if p.startswith(q) or q.startswith(p)
        ))

    def __invert__(self) -> "Clopen":
        return self.complement()

    def is_empty(self) -> bool:
        return not self.cover

    def is_whole(self) -> bool:
        return self.cover == frozenset({""})

    def contains(self, w: UPWord) -> bool:
        return any(w.unfold(len(p)) == p for p in self.cover)

    def is_subset(self, other: "Clopen") -> bool:
        return (self & other) == self

    def prefixes(self) -> list:
        """Minimal prefix cover in lexicographic order."""
        return sorted(self.cover)

    def __str__(self):
        return "[" + ", ".join(f"{p}*" for p in self.prefixes()) + "]"


def parse_clopen(text: str) -> Clopen:
    compact = "".join(text.split())
    if not (compact.startswith("[") and compact.endswith("]")):
        raise ParseException("clopen must be written as [p*, q*, ...]", 0, text)
    body = compact[1:-1]
    if not body:
        return Clopen.empty()
    prefixes = []
    pos = 1
    for item in body.split(","):
        if not item.endswith("*"):
            raise ParseException("each clopen cell must end with '*'", pos, text)
        bits = item[:-1]
        if any(ch not in "01" for ch in bits):
            raise ParseException(f"invalid cell {item!r}", pos, text)
        validate_depth(len(bits))
        prefixes.append(bits)
        pos += len(item) + 1
    return Clopen.from_prefixes(prefixes)
