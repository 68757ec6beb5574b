"""
Ultimately periodic infinite bit words, the finitely describable points of Cantor space.

A word ``u(v)^w`` denotes u·v·v·v... . Instances are always kept canonical:
the period is primitive and no trailing bit of the prefix can be rotated into the
cycle, so structural equality is equality of the denoted infinite words.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm
from typing import Optional, Tuple

from ..errors import ParseException, validate_bits, validate_period

_UPWORD = re.compile(r"([01]*)\(([01]+)\)\^w")


def _primitive_root(v: str) -> str:
    n = len(v)
    for p in range(1, n + 1):
        if n % p == 0 and v[:p] * (n // p) == v:
            return v[:p]
    return v


def _canonical(prefix: str, period: str) -> Tuple[str, str]:
    period = _primitive_root(period)
    while prefix and prefix[-1] == period[-1]:
        prefix = prefix[:-1]
        period = period[-1] + period[:-1]
    return prefix, period


@dataclass(frozen=True)
class UPWord:
    prefix: str
    period: str

    def __post_init__(self):
        validate_bits(self.prefix, "prefix")
        validate_period(self.period)
        prefix, period = _canonical(self.prefix, self.period)
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "period", period)

    def bit(self, i: int) -> str:
        return word_bit(self, i)

    def unfold(self, n: int) -> str:
        """First n symbols."""
        if n <= len(self.prefix):
            return self.prefix[:n]
        rest = n - len(self.prefix)
        reps = rest // len(self.period) + 1
        return (self.prefix + self.period * reps)[:n]

    def prepend(self, bits: str) -> "UPWord":
        return UPWord(bits + self.prefix, self.period)

    @property
    def size(self) -> int:
        return len(self.prefix) + len(self.period)

    def sort_key(self):
        return (self.size, self.prefix, self.period)

    def __str__(self):
        return f"{self.prefix}({self.period})^w"

    def __repr__(self):
        return f"UPWord({self})"


def up_canonicalize(prefix: str, period: str) -> UPWord:
    return UPWord(prefix, period)


def up_eq(a: UPWord, b: UPWord) -> bool:
    return a == b


def word_bit(w: UPWord, i: int) -> str:
    if i < len(w.prefix):
        return w.prefix[i]
    return w.period[(i - len(w.prefix)) % len(w.period)]


def comparison_horizon(a: UPWord, b: UPWord) -> int:
    """Length beyond which two distinct UP words are guaranteed to have differed."""
    return len(a.prefix) + len(b.prefix) + 2 * lcm(len(a.period), len(b.period))


def first_difference(a: UPWord, b: UPWord) -> Optional[int]:
    """Least index where a and b differ; None when they denote the same word."""
    for i in range(comparison_horizon(a, b)):
        if word_bit(a, i) != word_bit(b, i):
            return i
    return None


def parse_upword_at(text: str, pos: int = 0) -> Tuple[UPWord, int]:
    match = _UPWORD.match(text, pos)
    if not match:
        raise ParseException("expected an ultimately periodic word like 110(0)^w", pos, text)
    return UPWord(match.group(1), match.group(2)), match.end()


def parse_upword(text: str) -> UPWord:
    compact = "".join(text.split())
    word, pos = parse_upword_at(compact, 0)
    if pos != len(compact):
        raise ParseException(f"unexpected {compact[pos]!r} after word", pos, text)
    return word
