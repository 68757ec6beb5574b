"""
Ordinals below epsilon_0 in Cantor normal form, rank values and cardinal classes.

Literal syntax shared by the DSL and the CLI::

    0   5   w   w*3   w^2   w^2+w*3+2   w^w   w^(w+1)*2

``w`` denotes omega; terms are written in strictly decreasing exponent order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import total_ordering
from typing import Optional, Tuple

from .errors import ParseException, PreconditionException, ValidationException
from .util import config

logger = logging.getLogger("cantor_rank.ordinals")


@total_ordering
@dataclass(frozen=True)
class OrdinalCNF:
    """omega^e1*c1 + ... + omega^ek*ck with e1 > ... > ek; no terms means 0."""

    terms: Tuple[Tuple["OrdinalCNF", int], ...] = ()

    def __post_init__(self):
        prev = None
        for exponent, coefficient in self.terms:
            if not isinstance(exponent, OrdinalCNF):
                raise ValidationException(f"exponent must be an ordinal, got {exponent!r}")
            if not isinstance(coefficient, int) or coefficient < 1:
                raise ValidationException(f"coefficient must be a positive integer, got {coefficient!r}")
            if prev is not None and not exponent < prev:
                raise ValidationException("exponents must be strictly decreasing")
            prev = exponent

    @classmethod
    def of(cls, n: int) -> "OrdinalCNF":
        if n < 0:
            raise ValidationException(f"ordinals are non-negative, got {n}")
        return cls(((ZERO, n),)) if n else ZERO

    @classmethod
    def omega_power(cls, exponent: "OrdinalCNF", coefficient: int = 1) -> "OrdinalCNF":
        return cls(((exponent, coefficient),))

    def __lt__(self, other):
        if not isinstance(other, OrdinalCNF):
            return NotImplemented
        return ord_compare(self, other) < 0

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0])

    def as_int(self) -> Optional[int]:
        """Natural-number value, or None for infinite ordinals."""
        if not self.terms:
            return 0
        return self.terms[0][1] if self.is_finite else None

    def __str__(self):
        return format_ordinal(self)

    def __repr__(self):
        return f"OrdinalCNF({format_ordinal(self)})"


ZERO = OrdinalCNF()
ONE = OrdinalCNF(((ZERO, 1),))
OMEGA = OrdinalCNF(((ONE, 1),))


def ord_compare(a: OrdinalCNF, b: OrdinalCNF) -> int:
    """Lexicographic comparison of CNF term lists: -1, 0 or 1."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = ord_compare(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a.terms) == len(b.terms):
        return 0
    return -1 if len(a.terms) < len(b.terms) else 1


def ord_succ(a: OrdinalCNF) -> OrdinalCNF:
    return ord_add_nat(a, 1)


def ord_add_nat(a: OrdinalCNF, m: int) -> OrdinalCNF:
    """a + m for a natural number m."""
    if m < 0:
        raise ValidationException(f"can only add a natural number, got {m}")
    if not m:
        return a
    if a.terms and not a.terms[-1][0]:
        return OrdinalCNF(a.terms[:-1] + ((ZERO, a.terms[-1][1] + m),))
    return OrdinalCNF(a.terms + ((ZERO, m),))


def split_finite(a: OrdinalCNF) -> Tuple[OrdinalCNF, int]:
    """(lam, m) with a = lam + m and lam zero or a limit."""
    if a.terms and not a.terms[-1][0]:
        return OrdinalCNF(a.terms[:-1]), a.terms[-1][1]
    return a, 0


def is_limit(a: OrdinalCNF) -> bool:
    return bool(a.terms) and bool(a.terms[-1][0])


def is_successor(a: OrdinalCNF) -> bool:
    return bool(a.terms) and not a.terms[-1][0]


def ord_pred(a: OrdinalCNF) -> OrdinalCNF:
    """Predecessor of a successor ordinal."""
    if not is_successor(a):
        raise PreconditionException(f"ordinal {a} has no predecessor")
    head, (_, c) = a.terms[:-1], a.terms[-1]
    return OrdinalCNF(head + ((ZERO, c - 1),)) if c > 1 else OrdinalCNF(head)


def fund_seq(lam: OrdinalCNF, n: int) -> OrdinalCNF:
    """n-th element of the standard fundamental sequence of a limit ordinal."""
    if not is_limit(lam):
        raise PreconditionException(f"fundamental sequences need a limit ordinal, got {lam}")
    if n < 0:
        raise ValidationException(f"sequence index must be non-negative, got {n}")
    exponent, c = lam.terms[-1]
    base = lam.terms[:-1] + (((exponent, c - 1),) if c > 1 else ())
    if is_successor(exponent):
        tail = (ord_pred(exponent), n + 1)
    else:
        tail = (fund_seq(exponent, n), 1)
    return OrdinalCNF(base + (tail,))


def cofinal_index(lam: OrdinalCNF, beta: OrdinalCNF, limit: Optional[int] = None) -> Optional[int]:
    """Least n <= limit with fund_seq(lam, n) >= beta, or None."""
    bound = config.FUND_SEQ_SEARCH_LIMIT if limit is None else limit
    for n in range(bound + 1):
        if fund_seq(lam, n) >= beta:
            return n
    return None


# ---------- literal syntax ----------

def format_ordinal(a: OrdinalCNF) -> str:
    if not a.terms:
        return "0"
    parts = []
    for exponent, c in a.terms:
        if not exponent:
            parts.append(str(c))
            continue
        if exponent == ONE:
            text = "w"
        elif exponent.is_finite or exponent == OMEGA:
            text = f"w^{format_ordinal(exponent)}"
        else:
            text = f"w^({format_ordinal(exponent)})"
        if c > 1:
            text += f"*{c}"
        parts.append(text)
    return "+".join(parts)


def _read_nat(text: str, pos: int) -> Tuple[int, int]:
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if start == pos:
        raise ParseException("expected a natural number", start, text)
    return int(text[start:pos]), pos


def _read_exponent(text: str, pos: int, nesting: int) -> Tuple[OrdinalCNF, int]:
    if pos < len(text) and text[pos] == "(":
        exponent, pos = parse_ordinal_at(text, pos + 1, nesting + 1)
        if pos >= len(text) or text[pos] != ")":
            raise ParseException("expected ')' closing exponent", pos, text)
        return exponent, pos + 1
    if pos < len(text) and text[pos] == "w":
        return OMEGA, pos + 1
    n, pos = _read_nat(text, pos)
    return OrdinalCNF.of(n), pos


def parse_ordinal_at(text: str, pos: int = 0, nesting: int = 0) -> Tuple[OrdinalCNF, int]:
    """Parse an ordinal literal starting at pos; returns (ordinal, next position)."""
    if nesting > config.DSL_MAX_NESTING:
        raise ParseException(f"exponents nest deeper than {config.DSL_MAX_NESTING} levels", pos, text)
    start = pos
    terms = []
    while True:
        if pos < len(text) and text[pos] == "w":
            pos += 1
            exponent = ONE
            if pos < len(text) and text[pos] == "^":
                exponent, pos = _read_exponent(text, pos + 1, nesting)
                if not exponent:
                    raise ParseException("exponent 0 is written as a natural number", pos, text)
            coefficient = 1
            if pos < len(text) and text[pos] == "*":
                coefficient, pos = _read_nat(text, pos + 1)
                if coefficient < 1:
                    raise ParseException("coefficient must be positive", pos, text)
            terms.append((exponent, coefficient))
        else:
            n, pos = _read_nat(text, pos)
            if n == 0 and (terms or (pos < len(text) and text[pos] == "+")):
                raise ParseException("zero cannot appear inside a sum", pos, text)
            if n:
                terms.append((ZERO, n))
        if pos < len(text) and text[pos] == "+":
            pos += 1
            continue
        break
    for (e1, _), (e2, _) in zip(terms, terms[1:]):
        if not e2 < e1:
            raise ParseException("terms must be in strictly decreasing exponent order", start, text)
    return OrdinalCNF(tuple(terms)), pos


def parse_ordinal(text: str) -> OrdinalCNF:
    compact = "".join(text.split())
    value, pos = parse_ordinal_at(compact, 0)
    if pos != len(compact):
        raise ParseException(f"unexpected {compact[pos]!r} in ordinal", pos, text)
    return value


# ---------- rank values ----------

_MINUS_ONE, _ORDINAL, _INFINITY = "minus_one", "ordinal", "infinity"


@total_ordering
@dataclass(frozen=True)
class RankValue:
    """MinusOne < Ord(0) < Ord(1) < ... < Infinity."""

    kind: str
    ordinal: Optional[OrdinalCNF] = None

    @classmethod
    def minus_one(cls) -> "RankValue":
        return cls(_MINUS_ONE)

    @classmethod
    def infinity(cls) -> "RankValue":
        return cls(_INFINITY)

    @classmethod
    def of(cls, value) -> "RankValue":
        if isinstance(value, int):
            value = OrdinalCNF.of(value)
        return cls(_ORDINAL, value)

    @property
    def is_minus_one(self) -> bool:
        return self.kind == _MINUS_ONE

    @property
    def is_ordinal(self) -> bool:
        return self.kind == _ORDINAL

    @property
    def is_infinity(self) -> bool:
        return self.kind == _INFINITY

    def _key(self):
        return {_MINUS_ONE: 0, _ORDINAL: 1, _INFINITY: 2}[self.kind]

    def __lt__(self, other):
        if not isinstance(other, RankValue):
            return NotImplemented
        if self.is_ordinal and other.is_ordinal:
            return self.ordinal < other.ordinal
        return self._key() < other._key()

    def __str__(self):
        if self.is_minus_one:
            return "-1"
        if self.is_infinity:
            return "infty"
        return format_ordinal(self.ordinal)


def parse_rank(text: str) -> RankValue:
    text = text.strip()
    if text == "-1":
        return RankValue.minus_one()
    if text in ("infty", "inf", "infinity"):
        return RankValue.infinity()
    return RankValue.of(parse_ordinal(text))


# ---------- cardinal classes ----------

_FINITE, _ALEPH0, _CONTINUUM = "finite", "aleph0", "continuum"


@total_ordering
@dataclass(frozen=True)
class Cardinal:
    """finite(n) < aleph0 < continuum."""

    kind: str
    count: int = 0

    @classmethod
    def finite(cls, n: int) -> "Cardinal":
        return cls(_FINITE, n)

    @classmethod
    def aleph0(cls) -> "Cardinal":
        return cls(_ALEPH0)

    @classmethod
    def continuum(cls) -> "Cardinal":
        return cls(_CONTINUUM)

    @property
    def is_finite(self) -> bool:
        return self.kind == _FINITE

    def _key(self):
        return ({_FINITE: 0, _ALEPH0: 1, _CONTINUUM: 2}[self.kind], self.count)

    def __lt__(self, other):
        if not isinstance(other, Cardinal):
            return NotImplemented
        return self._key() < other._key()

    def __add__(self, other: "Cardinal") -> "Cardinal":
        if self.is_finite and other.is_finite:
            return Cardinal.finite(self.count + other.count)
        return max(self, other)

    def __str__(self):
        return str(self.count) if self.is_finite else self.kind
