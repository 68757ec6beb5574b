"""
Recursive-descent parser for family expressions.

    expr := empty | full | point(UPWORD) | omega(expr) | diag(ORDINAL)
          | canon(ORDINAL, INT) | union(PREFIX:expr {, PREFIX:expr})

Whitespace is insignificant. Error positions refer to the original text.
"""

from __future__ import annotations

import logging
import re
from typing import List, Tuple

from ..cantor.words import parse_upword_at
from ..errors import ParseException, ValidationException
from ..ordinals import format_ordinal, is_limit, parse_ordinal_at
from ..util import config
from .expr import (
    Canon,
    DiagSum,
    DisjointUnion,
    Empty,
    FamilyExpr,
    FullSpace,
    OmegaSum,
    Singleton,
    comparable_prefixes,
)

logger = logging.getLogger("cantor_rank.dsl.parser")

_KEYWORD = re.compile(r"[a-z]+")
_PREFIX = re.compile(r"[01]*")
_INT = re.compile(r"[0-9]+")


class _Parser:
    def __init__(self, text: str):
        self.original = text
        self.positions: List[int] = []
        chars = []
        for i, ch in enumerate(text):
            if not ch.isspace():
                chars.append(ch)
                self.positions.append(i)
        self.text = "".join(chars)
        self.pos = 0
        self.nesting = 0

    def where(self, pos: int) -> int:
        """Position in the original text."""
        if pos < len(self.positions):
            return self.positions[pos]
        return len(self.original)

    def fail(self, message: str, pos: int = None):
        raise ParseException(message, self.where(self.pos if pos is None else pos), self.original)

    def expect(self, token: str):
        if not self.text.startswith(token, self.pos):
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            self.fail(f"expected {token!r}, found {found!r}")
        self.pos += len(token)

    def _nested(self, reader):
        try:
            value, self.pos = reader(self.text, self.pos)
        except ParseException as e:
            raise ParseException(e.message.rsplit(" at position", 1)[0], self.where(e.position), self.original)
        return value

    def parse(self) -> FamilyExpr:
        e = self.expr()
        if self.pos != len(self.text):
            self.fail(f"unexpected {self.text[self.pos]!r} after expression")
        return e

    def expr(self) -> FamilyExpr:
        if self.nesting >= config.DSL_MAX_NESTING:
            self.fail(f"expression nests deeper than {config.DSL_MAX_NESTING} levels")
        self.nesting += 1
        try:
            return self._combinator()
        finally:
            self.nesting -= 1

    def _combinator(self) -> FamilyExpr:
        start = self.pos
        match = _KEYWORD.match(self.text, self.pos)
        if not match:
            self.fail("expected one of empty, full, point, union, omega, diag, canon")
        keyword = match.group(0)
        self.pos = match.end()
        if keyword == "empty":
            return Empty()
        if keyword == "full":
            return FullSpace()
        if keyword == "point":
            self.expect("(")
            word = self._nested(parse_upword_at)
            self.expect(")")
            return Singleton(word)
        if keyword == "omega":
            self.expect("(")
            sub = self.expr()
            self.expect(")")
            return OmegaSum(sub)
        if keyword == "diag":
            self.expect("(")
            at = self.pos
            lam = self._nested(parse_ordinal_at)
            if not is_limit(lam):
                self.fail(f"diag needs a limit ordinal, got {format_ordinal(lam)}", at)
            self.expect(")")
            return DiagSum(lam)
        if keyword == "canon":
            self.expect("(")
            alpha = self._nested(parse_ordinal_at)
            self.expect(",")
            at = self.pos
            match = _INT.match(self.text, self.pos)
            if not match or int(match.group(0)) < 1:
                self.fail("canon multiplicity must be a positive integer", at)
            self.pos = match.end()
            self.expect(")")
            return Canon(alpha, int(match.group(0)))
        if keyword == "union":
            self.expect("(")
            branches: List[Tuple[str, FamilyExpr]] = []
            while True:
                prefix = _PREFIX.match(self.text, self.pos).group(0)
                self.pos += len(prefix)
                self.expect(":")
                branches.append((prefix, self.expr()))
                if self.text.startswith(",", self.pos):
                    self.pos += 1
                    continue
                break
            self.expect(")")
            clash = comparable_prefixes([p for p, _ in branches])
            if clash is not None:
                self.fail(f"comparable prefixes {clash[0]!r} and {clash[1]!r} in union", start)
            return DisjointUnion(tuple(branches))
        self.fail(f"unknown combinator {keyword!r}", start)


def parse(text: str) -> FamilyExpr:
    if len(text) > config.DSL_MAX_LENGTH:
        raise ParseException(
            f"expression longer than {config.DSL_MAX_LENGTH} characters", config.DSL_MAX_LENGTH, None
        )
    try:
        e = _Parser(text).parse()
    except ValidationException as err:
        if isinstance(err, ParseException):
            raise
        raise ParseException(err.message, 0, text) from err
    logger.debug("parsed %r", text)
    return e
