"""
Unit tests for ultimately periodic words and clopen sets.
"""

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cantor_rank.cantor import (
    Clopen,
    UPWord,
    first_difference,
    parse_clopen,
    parse_upword,
    up_canonicalize,
    up_eq,
    word_bit,
)
from cantor_rank.cantor.clopen import all_words
from cantor_rank.errors import ParseException, ValidationException
from cantor_rank.util import config

words = st.builds(UPWord, st.text("01", max_size=5), st.text("01", min_size=1, max_size=4))
prefix_sets = st.lists(st.text("01", max_size=4), max_size=4)


class TestUPWord:

    @pytest.mark.parametrize("prefix,period,expected", [
        ("0", "0", "(0)^w"),
        ("10", "10", "(10)^w"),
        ("", "0101", "(01)^w"),
        ("1100", "00", "11(0)^w"),
        ("011", "01", "01(10)^w"),
        ("110", "110", "(110)^w"),
        ("1", "0", "1(0)^w"),
    ])
    def test_canonical_form(self, prefix, period, expected):
        assert str(up_canonicalize(prefix, period)) == expected

    def test_equality_is_denotational(self):
        assert up_eq(UPWord("0", "10"), UPWord("", "01"))
        assert up_eq(UPWord("01", "0101"), UPWord("", "01"))
        assert not up_eq(UPWord("", "01"), UPWord("", "10"))
        assert hash(UPWord("0", "0")) == hash(UPWord("", "00"))

    def test_bits_and_unfold(self):
        w = parse_upword("10(011)^w")
        assert w.unfold(8) == "10011011"
        assert [word_bit(w, i) for i in range(5)] == list("10011")
        assert w.bit(100) == w.unfold(101)[-1]
        assert w.prepend("11") == parse_upword("1110(011)^w")

    def test_rejects_bad_parts(self):
        with pytest.raises(ValidationException):
            UPWord("2", "0")
        with pytest.raises(ValidationException):
            UPWord("0", "")

    @pytest.mark.parametrize("text", ["10(0)", "(0)^", "10", "()^w", "1(2)^w", "(0)^w1"])
    def test_parse_errors(self, text):
        with pytest.raises(ParseException):
            parse_upword(text)

    def test_parse_ignores_whitespace(self):
        assert parse_upword(" 1 0 ( 0 ) ^ w ") == UPWord("1", "0")

    def test_first_difference(self):
        assert first_difference(parse_upword("(0)^w"), parse_upword("(0)^w")) is None
        assert first_difference(parse_upword("(0)^w"), parse_upword("000(1)^w")) == 3
        assert first_difference(parse_upword("(01)^w"), parse_upword("(011)^w")) == 2

    @given(words)
    def test_canonicalization_is_idempotent(self, w):
        assert up_canonicalize(w.prefix, w.period) == w
        assert parse_upword(str(w)) == w

    @given(words, words)
    def test_difference_decides_equality(self, a, b):
        i = first_difference(a, b)
        if i is None:
            assert a == b
        else:
            assert a.unfold(i) == b.unfold(i)
            assert word_bit(a, i) != word_bit(b, i)


def _subsets(depth):
    cells = list(all_words(depth))
    for mask in range(2 ** len(cells)):
        yield Clopen.from_cells(depth, (c for i, c in enumerate(cells) if mask >> i & 1))


class TestClopen:

    def test_reduction(self):
        assert Clopen.from_cells(2, {"00", "01"}) == Clopen.cylinder("0")
        assert Clopen.from_cells(1, {"0", "1"}) == Clopen.whole()
        assert Clopen.from_cells(3, set()) == Clopen.empty()
        assert Clopen.from_prefixes(["0", "1"]).is_whole()
        assert Clopen.from_prefixes(["000", "001", "01", "1"]).is_whole()
        assert Clopen.from_prefixes(["0", "01", "011"]) == Clopen.cylinder("0")

    def test_depth_and_cells(self):
        c = Clopen.from_prefixes(["01", "1"])
        assert c.depth == 2
        assert c.allowed == frozenset({"01", "10", "11"})
        assert Clopen.whole().depth == 0 and Clopen.whole().allowed == frozenset({""})
        assert Clopen.empty().allowed == frozenset()
        with pytest.raises(ValidationException):
            Clopen.from_cells(2, {"0"})

    def test_boolean_operations(self):
        a = Clopen.cylinder("0")
        b = Clopen.cylinder("01")
        assert a.complement() == Clopen.cylinder("1")
        assert (a | Clopen.cylinder("1")).is_whole()
        assert (a & Clopen.cylinder("1")).is_empty()
        assert a & b == b
        assert b.is_subset(a) and not a.is_subset(b)
        assert ~Clopen.empty() == Clopen.whole()
        assert Clopen.cylinder("1") & Clopen.from_cells(2, {"10", "11"}) == Clopen.cylinder("1")

    def test_contains(self):
        c = Clopen.from_prefixes(["01", "1"])
        assert c.contains(parse_upword("0(1)^w"))
        assert c.contains(parse_upword("(1)^w"))
        assert not c.contains(parse_upword("(0)^w"))
        assert not Clopen.empty().contains(parse_upword("(0)^w"))

    def test_text(self):
        c = Clopen.cylinder("01") | Clopen.cylinder("1")
        assert str(c) == "[01*, 1*]"
        assert str(Clopen.whole()) == "[*]"
        assert str(Clopen.empty()) == "[]"
        assert parse_clopen("[01*, 1*]") == c
        assert parse_clopen("[*]") == Clopen.whole()
        assert parse_clopen("[]") == Clopen.empty()

    @pytest.mark.parametrize("text", ["01*", "[01]", "[0a*]", "[0*,,1*]"])
    def test_parse_errors(self, text):
        with pytest.raises(ParseException):
            parse_clopen(text)

    def test_depth_ceiling_applies_to_text_and_cells(self):
        parse_clopen("[" + "0" * config.MAX_CLOPEN_DEPTH + "*]")
        with pytest.raises(ValidationException):
            parse_clopen("[" + "0" * (config.MAX_CLOPEN_DEPTH + 1) + "*]")
        with pytest.raises(ValidationException):
            Clopen.cylinder("0" * (config.MAX_CLOPEN_DEPTH + 1)).allowed

    def test_deep_cylinders(self):
        deep = "0" * 40 + "1"
        c = Clopen.cylinder(deep)
        assert c.depth == 41
        rest = ~c
        assert len(rest.cover) == 41
        assert (rest | c).is_whole()
        assert (rest & c).is_empty()
        assert rest.contains(parse_upword("(0)^w"))
        assert not rest.contains(parse_upword(deep + "(0)^w"))
        assert ~rest == c

    def test_boolean_laws_exhaustively(self):
        space = list(_subsets(3))
        assert len(set(space)) == 256
        for a, b in itertools.product(space, repeat=2):
            assert ~(a | b) == ~a & ~b
            assert (a & b) | (a & ~b) == a
            assert a.is_subset(a | b)
            assert (a & b).is_subset(b)

    def test_unary_laws_at_depth_four(self):
        count = 0
        for a in _subsets(4):
            assert ~~a == a
            assert (a | ~a).is_whole()
            assert (a & ~a).is_empty()
            assert Clopen.from_cells(4, a.pad(4)) == a
            count += 1
        assert count == 2 ** 16

    def test_binary_laws_on_sampled_depth_four_pairs(self, seed):
        rng = random.Random(seed)
        cells = list(all_words(4))

        def sample():
            return Clopen.from_cells(4, (c for c in cells if rng.random() < 0.5))

        for _ in range(2000):
            a, b, c = sample(), sample(), sample()
            assert a & (b | c) == (a & b) | (a & c)
            assert ~(a & b) == ~a | ~b
            assert (a | b).pad(4) == a.pad(4) | b.pad(4)
            assert (a & b).pad(4) == a.pad(4) & b.pad(4)

    @given(prefix_sets, prefix_sets, words)
    def test_membership_respects_operations(self, p, q, w):
        a, b = Clopen.from_prefixes(p), Clopen.from_prefixes(q)
        assert (a | b).contains(w) == (a.contains(w) or b.contains(w))
        assert (a & b).contains(w) == (a.contains(w) and b.contains(w))
        assert (~a).contains(w) != a.contains(w)
        assert Clopen.from_prefixes(a.prefixes()) == a
