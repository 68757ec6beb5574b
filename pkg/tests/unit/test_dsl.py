"""
Unit tests for family expressions: parsing, canonical expansion, evaluation,
compilation and generator enumeration.
"""

import importlib

import pytest

from cantor_rank import corpus
from cantor_rank.automaton.derivative import rank_degree
from cantor_rank.automaton.graph import membership
from cantor_rank.cantor import parse_upword
from cantor_rank.dsl import (
    Canon,
    DiagSum,
    DisjointUnion,
    Empty,
    FullSpace,
    OmegaSum,
    Singleton,
    canon_expand,
    compile_expr,
    enumerate_generators,
    evaluate,
    format_expr,
    parse,
    profile_of,
)
from cantor_rank.dsl.evaluate import ONES, ZEROS, comb_prefixes
from cantor_rank.dsl.expr import depth, subterms
from cantor_rank.dsl.generators import generators_up_to
from cantor_rank.errors import InvariantViolation, NonCompilableException, ParseException, ValidationException
from cantor_rank.ordinals import OMEGA, Cardinal, OrdinalCNF, RankValue, parse_ordinal
from cantor_rank.util import config


def words(*texts):
    return [parse_upword(t) for t in texts]


class TestParser:

    def test_omega_point(self):
        assert parse("omega(point((0)^w))") == OmegaSum(Singleton(ZEROS))

    def test_canon(self):
        e = parse("canon(w^2+w*3+2, 2)")
        assert e == Canon(parse_ordinal("w^2+w*3+2"), 2)
        assert format_expr(e) == "canon(w^2+w*3+2, 2)"

    def test_union_and_whitespace(self):
        e = parse(" union( 0 : full , 10:empty, 11 : diag(w) ) ")
        assert e == DisjointUnion((("0", FullSpace()), ("10", Empty()), ("11", DiagSum(OMEGA))))
        assert format_expr(e) == "union(0:full, 10:empty, 11:diag(w))"

    def test_structure_helpers(self):
        e = parse("union(0:omega(omega(empty)), 1:full)")
        assert depth(e) == 4
        assert [format_expr(s) for s in subterms(e)][:2] == ["union(0:omega(omega(empty)), 1:full)", "omega(omega(empty))"]

    def test_comparable_prefixes(self):
        with pytest.raises(ParseException) as exc_info:
            parse("union(0:full, 0:empty)")
        assert "comparable" in exc_info.value.message
        assert exc_info.value.position == 0
        with pytest.raises(ParseException):
            parse("union(0:full, 01:empty)")

    def test_diag_needs_limit(self):
        with pytest.raises(ParseException) as exc_info:
            parse("diag( 3 )")
        assert exc_info.value.position == 6

    @pytest.mark.parametrize("text", [
        "",
        "bogus",
        "empty)",
        "omega(point((0)^w)",
        "point(2)",
        "canon(2, 0)",
        "canon(2)",
        "union()",
        "diag(w+w)",
    ])
    def test_syntax_errors(self, text):
        with pytest.raises(ParseException):
            parse(text)

    def test_position_is_in_original_text(self):
        with pytest.raises(ParseException) as exc_info:
            parse("omega( point( (0)^w )")
        assert exc_info.value.position == len("omega( point( (0)^w )")

    def test_length_ceiling(self):
        with pytest.raises(ParseException):
            parse("e" * (config.DSL_MAX_LENGTH + 1))

    def test_nesting_ceiling(self):
        limit = config.DSL_MAX_NESTING
        assert depth(parse("omega(" * (limit - 1) + "empty" + ")" * (limit - 1))) == limit
        with pytest.raises(ParseException) as exc_info:
            parse("omega(" * limit + "empty" + ")" * limit)
        assert "nests deeper" in exc_info.value.message

    def test_deeply_nested_unions(self):
        text = "empty"
        for _ in range(350):
            text = f"union(0:{text})"
        assert len(text) < config.DSL_MAX_LENGTH
        with pytest.raises(ParseException):
            parse(text)

    def test_exponent_tower_ceiling(self):
        limit = config.DSL_MAX_NESTING
        tower = "w^(" * limit + "1" + ")" * limit
        assert parse_ordinal(tower)
        too_deep = "w^(" * (limit + 1) + "1" + ")" * (limit + 1)
        with pytest.raises(ParseException):
            parse_ordinal(too_deep)
        with pytest.raises(ParseException):
            parse(f"canon({too_deep}, 1)")

    def test_expression_validation(self):
        with pytest.raises(ValidationException):
            DisjointUnion(())
        with pytest.raises(ValidationException):
            DisjointUnion((("1", Empty()), ("10", Empty())))
        with pytest.raises(ValidationException):
            DiagSum(OrdinalCNF.of(2))
        with pytest.raises(ValidationException):
            Canon(OMEGA, 0)
        with pytest.raises(ValidationException):
            OmegaSum(Empty(), 0)

    def test_nested_omega_folds(self):
        e = OmegaSum(OmegaSum(Singleton(ZEROS)), 2)
        assert e == OmegaSum(Singleton(ZEROS), 3)
        assert format_expr(e) == "omega(omega(omega(point((0)^w))))"
        assert depth(e) == 4
        assert parse(format_expr(e)) == e


class TestCanonExpand:

    def test_base_cases(self):
        assert canon_expand(OrdinalCNF.of(0), 1) == Singleton(ZEROS)
        assert canon_expand(OrdinalCNF.of(2), 1) == OmegaSum(OmegaSum(Singleton(ZEROS)))
        assert canon_expand(OMEGA, 1) == DiagSum(OMEGA)
        assert canon_expand(parse_ordinal("w+1"), 1) == OmegaSum(DiagSum(OMEGA))

    def test_comb(self):
        block = canon_expand(OrdinalCNF.of(1), 1)
        assert canon_expand(OrdinalCNF.of(1), 2) == DisjointUnion((("0", block), ("1", block)))
        assert comb_prefixes(1) == ("",)
        assert comb_prefixes(4) == ("0", "10", "110", "111")

    def test_long_finite_tail(self):
        assert canon_expand(OrdinalCNF.of(3000), 1) == OmegaSum(Singleton(ZEROS), 3000)
        assert canon_expand(parse_ordinal("w*2+5"), 1) == OmegaSum(DiagSum(parse_ordinal("w*2")), 5)


class TestEvaluate:

    def test_omega_of_point(self):
        p = profile_of("omega(point((0)^w))")
        assert (p.rank, p.degree, p.espec) == (RankValue.of(1), 1, Cardinal.finite(1))
        assert p.top_points == (ONES,)

    def test_canon_2_1(self):
        p = profile_of("canon(2, 1)")
        assert (p.rank, p.degree, p.espec) == (RankValue.of(2), 1, Cardinal.aleph0())

    def test_canon_omega(self):
        p = profile_of("canon(w, 1)")
        assert (p.rank, p.degree) == (RankValue.of(OMEGA), 1)
        assert p.lines() == ["rank: w", "degree: 1", "top: (1)^w", "espec: aleph0"]

    def test_union_of_two_blocks(self):
        p = profile_of("union(0:omega(point((0)^w)), 1:omega(point((0)^w)))")
        assert (p.rank, p.degree, p.espec) == (RankValue.of(1), 2, Cardinal.finite(2))
        assert p.top_points == tuple(words("(1)^w", "0(1)^w"))

    def test_empty_and_perfect(self):
        assert profile_of("empty").rank.is_minus_one
        assert profile_of("omega(empty)").rank.is_minus_one
        assert profile_of("union(0:empty, 1:empty)").espec == Cardinal.finite(0)
        for text in ("full", "omega(full)", "union(0:full, 1:canon(3, 1))"):
            p = profile_of(text)
            assert p.rank.is_infinity and p.espec == Cardinal.continuum()
            assert p.degree is None and p.top_points is None

    @pytest.mark.parametrize("alpha", ["0", "1", "3", "w", "w+2", "w*2", "w^2", "w^w", "w^2+w*3+2"])
    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_canon_invariants(self, alpha, n):
        p = evaluate(Canon(parse_ordinal(alpha), n))
        assert (p.rank, p.degree) == (RankValue.of(parse_ordinal(alpha)), n)

    def test_espec_rules(self):
        for n in range(1, 6):
            assert evaluate(Canon(OrdinalCNF.of(1), n)).espec == Cardinal.finite(n)
        for literal in ("2", "3", "w", "w+1"):
            assert evaluate(Canon(parse_ordinal(literal), 1)).espec == Cardinal.aleph0()

    def test_adding_a_branch_never_lowers_rank(self):
        base = "union(0:canon(2, 1), 10:point((1)^w))"
        grown = "union(0:canon(2, 1), 10:point((1)^w), 11:canon(1, 3))"
        assert profile_of(grown).rank >= profile_of(base).rank
        assert profile_of("union(0:canon(1, 1), 1:canon(3, 1))").rank == RankValue.of(3)

    def test_long_finite_tail(self):
        p = profile_of("canon(3000, 1)")
        assert (p.rank, p.degree, p.espec) == (RankValue.of(3000), 1, Cardinal.aleph0())
        assert p.top_points == (ONES,)
        p = profile_of("canon(w+3000, 2)")
        assert (p.rank, p.degree) == (RankValue.of(parse_ordinal("w+3000")), 2)

    def test_canon_postcondition(self, monkeypatch):
        module = importlib.import_module("cantor_rank.dsl.evaluate")
        monkeypatch.setattr(module, "canon_expand", lambda alpha, n: Singleton(ZEROS))
        with pytest.raises(InvariantViolation):
            module.evaluate(Canon(OrdinalCNF.of(2), 1))


class TestCompile:

    def test_omega_point(self, canon1):
        a = compile_expr(parse("omega(point((0)^w))"))
        assert a.structure() == canon1.structure()

    def test_canon_2_1(self):
        a = compile_expr(parse("canon(2, 1)"))
        assert len(a) == 3
        report = rank_degree(a)
        assert (report.rank, report.degree) == (RankValue.of(2), 1)

    def test_empty_and_full(self):
        assert compile_expr(Empty()).is_empty()
        assert compile_expr(parse("union(0:empty, 1:omega(empty))")).is_empty()
        assert len(compile_expr(FullSpace())) == 1

    def test_long_finite_tail(self):
        a = compile_expr(parse("canon(60, 1)"))
        assert len(a) == 61
        report = rank_degree(a)
        assert (report.rank, report.degree) == (RankValue.of(60), 1)
        assert len(compile_expr(parse("canon(3000, 1)"))) == 3001

    @pytest.mark.parametrize("text", ["diag(w)", "canon(w, 1)", "union(0:full, 1:omega(canon(w+1, 2)))"])
    def test_non_compilable(self, text):
        with pytest.raises(NonCompilableException) as exc_info:
            compile_expr(parse(text))
        assert exc_info.value.exit_code == 2

    @pytest.mark.parametrize("text", corpus.DSL_TEXTS)
    def test_closure_keeps_rank_and_degree(self, text):
        e = parse(text)
        profile, report = evaluate(e), rank_degree(compile_expr(e))
        assert profile.rank == report.rank
        assert profile.degree == report.degree
        assert set(profile.top_points or ()) == set(report.top_points or ())


class TestGenerators:

    def test_omega_point(self):
        assert enumerate_generators(parse("omega(point((0)^w))"), 3) == words("0(0)^w", "10(0)^w", "110(0)^w")

    def test_single_point(self):
        assert enumerate_generators(parse("point((1)^w)"), 5) == words("(1)^w")

    def test_canon_1_2(self):
        assert enumerate_generators(parse("canon(1, 2)"), 4) == words("(0)^w", "1(0)^w", "01(0)^w", "11(0)^w")

    def test_full_space(self):
        assert enumerate_generators(FullSpace(), 6) == words("(0)^w", "(1)^w", "(01)^w", "(10)^w", "0(1)^w", "1(0)^w")

    def test_diag_weights(self):
        assert generators_up_to(DiagSum(OMEGA), 1) == {
            parse_upword("(0)^w"): 0,
            parse_upword("01(0)^w"): 1,
            parse_upword("1(0)^w"): 1,
        }

    def test_repeated_omega_weights(self):
        expected = {"(0)^w": 0, "100(0)^w": 1, "010(0)^w": 1, "1100(0)^w": 2, "1010(0)^w": 2, "0110(0)^w": 2}
        assert generators_up_to(OmegaSum(Singleton(ZEROS), 2), 2) == {parse_upword(t): n for t, n in expected.items()}

    def test_long_finite_tail(self):
        points = generators_up_to(canon_expand(OrdinalCNF.of(3000), 1), 1)
        assert len(points) == 3001
        assert enumerate_generators(parse("canon(3000, 1)"), 3)[0] == ZEROS

    def test_edge_cases(self):
        assert enumerate_generators(Empty(), 10) == []
        assert enumerate_generators(parse("canon(2, 1)"), 0) == []
        with pytest.raises(ValidationException):
            enumerate_generators(Empty(), -1)

    @pytest.mark.parametrize("text", corpus.DSL_TEXTS[:20])
    def test_generators_are_members(self, text):
        e = parse(text)
        a = compile_expr(e)
        for w in enumerate_generators(e, 40):
            assert membership(a, w)
