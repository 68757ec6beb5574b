"""
Unit tests for report models and the error hierarchy.
"""

import orjson
import pytest
from pydantic import ValidationError

from cantor_rank.automaton.derivative import rank_degree
from cantor_rank.cantor import Clopen, parse_upword
from cantor_rank.errors import (
    EXIT_CHECK_FAILED,
    EXIT_PRECONDITION,
    EXIT_USAGE,
    AutomatonFormatException,
    CheckSuiteFailure,
    EmptyCarrierException,
    InvariantViolation,
    NonCompilableException,
    NotSuperatomicException,
    ParseException,
    ValidationException,
)
from cantor_rank.models import (
    DecompositionPart,
    DecomposeReport,
    DerivativeReport,
    IsoReport,
    PointReport,
    Profile,
)
from cantor_rank.ordinals import Cardinal, RankValue


class TestReports:

    def test_profile_requires_matching_top_points(self):
        with pytest.raises(ValidationError):
            Profile(rank=RankValue.of(1), espec=Cardinal.finite(1))
        with pytest.raises(ValidationError):
            Profile(rank=RankValue.of(0), degree=2, top_points=(parse_upword("(0)^w"),), espec=Cardinal.finite(0))

    def test_profile_continuum_iff_infinity(self):
        with pytest.raises(ValidationError):
            Profile(rank=RankValue.infinity(), espec=Cardinal.aleph0())
        Profile(rank=RankValue.infinity(), espec=Cardinal.continuum())

    def test_derivative_report_shape(self):
        with pytest.raises(ValidationError):
            DerivativeReport(chain=(), rank=RankValue.infinity(), degree=1)

    def test_reports_are_frozen(self, canon1):
        report = rank_degree(canon1)
        with pytest.raises(ValidationError):
            report.degree = 4

    def test_json_dump(self, canon1):
        data = orjson.loads(orjson.dumps(rank_degree(canon1).model_dump(mode="json")))
        assert data["rank"] == "1"
        assert data["degree"] == 1
        assert data["top_points"] == ["(1)^w"]
        assert data["chain"][0] == {"states": 2, "root": "q0"}

    def test_text_lines(self):
        iso = IsoReport(isomorphic=False, left=(RankValue.of(1), 2), right=(RankValue.of(2), 1))
        assert iso.lines() == ["isomorphic: no", "left: (1,2)", "right: (2,1)"]
        parts = DecomposeReport(parts=(
            DecompositionPart(clopen=Clopen.cylinder("1"), rank=RankValue.of(1), degree=1),
            DecompositionPart(clopen=Clopen.cylinder("0"), rank=RankValue.of(1), degree=1),
        ))
        assert parts.lines() == ["parts: 2", "part: [1*] (1,1)", "part: [0*] (1,1)"]
        assert PointReport(point=parse_upword("(1)^w"), rank=RankValue.infinity()).lines() == ["infty"]
        assert PointReport(point=parse_upword("(1)^w"), accumulation=True).lines() == ["accumulation point: yes"]


class TestErrors:

    def test_exit_codes(self):
        assert ValidationException("x").exit_code == EXIT_USAGE
        assert ParseException("x", 3).exit_code == EXIT_USAGE
        assert AutomatonFormatException("x", 2).exit_code == EXIT_USAGE
        assert NonCompilableException("diag(w)").exit_code == EXIT_PRECONDITION
        assert NotSuperatomicException().exit_code == EXIT_PRECONDITION
        assert EmptyCarrierException("lgs").exit_code == EXIT_PRECONDITION
        assert InvariantViolation("x").exit_code == EXIT_CHECK_FAILED
        assert CheckSuiteFailure(["a"]).exit_code == EXIT_CHECK_FAILED

    def test_describe(self):
        err = ParseException("expected ')'", 7, "omega(full")
        assert err.describe() == "ParseException: expected ')' at position 7 [omega(full]"
        assert AutomatonFormatException("missing root declaration", 4).describe() == (
            "AutomatonFormatException: line 4: missing root declaration"
        )
        assert "2 check(s) failed: a, b" in CheckSuiteFailure(["a", "b"]).describe()

    def test_non_compilable_names_subterm(self):
        err = NonCompilableException("diag(w)")
        assert err.code == "NonCompilableException"
        assert "'diag(w)'" in err.message
        assert isinstance(err, Exception)
