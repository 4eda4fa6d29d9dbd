from fractions import Fraction

import polars as pl

from quasi_hopf.exceptions import InstanceFormatError, PostCheckError
from quasi_hopf.report import VerificationReport, Witness, legend
from quasi_hopf.tensor import element


def _report():
    report = VerificationReport("demo")
    report.check("same", "a = a", element([1, 2], "x"), element([1, 2], "x"))
    report.check("different", "a = b", element([1, 2], "x"), element([1, 3], "x"))
    report.finding("agree", "c ~ d", element([0], "x"), element([1], "x"), note="reported only")
    return report


class TestVerificationReport:
    """Report bookkeeping and rendering."""

    def test_failures_ignore_findings(self):
        report = _report()
        assert not report.passed
        assert [e.check_id for e in report.failures()] == ["different"]
        assert report.summary() == {"checks": 2, "passed": 1, "failed": 1, "findings": 1}

    def test_witness_is_first_difference(self):
        witness = _report().entry("different").witness
        assert witness == Witness((1,), Fraction(2), Fraction(3), ("x",))
        assert witness.describe() == "at (x=1): lhs=2 rhs=3"

    def test_only_findings_still_pass(self):
        report = VerificationReport("findings")
        report.finding("f", "x ~ y", element([1], "a"), element([2], "a"))
        assert report.passed
        assert report.summary()["findings"] == 1

    def test_to_text(self):
        lines = _report().to_text().splitlines()
        assert lines[0] == "PASS  demo/same  a = a"
        assert lines[1] == "FAIL  demo/different  a = b"
        assert lines[2] == "      witness at (x=1): lhs=2 rhs=3"
        assert lines[3] == "DIFF  demo/agree  c ~ d"
        assert lines[4] == "      note: reported only"
        assert lines[-1] == "demo: 1/2 checks passed, 1 failed, 1 findings"

    def test_to_text_with_notation(self):
        report = VerificationReport("demo")
        report.check("twisted", "ΣX¹βS(X²)αX³ = f¹R̄¹", element([1], "x"), element([1], "x"))
        lines = report.to_text(notation=True).splitlines()
        assert lines[2:] == [
            "notation:",
            "  X¹  Φ = ΣX¹⊗X²⊗X³, with Y and Z further copies of Φ",
            "  f¹  the Drinfeld twist f = Σf¹⊗f²",
            "  R̄¹  R⁻¹ = ΣR̄¹⊗R̄²",
        ]
        assert "notation:" not in _report().to_text()

    def test_legend_skips_absent_symbols(self):
        assert legend(["a = b", "(ab)c = a(bc)"]) == []
        assert legend(["Σm₍₋₁₎·n⊗m₍₀₎ = ΣR²·n⊗R¹·m"]) == [
            "  R¹  R = ΣR¹⊗R²",
            "  ₍₋₁₎  a left coaction λ(m) = Σm₍₋₁₎⊗m₍₀₎",
        ]

    def test_to_dict(self):
        doc = _report().to_dict()
        assert doc["suite"] == "demo"
        assert doc["passed"] is False
        assert doc["entries"][1]["witness"] == {"index": [1], "legs": ["x"], "lhs": "2", "rhs": "3"}
        assert doc["entries"][2]["finding"] is True

    def test_merged_keeps_groups(self):
        other = VerificationReport("other")
        other.record("extra", "anchor", True)
        merged = VerificationReport.merged("all", [_report(), other])
        assert merged.ids() == ["same", "different", "agree", "extra"]
        assert merged.entry("extra").group == "other"
        assert merged.name == "all"

    def test_summary_frame(self):
        other = VerificationReport("other")
        other.record("extra", "anchor", True)
        frame = VerificationReport.merged("all", [_report(), other]).summary_frame()
        assert frame.columns == ["group", "checks", "passed", "failed"]
        assert frame["group"].to_list() == ["demo", "other"]
        assert frame.filter(pl.col("group") == "demo")["failed"].to_list() == [1]
        assert frame["checks"].to_list() == [2, 1]


def test_post_check_error_lists_failures():
    error = PostCheckError("construction failed", _report())
    assert str(error) == "construction failed (failed: different)"
    assert error.report.name == "demo"


def test_instance_format_error_location():
    assert str(InstanceFormatError("algebra.phi[3]", "bad")) == "algebra.phi[3]: bad"
    error = InstanceFormatError("<document>", "Expecting value", line=4)
    assert str(error) == "<document> (line 4): Expecting value"
    assert error.line == 4
