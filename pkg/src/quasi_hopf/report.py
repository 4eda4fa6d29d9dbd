"""Verification reports: one entry per checked identity, with a witness on failure."""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import polars as pl

from .tensor import LinearMap, Tensor, map_equal
from .utils import format_scalar

logger = logging.getLogger(__name__)

# symbols of the check formulas; the key is how the first tensor factor is written
NOTATION: dict[str, str] = {
    "X¹": "Φ = ΣX¹⊗X²⊗X³, with Y and Z further copies of Φ",
    "x¹": "Φ⁻¹ = Σx¹⊗x²⊗x³, with y and z further copies of Φ⁻¹",
    "f¹": "the Drinfeld twist f = Σf¹⊗f²",
    "g¹": "f⁻¹ = Σg¹⊗g², with G a further copy",
    "R¹": "R = ΣR¹⊗R²",
    "R̄¹": "R⁻¹ = ΣR̄¹⊗R̄²",
    "p¹": "p_R = Σp¹⊗p²",
    "q¹": "q_R = Σq¹⊗q²",
    "p̃¹": "p_L = Σp̃¹⊗p̃²",
    "q̃¹": "q_L = Σq̃¹⊗q̃²",
    "h₁": "Δ(h) = Σh₁⊗h₂, with h₂₁ for Δ applied again to h₂",
    "₍₋₁₎": "a left coaction λ(m) = Σm₍₋₁₎⊗m₍₀₎",
    "₍₁₎": "a right coaction ρ(m) = Σm₍₀₎⊗m₍₁₎",
}


def legend(anchors: Iterable[str]) -> list[str]:
    """One line per :data:`NOTATION` symbol that occurs in ``anchors``, in table order."""
    text = "\n".join(anchors)
    return [f"  {symbol}  {meaning}" for symbol, meaning in NOTATION.items() if symbol in text]


@dataclass(frozen=True)
class Witness:
    """First differing multi-index and both sides' values there."""

    index: tuple[int, ...]
    lhs: Fraction
    rhs: Fraction
    legs: tuple[str, ...] = ()

    def describe(self) -> str:
        if self.legs:
            where = ", ".join(f"{leg}={i}" for leg, i in zip(self.legs, self.index, strict=True))
        else:
            where = ", ".join(str(i) for i in self.index)
        return f"at ({where}): lhs={format_scalar(self.lhs)} rhs={format_scalar(self.rhs)}"

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": list(self.index),
            "legs": list(self.legs),
            "lhs": format_scalar(self.lhs),
            "rhs": format_scalar(self.rhs),
        }


@dataclass(frozen=True)
class ReportEntry:
    """
    A single identity check.

    ``finding`` entries record an observed fact (e.g. whether two coactions agree); they
    never make the report fail.
    """

    check_id: str
    anchor: str
    passed: bool
    group: str = ""
    witness: Witness | None = None
    note: str = ""
    finding: bool = False

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "id": self.check_id,
            "anchor": self.anchor,
            "group": self.group,
            "passed": self.passed,
        }
        if self.finding:
            out["finding"] = True
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class VerificationReport:
    """Ordered collection of report entries; passes iff every non-finding entry passes."""

    name: str = ""
    entries: list[ReportEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries if not entry.finding)

    def __bool__(self) -> bool:
        return self.passed

    def failures(self) -> list[ReportEntry]:
        return [entry for entry in self.entries if not entry.passed and not entry.finding]

    def entry(self, check_id: str) -> ReportEntry:
        for entry in self.entries:
            if entry.check_id == check_id:
                return entry
        raise KeyError(check_id)

    def ids(self) -> list[str]:
        return [entry.check_id for entry in self.entries]

    def check(
        self,
        check_id: str,
        anchor: str,
        lhs: Tensor | LinearMap,
        rhs: Tensor | LinearMap,
        note: str = "",
    ) -> bool:
        """Compare both sides exactly and record the outcome."""
        comparison = map_equal(lhs, rhs)
        witness = None
        if not comparison:
            witness = Witness(comparison.index, comparison.lhs, comparison.rhs, comparison.legs)
        return self.record(check_id, anchor, comparison.equal, witness=witness, note=note)

    def record(
        self,
        check_id: str,
        anchor: str,
        passed: bool,
        witness: Witness | None = None,
        note: str = "",
        finding: bool = False,
    ) -> bool:
        entry = ReportEntry(check_id, anchor, bool(passed), self.name, witness, note, finding)
        self.entries.append(entry)
        if not passed and not finding:
            detail = f" {witness.describe()}" if witness else ""
            logger.warning(f"[{self.name}] {check_id} {anchor} failed{detail}")
        else:
            logger.debug(f"[{self.name}] {check_id} {'passed' if passed else 'differs'}")
        return bool(passed)

    def finding(self, check_id: str, anchor: str, lhs: Tensor, rhs: Tensor, note: str = "") -> bool:
        """Record whether two sides agree without turning a mismatch into a failure."""
        comparison = map_equal(lhs, rhs)
        witness = None
        if not comparison:
            witness = Witness(comparison.index, comparison.lhs, comparison.rhs, comparison.legs)
        return self.record(check_id, anchor, comparison.equal, witness=witness, note=note, finding=True)

    def extend(self, other: VerificationReport) -> VerificationReport:
        self.entries.extend(other.entries)
        return self

    @classmethod
    def merged(cls, name: str, reports: Iterable[VerificationReport]) -> VerificationReport:
        out = cls(name)
        for report in reports:
            out.extend(report)
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.name,
            "passed": self.passed,
            "entries": [entry.to_dict() for entry in self.entries],
            "summary": self.summary(),
        }

    def summary(self) -> dict[str, int]:
        checks = [entry for entry in self.entries if not entry.finding]
        return {
            "checks": len(checks),
            "passed": sum(entry.passed for entry in checks),
            "failed": sum(not entry.passed for entry in checks),
            "findings": sum(entry.finding for entry in self.entries),
        }

    def summary_frame(self) -> pl.DataFrame:
        """Per-group pass/fail counts, in the order groups first appear."""
        frame = pl.DataFrame(
            {
                "group": [entry.group for entry in self.entries],
                "check_id": [entry.check_id for entry in self.entries],
                "passed": [entry.passed for entry in self.entries],
                "finding": [entry.finding for entry in self.entries],
            },
            schema={"group": pl.Utf8, "check_id": pl.Utf8, "passed": pl.Boolean, "finding": pl.Boolean},
        )
        checks = frame.filter(~pl.col("finding"))
        return checks.group_by("group", maintain_order=True).agg(
            pl.len().alias("checks"),
            pl.col("passed").sum().alias("passed"),
            (~pl.col("passed")).sum().alias("failed"),
        )

    def to_text(self, notation: bool = False) -> str:
        """The entries one per line; ``notation`` appends a legend of the formula symbols."""
        lines = []
        for entry in self.entries:
            status = ("SAME" if entry.passed else "DIFF") if entry.finding else ("PASS" if entry.passed else "FAIL")
            lines.append(f"{status}  {entry.group}/{entry.check_id}  {entry.anchor}")
            if entry.witness is not None:
                lines.append(f"      witness {entry.witness.describe()}")
            if entry.note:
                lines.append(f"      note: {entry.note}")
        summary = self.summary()
        lines.append(
            f"{self.name}: {summary['passed']}/{summary['checks']} checks passed, "
            f"{summary['failed']} failed, {summary['findings']} findings"
        )
        if notation:
            lines.append("notation:")
            lines.extend(legend(entry.anchor for entry in self.entries))
        return "\n".join(lines)
