"""Error hierarchy shared by the library and the command-line interface."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .report import VerificationReport


class QhaError(Exception):
    """Base class for every error raised by quasi_hopf."""


class ShapeError(QhaError, ValueError):
    """Leg labels or dimensions do not fit the requested operation."""


class InstanceFormatError(QhaError, ValueError):
    """An instance file is malformed.

    Attributes:
        field: Dotted path of the offending field, e.g. ``algebra.phi[3]``
        line: 1-based line number in the source document when known
    """

    def __init__(self, field: str, message: str, line: int | None = None) -> None:
        self.field = field
        self.line = line
        location = f"{field} (line {line})" if line is not None else field
        super().__init__(f"{location}: {message}")


class NotInvertibleError(QhaError, ArithmeticError):
    """A linear map or an element that should be invertible is singular."""


class PreconditionError(QhaError):
    """The inputs of a construction do not satisfy its preconditions."""


class PostCheckError(QhaError):
    """A construction produced an object that fails its own verification."""

    def __init__(self, message: str, report: VerificationReport) -> None:
        self.report = report
        failed = ", ".join(entry.check_id for entry in report.failures())
        super().__init__(f"{message} (failed: {failed})" if failed else message)
