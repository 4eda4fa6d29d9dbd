"""Rational literals and runtime settings."""

import logging
import os
import re
from fractions import Fraction

from .exceptions import InstanceFormatError

logger = logging.getLogger(__name__)

WORKERS_ENV = "QHA_WORKERS"
LOG_LEVEL_ENV = "QHA_LOG_LEVEL"
DEFAULT_MAX_WORKERS = 10

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_scalar(text: str, field: str = "value") -> Fraction:
    """
    Parse an exact rational written as ``"p"`` or ``"p/q"``.

    Args:
        text: The literal to parse
        field: Field path used in the error message

    Returns:
        The rational number in lowest terms

    Raises:
        InstanceFormatError: If the literal is not an integer or a fraction of integers,
            or has a zero denominator
    """
    if not isinstance(text, str):
        raise InstanceFormatError(field, f"expected a rational string, got {type(text).__name__}")
    match = _RATIONAL.match(text)
    if match is None:
        raise InstanceFormatError(field, f"malformed rational '{text}'")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise InstanceFormatError(field, f"zero denominator in '{text}'")
    return Fraction(int(numerator), int(denominator or 1))


def format_scalar(value: Fraction | int) -> str:
    """Canonical text of a rational: ``"p"`` for integers, ``"p/q"`` otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def resolve_max_workers(cli_value: int | None = None) -> int:
    """
    Resolve the worker count for suite fan-out.

    The command-line value wins; otherwise ``QHA_WORKERS`` is read from the environment.

    Args:
        cli_value: Value of ``--max-workers`` if given

    Returns:
        A positive worker count

    Raises:
        ValueError: If the configured value is not a positive integer
    """
    if cli_value is not None:
        raw: str | int = cli_value
    else:
        raw = os.environ.get(WORKERS_ENV, DEFAULT_MAX_WORKERS)
    try:
        workers = int(raw)
    except (TypeError, ValueError) as e:
        raise ValueError(f"worker count must be an integer, got {raw!r}") from e
    if workers < 1:
        raise ValueError(f"worker count must be positive, got {workers}")
    logger.debug(f"Using {workers} worker threads")
    return workers


def resolve_log_level(cli_value: str | None = None) -> int:
    """Map ``--log-level`` (or ``QHA_LOG_LEVEL``) to a logging level, WARNING by default."""
    name = (cli_value or os.environ.get(LOG_LEVEL_ENV) or "WARNING").upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        raise ValueError(f"unknown log level '{name}'")
    return level
