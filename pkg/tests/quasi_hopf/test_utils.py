import logging
from fractions import Fraction

import pytest

from quasi_hopf.exceptions import InstanceFormatError
from quasi_hopf.utils import (
    DEFAULT_MAX_WORKERS,
    format_scalar,
    parse_scalar,
    resolve_log_level,
    resolve_max_workers,
)


class TestScalars:
    """Rational literals."""

    def test_parse_integer_and_fraction(self):
        assert parse_scalar("3") == 3
        assert parse_scalar("-1/2") == Fraction(-1, 2)
        assert parse_scalar(" 2 / 4 ") == Fraction(1, 2)

    def test_zero_denominator_names_field(self):
        with pytest.raises(InstanceFormatError, match=r"algebra\.phi\[3\]: zero denominator"):
            parse_scalar("1/0", "algebra.phi[3]")

    @pytest.mark.parametrize("text", ["0.5", "1/2/3", "x", "", "1/-2"])
    def test_malformed(self, text):
        with pytest.raises(InstanceFormatError, match="malformed rational"):
            parse_scalar(text)

    def test_non_string(self):
        with pytest.raises(InstanceFormatError, match="expected a rational string"):
            parse_scalar(1)

    def test_format(self):
        assert format_scalar(Fraction(4, 2)) == "2"
        assert format_scalar(Fraction(-3, 6)) == "-1/2"
        assert format_scalar(0) == "0"


class TestSettings:
    """Worker count and log level resolution."""

    def test_default_workers(self, monkeypatch):
        monkeypatch.delenv("QHA_WORKERS", raising=False)
        assert resolve_max_workers() == DEFAULT_MAX_WORKERS

    def test_workers_from_env(self, monkeypatch):
        monkeypatch.setenv("QHA_WORKERS", "3")
        assert resolve_max_workers() == 3

    def test_cli_value_wins(self, monkeypatch):
        monkeypatch.setenv("QHA_WORKERS", "3")
        assert resolve_max_workers(5) == 5

    @pytest.mark.parametrize("value", ["0", "-2", "many"])
    def test_invalid_workers(self, monkeypatch, value):
        monkeypatch.setenv("QHA_WORKERS", value)
        with pytest.raises(ValueError, match="worker count"):
            resolve_max_workers()

    def test_log_level(self, monkeypatch):
        monkeypatch.delenv("QHA_LOG_LEVEL", raising=False)
        assert resolve_log_level() == logging.WARNING
        assert resolve_log_level("debug") == logging.DEBUG
        monkeypatch.setenv("QHA_LOG_LEVEL", "info")
        assert resolve_log_level() == logging.INFO

    def test_unknown_log_level(self):
        with pytest.raises(ValueError, match="unknown log level"):
            resolve_log_level("loud")
