import json
from pathlib import Path

import polars as pl
import pytest

from quasi_hopf import cli
from quasi_hopf.cli import EXIT_FAILED, EXIT_INPUT, EXIT_OK, main
from quasi_hopf.instance_file import instance_to_dict
from quasi_hopf.instances import build_instance

SHIPPED = Path(__file__).resolve().parents[2] / "instances"


def _write(tmp_path: Path, doc: dict, name: str = "custom.qha") -> str:
    path = tmp_path / name
    path.write_text(json.dumps(doc, indent=2), encoding="utf-8")
    return str(path)


def _kz2_with(alpha: list[str], beta: list[str]) -> dict:
    doc = instance_to_dict(build_instance("kz2", validate=False))
    doc["algebra"]["alpha"]["data"] = alpha
    doc["algebra"]["beta"]["data"] = beta
    return doc


class TestVerify:
    """Exit codes and report formats of ``qha verify``."""

    @pytest.mark.parametrize("name", ["trivial", "kz2", "kz2_rg", "h2", "h4", "h4_l1"])
    def test_shipped_instances_pass(self, name, capsys):
        assert main(["verify", str(SHIPPED / f"{name}.qha")]) == EXIT_OK
        assert capsys.readouterr().out.startswith("suite all")

    def test_single_suite(self, capsys):
        assert main(["verify", str(SHIPPED / "kz2_rg.qha"), "--suite", "qt"]) == EXIT_OK
        assert "PASS" in capsys.readouterr().out

    def test_failing_check(self, tmp_path, capsys):
        path = _write(tmp_path, _kz2_with(["2", "0"], ["1", "0"]))
        assert main(["verify", path, "--suite", "qhopf"]) == EXIT_FAILED
        assert "FAIL" in capsys.readouterr().out

    def test_normalize_alpha_beta(self, tmp_path):
        path = _write(tmp_path, _kz2_with(["2", "0"], ["1/2", "0"]))
        assert main(["verify", path, "--suite", "qhopf"]) == EXIT_OK
        assert main(["verify", path, "--suite", "qhopf", "--normalize-alpha-beta"]) == EXIT_OK

    def test_anchor_legend(self, capsys):
        assert main(["verify", str(SHIPPED / "kz2.qha"), "--suite", "qhopf", "--anchors"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "notation:" in out
        assert "  X¹  Φ = ΣX¹⊗X²⊗X³, with Y and Z further copies of Φ" in out.splitlines()

    def test_json_format(self, capsys):
        assert main(["verify", str(SHIPPED / "kz2.qha"), "--suite", "qbi", "--format", "json"]) == EXIT_OK
        out = json.loads(capsys.readouterr().out)
        assert out["suite"] == "qbi"
        assert out["passed"] is True
        assert out["summary"]["failed"] == 0

    def test_summary_csv(self, tmp_path):
        target = tmp_path / "summary.csv"
        assert main(["verify", str(SHIPPED / "kz2.qha"), "--suite", "qhopf", "--summary-csv", str(target)]) == 0
        frame = pl.read_csv(target)
        assert frame.columns == ["group", "checks", "passed", "failed"]
        assert frame["failed"].sum() == 0

    def test_missing_file(self, tmp_path, capsys):
        assert main(["verify", str(tmp_path / "absent.qha")]) == EXIT_INPUT
        assert "does not exist" in capsys.readouterr().err

    def test_malformed_file(self, tmp_path, capsys):
        doc = instance_to_dict(build_instance("kz2", validate=False))
        doc["algebra"]["phi"]["data"][0] = "1/0"
        assert main(["verify", _write(tmp_path, doc)]) == EXIT_INPUT
        assert "algebra.phi[0]" in capsys.readouterr().err

    def test_missing_prerequisite(self, capsys):
        assert main(["verify", str(SHIPPED / "h2.qha"), "--suite", "qt"]) == EXIT_INPUT
        assert "r_matrix" in capsys.readouterr().err


class TestSettings:
    """Environment overrides."""

    def test_workers_from_environment(self, monkeypatch, mocker):
        monkeypatch.setenv("QHA_WORKERS", "3")
        spy = mocker.spy(cli, "run_suite")
        assert main(["verify", str(SHIPPED / "kz2.qha"), "--suite", "qbi"]) == EXIT_OK
        assert spy.call_args.kwargs["max_workers"] == 3

    def test_command_line_wins(self, monkeypatch, mocker):
        monkeypatch.setenv("QHA_WORKERS", "3")
        spy = mocker.spy(cli, "run_suite")
        main(["verify", str(SHIPPED / "kz2.qha"), "--suite", "qbi", "--max-workers", "1"])
        assert spy.call_args.kwargs["max_workers"] == 1

    def test_bad_worker_count(self, monkeypatch):
        monkeypatch.setenv("QHA_WORKERS", "0")
        assert main(["verify", str(SHIPPED / "kz2.qha")]) == EXIT_INPUT

    def test_bad_log_level(self, monkeypatch, capsys):
        monkeypatch.setenv("QHA_LOG_LEVEL", "LOUD")
        assert main(["verify", str(SHIPPED / "kz2.qha")]) == EXIT_INPUT
        assert "unknown log level" in capsys.readouterr().err


class TestDeriveAndEmit:
    """``qha derive`` and ``qha emit``."""

    def test_derive_twist(self, capsys):
        assert main(["derive", str(SHIPPED / "kz2.qha"), "--what", "f"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ["f = 1⊗1", "f_inv = 1⊗1"]

    def test_derive_u(self, capsys):
        assert main(["derive", str(SHIPPED / "h4_l1.qha"), "--what", "u"]) == EXIT_OK
        assert "u = e1" in capsys.readouterr().out

    def test_derive_needs_r_matrix(self):
        assert main(["derive", str(SHIPPED / "h2.qha"), "--what", "u"]) == EXIT_INPUT

    def test_emit(self, tmp_path, capsys):
        assert main(["emit", "kz2_rg", "--out", str(tmp_path)]) == EXIT_OK
        written = (tmp_path / "kz2_rg.qha").read_text(encoding="utf-8")
        assert written == (SHIPPED / "kz2_rg.qha").read_text(encoding="utf-8")
        assert "Wrote" in capsys.readouterr().out

    def test_no_command(self):
        assert main([]) == EXIT_INPUT
