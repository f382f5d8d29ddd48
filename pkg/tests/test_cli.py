"""CLI: exit codes, report determinism, CSV contract, env overrides."""

import io
import json

import pytest

from betabound.cli import (
    EXIT_CONFIG,
    EXIT_OK,
    RunConfig,
    main,
)
from betabound.proof import CSV_HEADER


def run(argv, env=None):
    out = io.StringIO()
    code = main(argv, environ=env or {}, stdout=out)
    return code, out.getvalue()


class TestConfig:
    def test_defaults(self):
        cfg = RunConfig()
        cfg.validate()
        assert cfg.precision_digits == 50
        assert cfg.grid_n == 1000

    def test_precision_floor(self):
        with pytest.raises(ValueError, match="precision"):
            RunConfig(precision_digits=10).validate()

    def test_grid_floor(self):
        with pytest.raises(ValueError, match="grid_n"):
            RunConfig(grid_n=1).validate()

    def test_bad_width(self):
        code, _ = run(["sweep", "--width", "0"])
        assert code == EXIT_CONFIG

    def test_grid_one_exits_2(self):
        code, _ = run(["sweep", "--grid", "1"])
        assert code == EXIT_CONFIG


class TestReplayCommand:
    def test_exit_zero_and_report(self, tmp_path):
        out_path = tmp_path / "report.json"
        code, text = run(["replay", "--out", str(out_path)])
        assert code == EXIT_OK
        report = json.loads(out_path.read_text())
        assert report["summary"]["all_verified"] is True
        assert report["summary"]["verified"] >= 15
        assert report["summary"]["failed"] == 0

    def test_reduced_precision_still_passes(self, tmp_path):
        out_path = tmp_path / "report30.json"
        code, _ = run(["replay", "--precision", "30", "--out", str(out_path)])
        assert code == EXIT_OK
        assert json.loads(out_path.read_text())["summary"]["all_verified"]

    def test_byte_identical_reports(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run(["replay", "--out", str(a)])
        run(["replay", "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_json_format_prints_report(self, tmp_path):
        out_path = tmp_path / "r.json"
        code, text = run(["replay", "--out", str(out_path), "--format", "json"])
        assert code == EXIT_OK
        assert json.loads(text)["summary"]["all_verified"] is True


class TestRootsCommand:
    def test_default_width_certifies_digits(self):
        code, text = run(["roots"])
        assert code == EXIT_OK
        for prefix in ("0.03733", "0.2114", "0.3085", "0.3822", "0.4439"):
            assert prefix in text
        assert "ordering: verified" in text

    def test_wide_width_warns_but_passes(self):
        code, text = run(["roots", "--width", "1/4"])
        assert code == EXIT_OK
        assert "ordering unverified at this width" in text

    def test_fine_width_verifies_ordering(self):
        code, text = run(["roots", "--width", "1e-10"])
        assert code == EXIT_OK
        assert "ordering: verified" in text

    def test_json_format(self):
        code, text = run(["roots", "--format", "json"])
        assert code == EXIT_OK
        payload = json.loads(text)
        assert len(payload["roots"]) == 5
        assert all(r["digits_certified"] for r in payload["roots"])


class TestConstantsCommand:
    def test_prints_reference_digits(self):
        code, text = run(["constants"])
        assert code == EXIT_OK
        for ref in ("2.57973", "0.79003", "0.47053", "0.43218", "0.08731"):
            assert ref in text
        assert "matches=True" in text
        assert "matches=False" not in text

    def test_json_format(self):
        code, text = run(["constants", "--format", "json"])
        assert code == EXIT_OK
        rows = json.loads(text)["constants"]
        assert {r["name"] for r in rows} >= {"alpha", "a1", "a2", "a3", "alzer_max"}
        assert all(r["matches"] for r in rows)


class TestBoundsCommand:
    def test_chains_ordered(self):
        code, text = run(["bounds", "--x", "1"])
        assert code == EXIT_OK
        assert "strict ordering: True" in text

    def test_rational_point(self):
        code, text = run(["bounds", "--x", "1/2"])
        assert code == EXIT_OK

    def test_bad_point(self):
        code, _ = run(["bounds", "--x", "-1"])
        assert code == EXIT_CONFIG


class TestSweepCommand:
    def test_small_sweep_csv(self, tmp_path):
        out_path = tmp_path / "sweep.csv"
        code, text = run(["sweep", "--grid", "20", "--out", str(out_path)])
        assert code == EXIT_OK
        lines = out_path.read_text().strip().splitlines()
        assert lines[0] == CSV_HEADER
        assert len(lines) == 20 * 20 + 1
        last = lines[-1].split(",")
        assert float(last[0]) == 1.0 and float(last[1]) == 1.0
        assert abs(float(last[2]) - 1.0) < 1e-12          # beta(1,1)
        assert abs(float(last[6]) - 1 / 3) < 1e-12        # margin_new
        assert "alpha = 2.5797362" in text

    def test_hundred_grid_all_margins_positive(self, tmp_path):
        import csv as csv_mod

        out_path = tmp_path / "sweep100.csv"
        code, _ = run(["sweep", "--grid", "100", "--out", str(out_path)])
        assert code == EXIT_OK
        with open(out_path, newline="") as fh:
            reader = csv_mod.reader(fh)
            header = next(reader)
            assert ",".join(header) == CSV_HEADER
            rows = list(reader)
        assert len(rows) == 100 * 100
        assert all(float(row[6]) > 0 for row in rows)  # margin_new column

    def test_env_overrides(self, tmp_path):
        out_path = tmp_path / "env.csv"
        code, _ = run(
            ["sweep"],
            env={"BETABOUND_GRID": "5", "BETABOUND_OUT": str(out_path)},
        )
        assert code == EXIT_OK
        assert len(out_path.read_text().strip().splitlines()) == 26

    def test_flag_beats_env(self, tmp_path):
        out_path = tmp_path / "flag.csv"
        code, _ = run(
            ["sweep", "--grid", "3", "--out", str(out_path)],
            env={"BETABOUND_GRID": "7"},
        )
        assert code == EXIT_OK
        assert len(out_path.read_text().strip().splitlines()) == 10

    def test_io_failure_exit_3(self):
        code, _ = run(["sweep", "--grid", "3", "--out", "/nonexistent/x.csv"])
        assert code == 3


def test_unknown_format_rejected():
    with pytest.raises(SystemExit):  # argparse choice error
        main(["replay", "--format", "yaml"], environ={}, stdout=io.StringIO())


def test_env_format_validated():
    code, _ = run(["roots"], env={"BETABOUND_FORMAT": "yaml"})
    assert code == EXIT_CONFIG
