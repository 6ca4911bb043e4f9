import json
import math

import pytest

from steerq.cli import (EXIT_INPUT, EXIT_IO, EXIT_NUMERIC, EXIT_OK,
                        exit_code_for, main)
from steerq.criteria import SolverError
from steerq.expio import CountsFormatError, parse_counts_csv


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSimulate:
    def test_writes_parseable_csv(self, tmp_path, capsys):
        out = tmp_path / "counts.csv"
        code, _, _ = run(capsys, "simulate", "--theta", "22.5", "--chi", "0.5",
                         "--shots", "20000", "--seed", "7", "--out", str(out))
        assert code == EXIT_OK
        rec = parse_counts_csv(out.read_text())
        assert all(r.total > 15000 for r in rec.records)

    def test_bell_state_zero_cells(self, tmp_path, capsys):
        out = tmp_path / "bell.csv"
        code, _, _ = run(capsys, "simulate", "--theta", "22.5", "--chi", "1",
                         "--shots", "1000000", "--seed", "7", "--out", str(out))
        assert code == EXIT_OK
        rec = parse_counts_csv(out.read_text())
        z = rec.records[2]
        assert z.counts[0, 1] == 0 and z.counts[1, 0] == 0

    def test_byte_identical_for_same_seed(self, tmp_path, capsys):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        for path in (a, b):
            run(capsys, "simulate", "--theta", "7.5", "--chi", "0.3",
                "--shots", "5000", "--seed", "42", "--out", str(path))
        assert a.read_bytes() == b.read_bytes()

    def test_unwritable_path(self, tmp_path, capsys):
        code, _, err = run(capsys, "simulate", "--theta", "22.5", "--chi", "0.5",
                           "--out", str(tmp_path / "nodir" / "x.csv"))
        assert code == EXIT_IO
        assert "error:" in err


class TestEval:
    def test_bell_counts_all_steerable(self, tmp_path, capsys):
        path = tmp_path / "bell.csv"
        run(capsys, "simulate", "--theta", "22.5", "--chi", "1",
            "--shots", "1000000", "--seed", "3", "--out", str(path))
        code, out, _ = run(capsys, "eval", "--counts", str(path), "--seed", "1")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert [c["steerable"] for c in doc["criteria"]] == [True, True, True]

    def test_uniform_counts_not_steerable(self, tmp_path, capsys):
        path = tmp_path / "uniform.csv"
        rows = ["setting,outcome,count"] + [
            f"{s},{o},250" for s in "xyz" for o in ("00", "01", "10", "11")
        ]
        path.write_text("\n".join(rows) + "\n")
        code, out, _ = run(capsys, "eval", "--counts", str(path))
        assert code == EXIT_OK
        doc = json.loads(out)
        assert [c["steerable"] for c in doc["criteria"]] == [False, False, False]
        assert doc["bounds"] == {"scg_q2": 1.0,
                                 "scg_q1": pytest.approx(2 * math.log(2)),
                                 "lsc": 1.0}

    def test_missing_file_is_io_error(self, tmp_path, capsys):
        code, _, err = run(capsys, "eval", "--counts", str(tmp_path / "none.csv"))
        assert code == EXIT_IO

    def test_malformed_csv_is_input_error(self, tmp_path, capsys):
        path = tmp_path / "bad.csv"
        path.write_text("setting,outcome,count\nx,00,oops\n")
        code, _, err = run(capsys, "eval", "--counts", str(path))
        assert code == EXIT_INPUT
        assert "non-negative integer" in err

    def test_q_out_of_range_is_input_error(self, tmp_path, capsys):
        path = tmp_path / "u.csv"
        rows = ["setting,outcome,count"] + [
            f"{s},{o},10" for s in "xyz" for o in ("00", "01", "10", "11")
        ]
        path.write_text("\n".join(rows) + "\n")
        code, _, _ = run(capsys, "eval", "--counts", str(path), "--q", "2.5")
        assert code == EXIT_INPUT


class TestEvalState:
    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "eval-state", "--theta", "22.5",
                           "--chi", "0.58")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["criteria"][0]["lhs"] == pytest.approx(0.9954, abs=1e-9)
        assert doc["criteria"][0]["steerable"] is True
        assert doc["totals"] is None and doc["seed"] is None

    def test_q_list_token_one_routes_to_shannon(self, capsys):
        code, out, _ = run(capsys, "eval-state", "--theta", "22.5",
                           "--chi", "0", "--q", "1")
        doc = json.loads(out)
        assert doc["criteria"][0]["q"] == 1.0
        assert doc["criteria"][0]["lhs"] == pytest.approx(3 * math.log(2))
        assert doc["criteria"][0]["bound"] == pytest.approx(2 * math.log(2))

    def test_bad_theta_is_input_error(self, capsys):
        code, _, _ = run(capsys, "eval-state", "--theta", "80", "--chi", "0.5")
        assert code == EXIT_INPUT


class TestThreshold:
    def test_werner_q2(self, capsys):
        code, out, _ = run(capsys, "threshold", "--theta", "22.5")
        assert code == EXIT_OK
        assert "chi = 0.577350" in out

    def test_lsc(self, capsys):
        code, out, _ = run(capsys, "threshold", "--theta", "7.5",
                           "--criterion", "lsc")
        assert code == EXIT_OK
        assert "chi = 0.816496" in out or "chi = 0.816497" in out

    def test_never_violated(self, capsys):
        code, out, _ = run(capsys, "threshold", "--theta", "0",
                           "--criterion", "scg", "--q", "2")
        assert code == EXIT_OK
        assert "not violated" in out


class TestSweepAndTables:
    def test_sweep_writes_curve(self, tmp_path, capsys):
        out = tmp_path / "curve.csv"
        code, _, _ = run(capsys, "sweep", "--theta", "7.5", "--steps", "11",
                         "--out", str(out))
        assert code == EXIT_OK
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "chi,scg_q2,scg_q1,lsc,bound_q2,bound_q1,bound_lsc"
        assert len(lines) == 12

    def test_tables_to_stdout(self, capsys):
        code, out, _ = run(capsys, "tables")
        assert code == EXIT_OK
        assert "max deviation: 0.0608" in out

    def test_tables_to_file(self, tmp_path, capsys):
        out = tmp_path / "tables.txt"
        code, _, _ = run(capsys, "tables", "--out", str(out))
        assert code == EXIT_OK
        assert "entries: 60" in out.read_text()


class TestExitCodes:
    def test_mapping(self):
        assert exit_code_for(FileNotFoundError("x")) == EXIT_IO
        assert exit_code_for(SolverError("x")) == EXIT_NUMERIC
        assert exit_code_for(CountsFormatError("x")) == EXIT_INPUT
        assert exit_code_for(ValueError("x")) == EXIT_INPUT
