import csv
import json
from pathlib import Path

import pytest

from univalent.cli import main

FIXTURE = str(Path(__file__).parent / "fixtures" / "corrupted_odd_table.json")


def run_json(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


class TestCoeffs:
    def test_koebe(self, capsys):
        code, doc = run_json(capsys, "coeffs", "--function", "koebe", "--order", "5")
        assert code == 0
        assert doc["gamma"] == pytest.approx([1, 1 / 2, 1 / 3, 1 / 4, 1 / 5], abs=1e-14)
        assert doc["a"] == [1, 2, 3, 4, 5, 6]
        assert doc["residual"] <= 1e-14

    def test_identity(self, capsys):
        _, doc = run_json(capsys, "coeffs", "--function", "identity", "--order", "4")
        assert doc["gamma"] == [0, 0, 0, 0]

    def test_right_half_line(self, capsys):
        _, doc = run_json(capsys, "coeffs", "--function", "right_half_line", "--order", "3")
        assert doc["gamma"] == pytest.approx([0.5, 0.25, 1 / 6], abs=1e-15)

    def test_complex_entries(self, capsys):
        _, doc = run_json(capsys, "coeffs", "--function", "koebe_rotation", "--param", "0.5", "--order", "2")
        assert doc["gamma"][1] == pytest.approx([0.5 * 0.5403023058681398, 0.5 * 0.8414709848078965])

    def test_csv(self, capsys, tmp_path):
        out = tmp_path / "c.csv"
        assert main(["coeffs", "--function", "koebe", "--order", "6", "--format", "csv", "--out", str(out)]) == 0
        rows = list(csv.DictReader(out.open()))
        assert len(rows) == 6
        assert float(rows[2]["gamma_re"]) == pytest.approx(1 / 3)
        assert rows[5]["residual"] == ""

    def test_bad_order(self, capsys):
        assert main(["coeffs", "--function", "koebe", "--order", "0"]) == 2


class TestGrunsky:
    def test_koebe(self, capsys):
        code, doc = run_json(capsys, "grunsky", "--function", "koebe", "--size", "3")
        assert code == 0 and doc["provenance"] == "odd"
        table = {(p, q): v for p, q, v in doc["omega"]}
        assert (table[1, 1], table[1, 3], table[3, 3]) == pytest.approx((1, 0, 1 / 3), abs=1e-14)
        assert doc["reconstructed"] == pytest.approx({"a2": 2, "a3": 3, "a4": 4}, abs=1e-13)
        assert doc["gamma3_identity"] == pytest.approx(1 / 3, abs=1e-14)

    def test_right_half_line(self, capsys):
        _, doc = run_json(capsys, "grunsky", "--function", "right_half_line")
        table = {(p, q): v for p, q, v in doc["omega"]}
        assert (table[1, 1], table[1, 3], table[3, 3]) == pytest.approx((1 / 2, 1 / 8, 1 / 24), abs=1e-15)
        assert doc["gamma3_identity"] == pytest.approx(1 / 6, abs=1e-15)

    def test_identity_zero(self, capsys):
        _, doc = run_json(capsys, "grunsky", "--function", "identity", "--size", "5")
        assert all(v == 0 for _, _, v in doc["omega"])

    def test_small_size_skips_reconstruction(self, capsys):
        _, doc = run_json(capsys, "grunsky", "--function", "koebe", "--size", "1")
        assert "reconstructed" not in doc

    def test_size_limits(self, capsys):
        assert main(["grunsky", "--function", "koebe", "--size", "13"]) == 2
        assert main(["grunsky", "--function", "koebe", "--size", "0"]) == 2


class TestErrors:
    def test_unknown_function(self, capsys):
        assert main(["coeffs", "--function", "nope"]) == 2
        assert "nope" in capsys.readouterr().err

    def test_bad_parameter(self, capsys):
        assert main(["coeffs", "--function", "quadratic", "--param", "0.9"]) == 2

    def test_argparse_errors(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["coeffs"])
        assert exc.value.code == 2

    def test_unwritable_output(self, capsys, tmp_path):
        bad = tmp_path / "missing" / "x.json"
        assert main(["coeffs", "--function", "koebe", "--out", str(bad)]) == 3


class TestOptimize:
    def test_default(self, capsys):
        code, doc = run_json(capsys, "optimize")
        assert code == 0
        assert doc["max_value"] == pytest.approx(133 / 225, abs=1e-9)
        assert doc["edge"] == "t_lower"

    def test_surface(self, capsys, tmp_path):
        out = tmp_path / "surface.csv"
        assert main(["optimize", "--grid", "3", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "a,t,psi" and len(lines) == 1 + 9
        assert max(float(r.split(",")[2]) for r in lines[1:]) <= 133 / 225

    def test_surface_unwritable(self, capsys, tmp_path):
        assert main(["optimize", "--grid", "3", "--out", str(tmp_path / "no" / "s.csv")]) == 3

    def test_bad_grid(self, capsys):
        assert main(["optimize", "--grid", "1"]) == 2
        assert main(["optimize", "--refine", "0"]) == 2


class TestVerify:
    def test_bound_suite(self, capsys):
        code, doc = run_json(capsys, "verify", "--suite", "bound")
        assert code == 0
        assert doc["bound"]["max_value"] == pytest.approx(133 / 225, abs=1e-9)
        assert doc["bound"]["edge"] == "t_lower"

    def test_corrupted_fixture(self, capsys):
        code = main(["verify", "--table", FIXTURE])
        captured = capsys.readouterr()
        doc = json.loads(captured.out)
        assert code == 1 and doc["summary"]["fail"] == 1
        assert "FAIL grunsky.inequality_table[corrupted_odd_table]" in captured.err

    def test_missing_table(self, capsys, tmp_path):
        assert main(["verify", "--suite", "bound", "--table", str(tmp_path / "none.json")]) == 3

    def test_malformed_table(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"size": 2, "omega": [[1]]}')
        assert main(["verify", "--suite", "bound", "--table", str(bad)]) == 2

    def test_csv_report(self, capsys, tmp_path):
        out = tmp_path / "r.csv"
        assert main(["verify", "--suite", "gamma", "--format", "csv", "--out", str(out)]) == 0
        rows = list(csv.DictReader(out.open()))
        assert {r["status"] for r in rows} == {"pass", "flagged"}


def test_list_functions(capsys):
    code, doc = run_json(capsys, "list-functions")
    assert code == 0
    names = [r["name"] for r in doc]
    assert {"koebe", "right_half_line", "odd_koebe"} <= set(names) and len(names) >= 6
