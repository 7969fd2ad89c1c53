import json
from pathlib import Path

import numpy as np
import pytest

from univalent.cli import _load_tables
from univalent.verify import FAIL, FLAGGED, PASS, SUITES, Check, VerificationReport, random_disc, run_verification

FIXTURE = Path(__file__).parent / "fixtures" / "corrupted_odd_table.json"


@pytest.fixture(scope="module")
def full_report():
    return run_verification("all", tol=1e-9, seed=42)


class TestReport:
    def test_all_pass(self, full_report):
        s = full_report.summary
        assert s[FAIL] == 0 and s[PASS] > 100
        assert full_report.exit_code == 0

    def test_flagged_do_not_fail(self, full_report):
        flagged = [c.name for c in full_report.checks if c.status == FLAGGED]
        assert sorted(flagged) == ["bound.lower_edge_published_factor", "gamma.koebe_display"]
        assert len(full_report.paper_discrepancies) == 2

    def test_schema(self, full_report):
        doc = json.loads(full_report.to_json())
        assert set(doc) == {"checks", "summary", "bound", "paper_discrepancies"}
        assert set(doc["checks"][0]) == {"name", "status", "lhs", "rhs", "tolerance", "details"}
        assert sum(doc["summary"].values()) == len(doc["checks"])
        assert doc["bound"]["edge"] == "t_lower"
        assert doc["bound"]["constant"] == pytest.approx(133**0.5 / 15, abs=1e-15)
        assert doc["bound"]["max_value"] == pytest.approx(133 / 225, abs=1e-9)

    def test_unique_names(self, full_report):
        names = [c.name for c in full_report.checks]
        assert len(names) == len(set(names))

    def test_every_suite_present(self, full_report):
        prefixes = {c.name.split(".")[0] for c in full_report.checks}
        assert prefixes == set(SUITES)

    def test_same_seed_same_bytes(self, full_report):
        assert run_verification("all", tol=1e-9, seed=42).to_json() == full_report.to_json()

    def test_seed_changes_vectors(self):
        a = run_verification("grunsky", seed=1).to_json()
        b = run_verification("grunsky", seed=2).to_json()
        assert a != b

    def test_exit_code_tracks_failures(self):
        ok = Check("x", PASS, 0.0, 0.0, 0.0)
        bad = Check("y", FAIL, 1.0, 0.0, 0.0)
        note = Check("z", FLAGGED, 1.0, 0.0, 0.0)
        assert VerificationReport([ok, note], {}).exit_code == 0
        assert VerificationReport([ok, bad, note], {}).exit_code == 1

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_verification("nope")


class TestSuites:
    def test_bound_only(self):
        rep = run_verification("bound")
        assert all(c.name.startswith("bound.") for c in rep.checks)
        assert rep.bound["max_value"] == pytest.approx(133 / 225, abs=1e-9)
        assert rep.exit_code == 0

    def test_corrupted_table_single_failure(self):
        rep = run_verification("all", extra_tables=_load_tables([str(FIXTURE)]))
        assert [c.name for c in rep.failures()] == ["grunsky.inequality_table[corrupted_odd_table]"]
        assert rep.exit_code == 1

    def test_corrupted_table_alone(self):
        rep = run_verification("bound", extra_tables=_load_tables([str(FIXTURE)]))
        assert len(rep.failures()) == 1

    def test_tolerance_is_used_by_inequalities(self):
        rep = run_verification("gamma", tol=-1.0)
        failed = {c.name.split("[")[0] for c in rep.failures()}
        assert "gamma.abs_gamma3" in failed
        assert "gamma.closed_form" not in failed


def test_random_disc():
    rng = np.random.default_rng(0)
    w = random_disc(rng, (5000,), 2.0)
    assert np.all(np.abs(w) <= 2.0)
    # uniform on the disc: E|w|^2 = r^2 / 2
    assert np.mean(np.abs(w) ** 2) == pytest.approx(2.0, rel=0.05)
