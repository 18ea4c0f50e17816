from fractions import Fraction

import pytest

from errors import OutOfScopeError
from settings import Settings
import verification
from verification import (
    STATEMENTS,
    VerificationRecord,
    check_reciprocal,
    compare_cell,
    get_statement,
    run_many,
    run_statement,
    statement_range,
    summarize,
)


def run(sid, settings, lo, hi):
    return list(run_statement(sid, settings, lo=lo, hi=hi))


class TestRecords:
    def test_failed_record_needs_witness(self):
        with pytest.raises(ValueError):
            VerificationRecord("eq9", 5, passed=False)

    def test_json(self):
        rec = VerificationRecord("eq9", 7, passed=False, subject="psi_7", witness={"formula": 1, "|psi(0)|": 2})
        assert rec.to_json() == {
            "statement": "eq9",
            "n": 7,
            "verdict": "fail",
            "subject": "psi_7",
            "witness": {"formula": 1, "|psi(0)|": 2},
        }
        assert "FAIL" in str(rec)

    def test_summarize(self):
        records = [
            VerificationRecord("eq9", 3, True),
            VerificationRecord("eq9", 4, True),
            VerificationRecord("eq10", 1, False, witness={"error": "x"}),
        ]
        assert summarize(records) == {"eq9": {"pass": 2, "fail": 0}, "eq10": {"pass": 0, "fail": 1}}


class TestRegistry:
    def test_unknown_statement(self):
        with pytest.raises(OutOfScopeError) as e:
            get_statement("theorem3")
        assert "theorem1" in str(e.value) or "theorem2" in str(e.value)

    def test_finite_sweeps(self):
        finite = {sid for sid, s in STATEMENTS.items() if s.finite_sweep}
        assert finite == {"lemma32", "eq9", "eq10", "eq11", "reciprocal", "psi1bound"}

    def test_lemma32_domain(self):
        applies = get_statement("lemma32").applies
        assert applies(7) and applies(8) and applies(12)
        assert not applies(4) and not applies(6) and not applies(10)

    def test_run_many_uses_explicit_bounds(self, app_settings):
        records = list(run_many(["eq9"], app_settings, lo=3, hi=320))
        assert [r.n for r in records] == list(range(3, 321))
        assert all(r.passed for r in records)

    def test_run_many_keeps_defaults_without_bounds(self, app_settings):
        records = list(run_many(["eq10"], app_settings))
        assert [r.n for r in records] == list(range(1, 101))

    def test_bound_below_domain_is_rejected(self, app_settings):
        with pytest.raises(OutOfScopeError):
            run_many(["eq10", "eq9"], app_settings, lo=0, hi=5)
        with pytest.raises(OutOfScopeError):
            list(run_statement("psi1bound", app_settings, lo=10, hi=20))

    def test_empty_range_is_rejected(self, app_settings):
        with pytest.raises(OutOfScopeError):
            run_many(["eq9"], app_settings, lo=10, hi=5)

    def test_statement_range(self):
        stmt = get_statement("reciprocal")
        assert statement_range(stmt) == (3, 745)
        assert statement_range(stmt, hi=900) == (3, 900)
        assert statement_range(stmt, lo=24, hi=24) == (24, 24)


class TestFiniteSweeps:
    @pytest.mark.parametrize(
        "sid, lo, hi",
        [
            ("lemma32", 3, 60),
            ("eq9", 3, 120),
            ("eq10", 1, 40),
            ("eq11", 1, 40),
            ("reciprocal", 3, 120),
            ("psi1bound", 16, 300),
        ],
    )
    def test_passes(self, app_settings, sid, lo, hi):
        records = run(sid, app_settings, lo, hi)
        assert records
        assert all(r.passed for r in records), [str(r) for r in records if not r.passed]

    @pytest.mark.slow
    @pytest.mark.parametrize("sid", ["lemma32", "reciprocal"])
    def test_passes_over_default_range(self, app_settings, sid):
        stmt = get_statement(sid)
        records = run(sid, app_settings, stmt.lo, stmt.hi)
        assert max(r.n for r in records) == stmt.hi
        assert all(r.passed for r in records), [str(r) for r in records if not r.passed]

    @pytest.mark.slow
    def test_reciprocal_only_at_3_and_24(self, app_settings):
        records = run("reciprocal", app_settings, 3, 745)
        assert [r.n for r in records if r.info["reciprocal"]] == [3, 24]

    def test_reciprocal_info(self, app_settings):
        (rec,) = check_reciprocal((24, app_settings))
        assert rec.passed
        assert rec.info["reciprocal"] is True
        assert rec.info["traces_differ"] is False
        (rec,) = check_reciprocal((7, app_settings))
        assert rec.info == {"reciprocal": False, "tr": -1, "norm": 1, "rtr": -2, "traces_differ": True}

    def test_differing_traces_contradict_reciprocity(self, app_settings, monkeypatch):
        monkeypatch.setattr(verification, "trace_stats", lambda n: (0, 1, 3))
        (rec,) = check_reciprocal((24, app_settings))
        assert not rec.passed
        assert rec.witness == {"traces": {"tr": 0, "rtr": 3}}
        (rec,) = check_reciprocal((7, app_settings))
        assert rec.passed

    def test_differing_traces_imply_non_reciprocal(self, app_settings):
        for n in range(3, 200):
            (rec,) = check_reciprocal((n, app_settings))
            if rec.info["traces_differ"]:
                assert rec.info["reciprocal"] is False

    def test_parallel_workers_keep_order(self):
        records = run("eq9", Settings(jobs=2), 3, 40)
        assert [r.n for r in records] == list(range(3, 41))
        assert all(r.passed for r in records)


class TestAutomorphismStatements:
    def test_theorem1(self, app_settings):
        records = run("theorem1", app_settings, 7, 16)
        assert {r.n for r in records} == {7, 9, 11, 13, 14, 15, 16}
        assert all(r.passed for r in records), [str(r) for r in records if not r.passed]
        by_n = {r.n: r for r in records}
        assert by_n[15].info == {"class": "C4", "abs_class": "C4"}

    def test_corollary1(self, app_settings):
        records = run("corollary1", app_settings, 5, 9)
        assert {r.n for r in records} == {5, 7, 9}
        assert all(r.passed for r in records), [str(r) for r in records if not r.passed]

    def test_corollary1_special_rows(self, app_settings):
        records = run("corollary1", app_settings, 28, 28) + run("corollary1", app_settings, 60, 60)
        assert all(r.passed for r in records)
        assert records[0].info["class"] == "C3"

    def test_theorem2(self, app_settings):
        records = run("theorem2", app_settings, 3, 8)
        assert len(records) == 12
        assert all(r.passed for r in records), [str(r) for r in records if not r.passed]
        odd = [r for r in records if r.n % 2]
        assert all(r.info == {"class": "D1", "abs_class": "D2"} for r in odd)


class TestTables:
    def test_compare_cell(self):
        ref = {"W": "1/3", "A": 8.31171, "C": 2.77057}
        found = {"W": Fraction(1, 3), "A": 8.311712, "C": 2.770571, "divergent": False}
        deltas, witness = compare_cell(found, ref)
        assert witness == {}
        assert deltas["A"] < 1e-6

    def test_compare_cell_mismatch(self):
        ref = {"W": "1/3", "A": 8.31171, "C": 2.77057}
        found = {"W": Fraction(1, 4), "A": None, "C": None, "divergent": True}
        _, witness = compare_cell(found, ref)
        assert set(witness) == {"W", "A", "C"}

    def test_divergent_cells(self):
        ref = {"W": None, "A": None, "C": None}
        _, witness = compare_cell({"W": None, "A": None, "C": None, "divergent": True}, ref)
        assert witness == {}

    @pytest.mark.slow
    def test_rows_reproduce(self):
        records = run("tables", Settings(jobs=1, tol=1e-7), 3, 17)
        assert len(records) == 10 * 2 + 10 * 2
        assert all(r.passed for r in records), [str(r) for r in records if not r.passed]

    def test_single_row(self):
        records = run("tables", Settings(jobs=1, tol=1e-7), 7, 7)
        assert {r.subject for r in records} == {"psi_7", "pi_7", "T_7", "U_7"}
        assert all(r.passed for r in records), [str(r) for r in records if not r.passed]
