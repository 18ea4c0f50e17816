import orjson
import pytest

from errors import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED
from main import build_parser, main


def run_json(capsys, *argv):
    code = main(["--json", "--jobs", "1", *argv])
    return code, orjson.loads(capsys.readouterr().out)


class TestParser:
    def test_all_commands_registered(self):
        parser = build_parser()
        sub = next(a for a in parser._actions if a.dest == "command")
        assert set(sub.choices) == {"minpoly", "chebyshev", "form", "aut", "invariants", "verify", "table", "sweep"}

    def test_bad_global_flag(self):
        with pytest.raises(SystemExit):
            main(["--precision", "10", "minpoly", "cos", "7"])


class TestCommands:
    def test_minpoly_text(self, capsys):
        assert main(["minpoly", "cos", "24"]) == EXIT_OK
        assert "x^4 - 4*x^2 + 1" in capsys.readouterr().out

    def test_minpoly_sin(self, capsys):
        code, out = run_json(capsys, "minpoly", "sin", "12")
        assert code == EXIT_OK
        assert out["psi_index"] == 6
        assert out["poly"] == "x - 1"

    def test_chebyshev_factorization(self, capsys):
        code, out = run_json(capsys, "chebyshev", "utilde", "15")
        assert code == EXIT_OK
        assert out["factorization"]["psi_indices"] == [3, 5, 6, 10, 15, 30]

    def test_form(self, capsys):
        code, out = run_json(capsys, "form", "psi:7")
        assert code == EXIT_OK
        assert out["discriminant"] == "49"
        assert out["content"] == "1"

    def test_aut_matches_table(self, capsys):
        code, out = run_json(capsys, "aut", "psi:24")
        assert code == EXIT_OK
        assert out["class"] == "D4"
        assert out["matches_expected"] is True

    def test_aut_cubic(self, capsys):
        code, out = run_json(capsys, "aut", "psi:9", "--method", "cubic")
        assert code == EXIT_OK
        assert out["group"]["class"] == "C3"

    def test_aut_brute(self, capsys):
        code, out = run_json(capsys, "aut", "[1, 0, 0, 0, 1]", "--method", "brute", "--height", "1")
        assert code == EXIT_OK
        assert out["method"] == "brute:1"
        assert out["order"] == 8

    def test_invariants_with_count(self, capsys):
        code, out = run_json(capsys, "invariants", "[1, 0, 1]", "--count", "10")
        assert code == EXIT_OK
        assert out["scope_note"] == "out of theorem scope"
        assert out["count"]["R"] == 8

    def test_invariants_non_integral_group(self, capsys):
        code, out = run_json(capsys, "invariants", "[16, 0, 0, 0, 1]")
        assert code == EXIT_OK
        assert out["class"] == "D4"
        assert out["m"] == 2
        assert out["W"] is None and out["C"] is None
        assert out["A"] == pytest.approx(1.854075, abs=1e-5)

    def test_verify_past_default_range(self, capsys):
        code = main(["--json", "--jobs", "1", "verify", "eq9", "--min", "299", "--max", "310"])
        lines = [orjson.loads(line) for line in capsys.readouterr().out.splitlines()]
        assert code == EXIT_OK
        assert [line["n"] for line in lines[:-1]] == list(range(299, 311))
        assert lines[-1] == {"summary": {"eq9": {"pass": 12, "fail": 0}}}

    def test_verify(self, capsys):
        code = main(["--json", "--jobs", "1", "verify", "eq10", "--max", "12"])
        lines = [orjson.loads(line) for line in capsys.readouterr().out.splitlines()]
        assert code == EXIT_OK
        assert len(lines) == 13
        assert lines[-1] == {"summary": {"eq10": {"pass": 12, "fail": 0}}}

    def test_sweep(self, capsys, tmp_path):
        out_file = tmp_path / "sweep.json"
        code = main(["--jobs", "1", "sweep", "--only", "eq9", "eq11", "--out", str(out_file)])
        assert code == EXIT_OK
        saved = orjson.loads(out_file.read_bytes())
        assert saved["summary"]["eq9"]["fail"] == 0
        assert saved["statements"] == ["eq9", "eq11"]
        assert "records written" in capsys.readouterr().out


class TestExitCodes:
    def test_unknown_family(self, capsys):
        assert main(["form", "sigma:7"]) == EXIT_USAGE

    def test_degree_too_small(self, capsys):
        assert main(["aut", "[1, 0, 1]"]) == EXIT_USAGE

    def test_out_of_scope_statement(self):
        with pytest.raises(SystemExit):
            main(["verify", "theorem9"])

    def test_verify_below_domain(self, capsys):
        assert main(["verify", "eq9", "--min", "1", "--max", "10"]) == EXIT_USAGE
        assert capsys.readouterr().out == ""

    def test_pi_of_four(self):
        assert main(["minpoly", "sin", "4"]) == EXIT_USAGE

    def test_failing_table_cell(self, capsys, monkeypatch):
        import verification

        monkeypatch.setattr(verification, "TABLE_REL_TOL", -1.0)
        assert main(["--jobs", "1", "--tol", "1e-6", "table", "chebyshev"]) == EXIT_VERIFICATION_FAILED
