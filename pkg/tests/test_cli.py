import json
import subprocess
import sys

import pytest

from soergelcalc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDelta:
    def test_text_output(self, capsys):
        code, out, _ = run_cli(capsys, "delta", "--k", "1", "--l", "1")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "1⊗y1 - x1⊗1"
        assert lines[1] == "count: 2"
        assert lines[2] == "degree: 2"

    def test_json_output(self, capsys):
        code, out, _ = run_cli(capsys, "delta", "--k", "2", "--l", "1", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["count"] == 3
        assert obj["degree"] == 4
        assert len(obj["terms"]) == 3

    def test_json_round_trips_to_library_values(self, capsys):
        from soergelcalc.polycore import poly_from_json_obj
        from soergelcalc.soergel import delta_formula

        _, out, _ = run_cli(capsys, "delta", "--k", "2", "--l", "2", "--format", "json")
        obj = json.loads(out)
        expr = delta_formula(2, 2)
        assert poly_from_json_obj(obj["p_image"]) == expr.to_P()
        for term, (left, right) in zip(obj["terms"], expr.terms):
            assert poly_from_json_obj(term["left"]) == left
            assert poly_from_json_obj(term["right"]) == right

    def test_invalid_k_exits_2(self):
        with pytest.raises(SystemExit) as e:
            main(["delta", "--k", "0", "--l", "1"])
        assert e.value.code == 2


class TestVerify:
    def test_pass_cases(self, capsys):
        for k, l in [(1, 1), (2, 2)]:
            code, out, _ = run_cli(capsys, "verify", "--k", str(k), "--l", str(l))
            assert code == 0
            assert "PASS" in out

    def test_json_report_schema(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--k", "1", "--l", "1", "--format", "json")
        obj = json.loads(out)
        for key in (
            "k",
            "l",
            "delta_terms",
            "degree",
            "sign_epsilon",
            "sign_paper",
            "membership",
            "f_nonzero",
        ):
            assert key in obj
        assert obj["membership"] == [True]
        assert obj["f_nonzero"] is True

    def test_guardrail_exit_3(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--k", "4", "--l", "4")
        assert code == 3

    def test_force_allows_kl5(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--k", "3", "--l", "2", "--force")
        assert code == 0


class TestHomology:
    def test_1_1(self, capsys):
        code, out, _ = run_cli(capsys, "homology", "--k", "1", "--l", "1")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "H_0 = (1) / (1-q^2)^2"
        assert lines[1] == "H_-1 = (q^3) / (1-q^2)^2"
        assert "corollary: PASS" in out

    def test_direct_agrees(self, capsys):
        code, out, _ = run_cli(capsys, "homology", "--k", "2", "--l", "1", "--direct")
        assert code == 0
        assert "direct check: MATCH" in out

    def test_formula_only_larger_case(self, capsys):
        code, out, _ = run_cli(capsys, "homology", "--k", "3", "--l", "2")
        assert code == 0
        assert "corollary: PASS" in out

    def test_direct_resource_refusal(self, capsys):
        code, _, err = run_cli(capsys, "homology", "--k", "3", "--l", "3", "--direct")
        assert code == 3

    def test_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "homology", "--k", "2", "--l", "1", "--format", "json"
        )
        obj = json.loads(out)
        assert obj["corollary"] is True
        assert len(obj["homology"]) == 2


class TestHilbert:
    def test_text(self, capsys):
        code, out, _ = run_cli(capsys, "hilbert", "--k", "2", "--l", "1")
        assert code == 0
        assert "qdim R' = (1) / (1-q^2)^2(1-q^4)" in out
        assert "qdim I_1 (formula) = (q^4) / (1-q^2)^2(1-q^4)" in out
        assert "qdim I_1 (groebner) = (q^4) / (1-q^2)^2(1-q^4)" in out

    def test_json_round_trips(self, capsys):
        from soergelcalc.groebner import GradedSeries

        code, out, _ = run_cli(capsys, "hilbert", "--k", "1", "--l", "1", "--format", "json")
        obj = json.loads(out)
        formula = GradedSeries.from_json_obj(obj["qdim I_1 (formula)"])
        groebner = GradedSeries.from_json_obj(obj["qdim I_1 (groebner)"])
        assert formula == groebner


class TestSelftest:
    def test_passes_and_deterministic(self, capsys):
        code1, out1, _ = run_cli(capsys, "selftest", "--max-kl", "2", "--seed", "7")
        code2, out2, _ = run_cli(capsys, "selftest", "--max-kl", "2", "--seed", "7")
        assert code1 == code2 == 0
        assert out1 == out2
        assert "all suites passed" in out1

    def test_max_kl_guard(self, capsys):
        code, out, _ = run_cli(capsys, "selftest", "--max-kl", "99")
        assert code == 3
        assert "refusing" in out


class TestConsoleScript:
    def test_installed_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "soergelcalc.cli", "delta", "--k", "1", "--l", "1"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.splitlines()[0] == "1⊗y1 - x1⊗1"
