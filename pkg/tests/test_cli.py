"""Command-line interface: formats, determinism, exit codes, replayability."""

import json
import subprocess
import sys

from contracta.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEnumerate:
    def test_oct2_json(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--family", "oct", "--n", "2")
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["count"] == 3
        assert payload["idempotent_count"] == 3
        assert payload["regular_count"] == 3
        assert payload["elements"] == [[1, 1], [1, 2], [2, 2]]

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--family", "oct", "--n", "2", "--output", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "word,idempotent,regular"
        assert len(lines) == 4

    def test_guard_exceeded(self, capsys):
        code, _, err = run_cli(capsys, "enumerate", "--family", "ct", "--n", "9")
        assert code == 2
        assert "guard" in err

    def test_env_guard(self, capsys, monkeypatch):
        monkeypatch.setenv("CONTRACTA_MAX_N", "3")
        code, _, err = run_cli(capsys, "enumerate", "--family", "ct", "--n", "4")
        assert code == 2
        assert "guard" in err


class TestAnalyze:
    def test_example_map(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--n", "6", "--map", "[1,2,2,3,4,3]")
        assert code == 0
        payload = json.loads(out)
        assert payload["family"] == "ct"
        assert payload["height"] == 4
        assert payload["idempotent"] is False
        assert payload["kernel_text"] == "{1}|{2,3}|{4,6}|{5}"
        assert payload["max_convex_refinement"] == "{1}|{2}|{3}|{4,6}|{5}"
        assert payload["regular"] == {
            "oracle": False,
            "characterized": False,
            "characterized_orct": None,
            "oracle_family": "ct",
        }
        assert all(not t["convex"] for t in payload["transversals"])
        assert len(payload["transversals"]) == 4

    def test_non_contraction(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--n", "3", "--map", "[3,1,3]")
        assert code == 0
        payload = json.loads(out)
        assert payload["family"] == "t"
        assert payload["contraction"] is False
        assert payload["max_convex_refinement"] is None
        assert payload["regular"]["characterized"] is None
        assert payload["regular"]["oracle"] is True  # everything is regular among all maps

    def test_malformed_word(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "--n", "3", "--map", "1;2;3")
        assert code == 2
        assert "malformed" in err


class TestRelations:
    def test_oracle_and_char_agree_on_ct3(self, capsys):
        code, out_oracle, _ = run_cli(
            capsys, "relations", "--family", "ct", "--n", "3", "--relation", "l", "--method", "oracle"
        )
        assert code == 0
        code, out_char, _ = run_cli(
            capsys, "relations", "--family", "ct", "--n", "3", "--relation", "l", "--method", "char"
        )
        assert code == 0
        oracle = json.loads(out_oracle)
        char = json.loads(out_char)
        assert oracle["classes"] == char["classes"]
        assert oracle["method"] == "oracle" and char["method"] == "char"

    def test_starred_oracle(self, capsys):
        code, out, _ = run_cli(
            capsys, "relations", "--family", "oct", "--n", "3", "--relation", "dstar"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["class_count"] == 3  # heights 1..3

    def test_char_j_refused(self, capsys):
        code, _, err = run_cli(
            capsys, "relations", "--family", "ct", "--n", "3", "--relation", "j", "--method", "char"
        )
        assert code == 2
        assert "no characterized" in err

    def test_char_outside_ct_refused(self, capsys):
        code, _, err = run_cli(
            capsys, "relations", "--family", "t", "--n", "3", "--relation", "l", "--method", "char"
        )
        assert code == 2
        assert "family 'ct'" in err

    def test_starred_char_on_t_refused(self, capsys):
        code, _, err = run_cli(
            capsys, "relations", "--family", "t", "--n", "3", "--relation", "lstar", "--method", "char"
        )
        assert code == 2
        assert "contraction" in err

    def test_starred_char_orct_carries_note(self, capsys):
        code, out, _ = run_cli(
            capsys, "relations", "--family", "orct", "--n", "3", "--relation", "lstar",
            "--method", "char",
        )
        assert code == 0
        assert "empirical" in json.loads(out)["note"]


class TestVerify:
    def test_green_l_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--check", "green-l", "--family", "ct", "--n", "3")
        assert code == 0
        payload = json.loads(out)
        assert [r["verdict"] for r in payload["reports"]] == ["pass"]

    def test_abundance_ct4_right_fails_with_witness(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--check", "abundance", "--family", "ct", "--n", "4")
        assert code == 1
        payload = json.loads(out)
        by_check = {r["check"]: r for r in payload["reports"]}
        assert by_check["abundance-left"]["verdict"] == "pass"
        right = by_check["abundance-right"]
        assert right["verdict"] == "fail"
        assert sorted(right["counterexample"]["maps"]) == [
            "[1,2,2,3]",
            "[2,3,3,4]",
            "[3,2,2,1]",
            "[4,3,3,2]",
        ]

    def test_multiple_checks(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--check", "regularity-ct,green-r", "--family", "ct", "--n", "3"
        )
        assert code == 0
        payload = json.loads(out)
        assert {r["check"] for r in payload["reports"]} == {"regularity-ct", "green-r"}

    def test_unknown_check(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--check", "nope", "--n", "3")
        assert code == 2
        assert "unknown check" in err

    def test_determinism(self, capsys):
        _, first, _ = run_cli(capsys, "verify", "--check", "abundance", "--family", "ct", "--n", "4")
        _, second, _ = run_cli(capsys, "verify", "--check", "abundance", "--family", "ct", "--n", "4")
        assert first == second

    def test_witness_replays_through_analyze(self, capsys):
        _, out, _ = run_cli(capsys, "verify", "--check", "abundance", "--family", "ct", "--n", "4")
        right = [r for r in json.loads(out)["reports"] if r["check"] == "abundance-right"][0]
        maps = right["counterexample"]["maps"]
        kernels = set()
        for word in maps:
            _, analyzed, _ = run_cli(capsys, "analyze", "--n", "4", "--map", word)
            payload = json.loads(analyzed)
            assert payload["idempotent"] is False  # the violation: no idempotent here
            kernels.add(payload["kernel_text"])
        assert kernels == {"{1}|{2,3}|{4}"}  # one shared kernel = one r-starred class


class TestRees:
    def test_orct_4_2(self, capsys):
        code, out, _ = run_cli(capsys, "rees", "--family", "orct", "--n", "4", "--p", "2")
        assert code == 0
        payload = json.loads(out)
        assert payload["carrier_size"] == 19
        assert payload["carrier"][0] == "0"
        assert payload["inverse_verification"]["inverse"] is True
        assert payload["inverse_verification"]["consistent"] is True

    def test_p_out_of_range(self, capsys):
        code, _, err = run_cli(capsys, "rees", "--family", "orct", "--n", "4", "--p", "5")
        assert code == 2
        assert "out of range" in err


class TestCounterexample:
    def test_none_found(self, capsys):
        code, out, _ = run_cli(
            capsys, "counterexample", "--check", "regularity-ct", "--family", "ct", "--n", "4"
        )
        assert code == 0
        assert json.loads(out)["witness"] is None

    def test_witness_found(self, capsys):
        code, out, _ = run_cli(
            capsys, "counterexample", "--check", "abundance", "--family", "ct", "--n", "4"
        )
        assert code == 1
        witness = json.loads(out)["witness"]
        assert "[1,2,2,3]" in witness["maps"]

    def test_csv_projection(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "counterexample", "--check", "regularity-ct", "--family", "ct", "--n", "3",
            "--output", "csv",
        )
        assert code == 0
        assert "none" in out


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "contracta.cli", "enumerate", "--family", "oct", "--n", "2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["count"] == 3

    def test_threads_flag_accepted(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--family", "oct", "--n", "2", "--threads", "4"
        )
        assert code == 0
