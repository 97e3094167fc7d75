from __future__ import annotations

import json

from amalgam_zdg.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_ring_with_ideal(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "Z8", "--ideal", "gen(4)")
        assert code == 0
        assert "diameter 2" in out
        assert "nonzero zero-divisors (7)" in out
        assert "duplication ring Z8 join {0, 4}" in out

    def test_z6_half_ideal_reports_diameter_three(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "Z6", "--ideal", "gen(3)")
        assert code == 0
        assert "diameter 3, girth 3" in out

    def test_domain_shows_empty_graph(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "Z5")
        assert code == 0
        assert "integral domain: yes" in out
        assert "empty" in out

    def test_json_format_round_trips(self, capsys):
        code, out, _ = run_cli(
            capsys, "analyze", "Z8", "--ideal", "gen(4)", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["ring"]["graph"]["diameter"] == 2
        assert data["duplication"]["graph"]["diameter"] == 2
        assert len(data["duplication"]["nonzero_zero_divisors"]) == 7

    def test_parse_failure_names_token_and_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "Q7")
        assert code == 2
        assert "Q7" in err


class TestVerify:
    def test_klein_line_ideal_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "Z2xZ2", "--ideal", "gen((1,0))")
        assert code == 0
        assert "T4.12" in out and "verified" in out
        assert "counterexamples: 0" in out

    def test_triangle_case_verifies_completeness(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "Z4", "--ideal", "gen(2)")
        assert code == 0
        assert "T4.8   verified" in out

    def test_unit_generator_runs_with_the_full_ideal(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "Z6", "--ideal", "gen(5)")
        assert code == 0
        assert "{0,1,2,3,4,5}" in out

    def test_json_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "Z6", "--ideal", "gen(3)", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["counterexamples"] == 0
        assert len(data["outcomes"]) == 10

    def test_bad_ideal_label_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "verify", "Z6", "--ideal", "gen(7)")
        assert code == 2
        assert "7" in err


class TestSweep:
    def test_small_sweep_json(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "sweep",
            "--family",
            "Z2..Z6",
            "--format",
            "json",
            "--workers",
            "1",
        )
        assert code == 0
        data = json.loads(out)
        assert data["family"] == ["Z2", "Z3", "Z4", "Z5", "Z6"]
        assert data["invariant_violations"] == []

    def test_empty_family_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "sweep", "--family", "")
        assert code == 2
        assert "family" in err

    def test_csv_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--family", "Z4,Z6", "--format", "csv", "--workers", "1"
        )
        assert code == 0
        assert out.splitlines()[0] == "ring,ideal,theorem,status,witness,note"

    def test_identical_invocations_are_byte_identical(self, capsys):
        args = ("sweep", "--family", "Z2..Z6", "--format", "json", "--workers", "1")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second

    def test_workers_env_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("AMALGAM_ZDG_WORKERS", "1")
        code, out, _ = run_cli(
            capsys, "sweep", "--family", "Z4,Z6", "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["family"] == ["Z4", "Z6"]

    def test_human_summary(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "--family", "Z6", "--workers", "1")
        assert code == 0
        assert "invariant violations: none" in out
        assert "C3.3" in out

    def test_out_writes_lf_utf8(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run_cli(
            capsys,
            "sweep",
            "--family",
            "Z6",
            "--format",
            "json",
            "--workers",
            "1",
            "--out",
            str(target),
        )
        assert code == 0 and out == ""
        raw = target.read_bytes()
        assert b"\r" not in raw and raw.endswith(b"\n")


class TestExportDot:
    def test_base_graph_path(self, capsys):
        code, out, _ = run_cli(
            capsys, "export-dot", "Z6", "--ideal", "zero", "--base"
        )
        assert code == 0
        assert out == (
            'graph {\n  "2";\n  "3";\n  "4";\n  "2" -- "3";\n  "3" -- "4";\n}\n'
        )

    def test_full_duplication_of_z3_is_a_four_cycle(self, capsys):
        code, out, _ = run_cli(capsys, "export-dot", "Z3", "--ideal", "full")
        assert code == 0
        node_lines = [l for l in out.splitlines() if l.endswith('";') and " -- " not in l]
        edge_lines = [l for l in out.splitlines() if " -- " in l]
        assert len(node_lines) == 4 and len(edge_lines) == 4

    def test_seven_vertex_duplication(self, capsys):
        code, out, _ = run_cli(capsys, "export-dot", "Z8", "--ideal", "gen(4)")
        assert code == 0
        node_lines = [l for l in out.splitlines() if l.endswith('";') and "--" not in l]
        assert len(node_lines) == 7

    def test_deterministic_bytes(self, capsys):
        _, first, _ = run_cli(capsys, "export-dot", "Z8", "--ideal", "gen(4)")
        _, second, _ = run_cli(capsys, "export-dot", "Z8", "--ideal", "gen(4)")
        assert first == second
