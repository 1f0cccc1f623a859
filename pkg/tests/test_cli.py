import json
import subprocess
import sys

import pytest

from mpgsolver.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_gamma_ex_text(capsys, data_dir):
    code, out, _ = run_cli(capsys, "solve", str(data_dir / "gamma_ex.mpg"))
    assert code == 0
    assert "A = -1" in out and "G = -1" in out
    assert "B -> C" in out and "D -> A" in out and "G -> F" in out
    assert "E -> A" in out or "E -> G" in out


def test_solve_gamma_ex_json(capsys, data_dir):
    code, out, _ = run_cli(capsys, "solve", str(data_dir / "gamma_ex.mpg"),
                           "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["values"]["E"] == {"num": -1, "den": 1}
    assert blob["classes"][0]["least_sepm"]["values"]["C"] == 8
    assert blob["strategy"]["B"] == "C"


def test_solve_gamma_d_values_zero(capsys, data_dir):
    code, out, _ = run_cli(capsys, "solve", str(data_dir / "gamma_d.mpg"),
                           "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert all(v == {"num": 0, "den": 1} for v in blob["values"].values())


def test_solve_malformed_exits_1(capsys, tmp_path):
    bad = tmp_path / "bad.mpg"
    bad.write_text("v a 0\ne a zz 1\n")
    code, _, err = run_cli(capsys, "solve", str(bad))
    assert code == 1
    assert "line 2" in err


def test_solve_missing_file_exits_1(capsys, tmp_path):
    code, _, err = run_cli(capsys, "solve", str(tmp_path / "nope.mpg"))
    assert code == 1


def test_enum_gamma_ex_counts(capsys, data_dir):
    code, out, _ = run_cli(capsys, "enum", str(data_dir / "gamma_ex.mpg"))
    assert code == 0
    assert "summary: 3 sepms, 3 subgames, 4 optimal strategies" in out
    assert "delta 0: count 2" in out
    assert "delta 1: count 1" in out
    assert "delta 2: count 1" in out
    assert "degenerate" not in out


def test_enum_gamma_d_reports_degeneracy(capsys, data_dir):
    code, out, _ = run_cli(capsys, "enum", str(data_dir / "gamma_d.mpg"))
    assert code == 0
    assert "degenerate: |B*| > |X*|" in out


def test_enum_json_schema(capsys, data_dir):
    code, out, _ = run_cli(capsys, "enum", str(data_dir / "gamma_ex.mpg"),
                           "--format", "json")
    assert code == 0
    blob = json.loads(out)
    cls = blob["classes"][0]
    assert cls["nu"] == {"num": -1, "den": 1}
    assert len(cls["extremal_sepms"]) == 3
    assert [g["id"] for g in cls["basic_subgames"]] == [0, 1, 2]
    assert cls["basic_subgames"][0]["parent_ids"] == []
    assert cls["basic_subgames"][1]["removed_arcs"] == [["E", "A"], ["E", "G"]]
    assert [d["count"] for d in cls["decomposition"]] == [2, 1, 1]
    assert cls["degenerate"] is False


def test_enum_strategy_listing_cap(capsys, data_dir):
    code, out, _ = run_cli(capsys, "enum", str(data_dir / "gamma_ex.mpg"),
                           "--list-strategies", "1", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    block = blob["classes"][0]["decomposition"][0]
    assert block["count"] == 2
    assert len(block["strategies"]) == 1


def test_enum_byte_identical_across_runs(data_dir):
    cmd = [sys.executable, "-m", "mpgsolver.cli", "enum",
           str(data_dir / "gamma_d.mpg")]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout


def test_ttpg_k0_zero_row(capsys, data_dir):
    code, out, _ = run_cli(capsys, "ttpg", str(data_dir / "gamma_ex.mpg"),
                           "--k", "0")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split("\t") == ["k"] + list("ABCDEFG")
    assert lines[1].split("\t") == ["0"] * 8


def test_ttpg_plain_matches_oracle(capsys, data_dir, nonpositional):
    from mpgsolver.oracle import ttpg_game_tree_value
    code, out, _ = run_cli(capsys, "ttpg", str(data_dir / "nonpositional.mpg"),
                           "--k", "5")
    assert code == 0
    rows = [line.split("\t") for line in out.strip().splitlines()[1:]]
    for k, row in enumerate(rows):
        assert int(row[0]) == k
        for u, cell in enumerate(row[1:]):
            assert int(cell) == ttpg_game_tree_value(nonpositional, u, k)


def test_ttpg_fixpoint_with_reweight(capsys, data_dir):
    code, out, _ = run_cli(capsys, "ttpg", str(data_dir / "gamma_ex.mpg"),
                           "--variant", "min", "--fixpoint", "--reweight")
    assert code == 0
    assert "agrees with least-sepm: yes" in out
    assert "fixpoint at k = " in out


def test_ttpg_fixpoint_json(capsys, data_dir):
    code, out, _ = run_cli(capsys, "ttpg", str(data_dir / "gamma_d.mpg"),
                           "--variant", "min", "--fixpoint",
                           "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["agrees_with_least_sepm"] is True
    assert blob["k_reached"] >= 1
    assert blob["energy"]["values"]["u3"] == 1


def test_ttpg_fixpoint_requires_min_variant(capsys, data_dir):
    code, _, err = run_cli(capsys, "ttpg", str(data_dir / "gamma_ex.mpg"),
                           "--fixpoint")
    assert code == 2
    assert "--variant min" in err


def test_ttpg_reweight_rejects_multivalued(capsys, tmp_path):
    two = tmp_path / "two.mpg"
    two.write_text("v p 0\nv q 0\ne p p 1\ne q q 2\n")
    code, _, err = run_cli(capsys, "ttpg", str(two), "--variant", "min",
                           "--fixpoint", "--reweight")
    assert code == 2
    assert "single-valued" in err


def test_verify_gamma_ex_passes(capsys, data_dir):
    code, out, _ = run_cli(capsys, "verify", str(data_dir / "gamma_ex.mpg"))
    assert code == 0
    assert "PASS" in out
    assert "0 failure(s)" in out


def test_verify_gamma_d_notes_degeneracy(capsys, data_dir):
    code, out, _ = run_cli(capsys, "verify", str(data_dir / "gamma_d.mpg"))
    assert code == 0
    assert "(degenerate)" in out


def test_verify_random_batch(capsys):
    code, out, _ = run_cli(capsys, "verify", "--random", "5", "2", "3",
                           "11", "6")
    assert code == 0
    assert "verified 6 arena(s), 0 failure(s)" in out


def test_verify_random_parallel_jobs(capsys):
    code, out, _ = run_cli(capsys, "verify", "--random", "5", "2", "3",
                           "11", "6", "--jobs", "3")
    assert code == 0
    assert "0 failure(s)" in out


def test_verify_without_input_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify")
    assert code == 2


def test_verify_oracle_bound_skips(capsys, data_dir):
    code, out, _ = run_cli(capsys, "verify", str(data_dir / "gamma_d.mpg"),
                           "--max-strategies", "2")
    assert code == 0
    assert "SKIP" in out and "skipped (oracle bound)" in out


def test_verify_failure_writes_reproducer(capsys, data_dir, tmp_path,
                                          monkeypatch):
    from mpgsolver import cli as cli_mod
    from mpgsolver.verify import BatteryReport

    def broken(arena, max_strategies=0):
        report = BatteryReport()
        report.fail("injected failure")
        return report

    monkeypatch.setattr(cli_mod.verify_mod, "verify_arena", broken)
    monkeypatch.chdir(tmp_path)
    code, out, _ = run_cli(capsys, "verify", str(data_dir / "gamma_ex.mpg"))
    assert code == 3
    assert "FAIL" in out and "injected failure" in out
    repro = list(tmp_path.glob("mpg_failure_*.mpg"))
    assert len(repro) == 1
    from mpgsolver import parse_arena
    assert parse_arena(repro[0].read_text()).n == 7


def test_mpg_log_env_controls_logging(data_dir):
    cmd = [sys.executable, "-m", "mpgsolver.cli", "solve",
           str(data_dir / "gamma_ex.mpg")]
    quiet = subprocess.run(cmd, capture_output=True, text=True,
                           env={"MPG_LOG": "quiet", "PATH": "/usr/bin:/bin"})
    chatty = subprocess.run(cmd, capture_output=True, text=True,
                            env={"MPG_LOG": "info", "PATH": "/usr/bin:/bin"})
    assert quiet.returncode == chatty.returncode == 0
    assert quiet.stdout == chatty.stdout
    assert "value class" in chatty.stderr
    assert "value class" not in quiet.stderr


def test_enum_multivalued_arena(capsys, tmp_path):
    two = tmp_path / "two.mpg"
    two.write_text("v p 0\nv q 0\ne p p 1\ne q q -2\ne p q 0\n")
    code, out, _ = run_cli(capsys, "enum", str(two), "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert len(blob["classes"]) == 2
    nus = [cls["nu"] for cls in blob["classes"]]
    assert {"num": 1, "den": 1} in nus and {"num": -2, "den": 1} in nus


def test_console_script_entry_point(data_dir):
    proc = subprocess.run(["mpg", "solve", str(data_dir / "gamma_ex.mpg")],
                          capture_output=True, text=True)
    if proc.returncode == 127:  # script dir not on PATH in this environment
        pytest.skip("console script not on PATH")
    assert proc.returncode == 0
    assert "A = -1" in proc.stdout
