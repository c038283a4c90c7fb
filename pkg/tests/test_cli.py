import pytest

from satforge.cli import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERDICT,
    main,
)
from satforge.graph import Graph, read_graph6_file, to_graph6, write_graph6_file


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestConstruct:
    def test_writes_file_and_reports(self, tmp_path, capsys):
        out = tmp_path / "g.g6"
        code, stdout, _ = run(capsys, "construct", "--n", "9", "--out", str(out))
        assert code == EXIT_OK
        assert "edges=12 bound=12 OK" in stdout
        assert read_graph6_file(out)[0].edge_count == 12

    def test_stdout_when_no_out(self, capsys):
        code, stdout, _ = run(capsys, "construct", "--n", "12")
        assert code == EXIT_OK
        assert "edges=16" in stdout

    def test_small_n_is_usage_error(self, capsys):
        code, _, stderr = run(capsys, "construct", "--n", "8")
        assert code == EXIT_USAGE
        assert "9" in stderr


class TestCheck:
    def test_saturated_input(self, tmp_path, capsys):
        path = tmp_path / "in.g6"
        run(capsys, "construct", "--n", "10", "--out", str(path))
        code, stdout, _ = run(capsys, "check", str(path), "--k", "6")
        assert code == EXIT_OK
        assert "verdict=saturated" in stdout

    def test_cycle_fails_with_witness(self, tmp_path, capsys):
        path = tmp_path / "c6.g6"
        write_graph6_file(path, [Graph.cycle(6)])
        code, stdout, _ = run(capsys, "check", str(path), "--k", "6")
        assert code == EXIT_VERDICT
        assert "not-free" in stdout and "cycle=" in stdout

    def test_empty_file(self, tmp_path, capsys):
        path = tmp_path / "empty.g6"
        path.write_text("")
        code, _, _ = run(capsys, "check", str(path))
        assert code == EXIT_USAGE

    def test_missing_file(self, capsys):
        code, _, _ = run(capsys, "check", "/nonexistent.g6")
        assert code == EXIT_USAGE


class TestSearch:
    def test_known_value(self, tmp_path, capsys):
        code, stdout, _ = run(capsys, "search", "--n", "5", "--k", "3",
                              "--out", str(tmp_path))
        assert code == EXIT_OK
        assert "sat=4" in stdout
        assert (tmp_path / "sat_5_3.g6").exists()

    def test_budget_exit(self, tmp_path, capsys):
        code, stdout, _ = run(capsys, "search", "--n", "9", "--k", "6",
                              "--out", str(tmp_path), "--budget-nodes", "30")
        assert code == EXIT_BUDGET
        assert "budget-exhausted" in stdout

    def test_corpus_env_default(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("SATFORGE_CORPUS", str(tmp_path / "corpus"))
        code, _, _ = run(capsys, "search", "--n", "5", "--k", "3")
        assert code == EXIT_OK
        assert (tmp_path / "corpus" / "sat_5_3.g6").exists()


class TestAudit:
    def test_family_passes(self, tmp_path, capsys):
        path = tmp_path / "g.g6"
        run(capsys, "construct", "--n", "9", "--out", str(path))
        code, stdout, _ = run(capsys, "audit", str(path))
        assert code == EXIT_OK
        assert "branch=full" in stdout and "e>=10: pass" in stdout

    def test_dump_stages(self, tmp_path, capsys):
        path = tmp_path / "g.g6"
        run(capsys, "construct", "--n", "9", "--out", str(path))
        code, stdout, _ = run(capsys, "audit", str(path),
                              "--dump-stages", "g,g5,f7")
        assert code == EXIT_OK
        assert "-5/6" in stdout  # exact fraction rendering

    def test_unknown_stage_is_usage_error(self, tmp_path, capsys):
        path = tmp_path / "g.g6"
        run(capsys, "construct", "--n", "9", "--out", str(path))
        code, _, _ = run(capsys, "audit", str(path), "--dump-stages", "f9")
        assert code == EXIT_USAGE

    def test_t2_reduction_noted(self, tmp_path, capsys):
        path = tmp_path / "g11.g6"
        run(capsys, "construct", "--n", "11", "--out", str(path))
        code, stdout, _ = run(capsys, "audit", str(path))
        assert code == EXIT_OK
        assert "reduced 2" in stdout

    def test_delta3_shortcut(self, tmp_path, capsys):
        path = tmp_path / "k5.g6"
        write_graph6_file(path, [Graph.complete(5)])
        code, stdout, _ = run(capsys, "audit", str(path))
        assert code == EXIT_OK
        assert "branch=delta>=3" in stdout

    def test_non_saturated_fails(self, tmp_path, capsys):
        path = tmp_path / "p7.g6"
        write_graph6_file(path, [Graph.path(7)])
        code, stdout, _ = run(capsys, "audit", str(path))
        assert code == EXIT_VERDICT
        assert "audit error" in stdout


class TestTable:
    def test_bounds_rows(self, capsys):
        code, stdout, _ = run(capsys, "table", "--n-range", "9..12")
        assert code == EXIT_OK
        lines = stdout.strip().splitlines()
        assert len(lines) == 5
        assert lines[1].split() == ["9", "10", "12", "12", "-"]
        assert lines[4].split() == ["12", "14", "16", "16", "-"]

    def test_exact_column_from_corpus(self, tmp_path, capsys, monkeypatch):
        from satforge.construction import build_construction

        write_graph6_file(tmp_path / "sat_9_6.g6", [build_construction(9)[0]])
        monkeypatch.setenv("SATFORGE_CORPUS", str(tmp_path))
        code, stdout, _ = run(capsys, "table", "--n-range", "9..9")
        assert code == EXIT_OK
        assert stdout.strip().splitlines()[1].split()[-1] == "12"

    def test_bad_range_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "table", "--n-range", "12..9")
        assert code == EXIT_USAGE


class TestDeterminism:
    def test_construct_bytes_stable(self, tmp_path, capsys):
        a, b = tmp_path / "a.g6", tmp_path / "b.g6"
        run(capsys, "construct", "--n", "15", "--out", str(a))
        run(capsys, "construct", "--n", "15", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()
