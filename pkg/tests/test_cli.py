"""
Test the command-line front end: outputs and exit codes
Run: pytest tests/test_cli.py -v
"""

import io
import json
import sys

import pytest

from cli import ExitCode, main
from core.families import Families
from core.graph_io import write_edge_list
from lab.hunt import HuntReport
from lab.lemma_audit import lemma_audit


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.g6"
    path.write_bytes(b"C~\n")
    return str(path)


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text("0 1\n1 2\n2 3\n3 0\n")
    return str(path)


@pytest.fixture
def write_file(tmp_path):
    """Factory: write text under tmp_path and return the path"""
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


@pytest.mark.integration
class TestColor:
    """aecl color"""

    def test_k4_at_five(self, k4_file, capsys):
        assert main(["color", k4_file, "--kappa", "5"]) == ExitCode.OK
        out = capsys.readouterr().out
        assert out.startswith("k 5\n")
        assert len(out.strip().splitlines()) == 7

    def test_k4_at_four(self, k4_file, capsys):
        assert main(["color", k4_file, "--kappa", "4"]) == ExitCode.NEGATIVE
        assert "not-colorable" in capsys.readouterr().out

    def test_records(self, c4_file, capsys):
        assert main(["color", c4_file, "--kappa", "3", "--records"]) == ExitCode.OK
        record = json.loads(capsys.readouterr().out)
        assert record["status"] == "colorable"
        assert len(record["colors"]) == 4

    def test_heuristic_records_need_seed(self, k4_file):
        assert main(["color", k4_file, "--kappa", "5", "--mode", "heuristic", "--records"]) == ExitCode.USAGE

    def test_heuristic_with_seed(self, k4_file, capsys):
        code = main(["color", k4_file, "--kappa", "5", "--mode", "heuristic", "--seed", "1", "--records"])
        assert code == ExitCode.OK
        assert json.loads(capsys.readouterr().out)["restart"] is not None

    def test_malformed_graph(self, write_file):
        path = write_file("bad.txt", "0 1\n1 2 3\n")
        assert main(["color", path, "--kappa", "3"]) == ExitCode.DATA

    def test_missing_file(self, tmp_path):
        assert main(["color", str(tmp_path / "nope.txt"), "--kappa", "3"]) == ExitCode.USAGE

    def test_bad_flag(self, k4_file):
        with pytest.raises(SystemExit) as exc:
            main(["color", k4_file, "--kappa", "0"])
        assert exc.value.code == ExitCode.USAGE

    def test_stdin(self, monkeypatch, capsys):
        monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(b"0 1\n1 2\n")))
        assert main(["color", "-", "--kappa", "2"]) == ExitCode.OK
        assert capsys.readouterr().out.startswith("k 2\n")


@pytest.mark.integration
class TestVerify:
    """aecl verify"""

    def test_acyclic(self, c4_file, write_file, capsys):
        coloring = write_file("ok.col", "k 3\n0 1 1\n1 2 2\n2 3 1\n3 0 3\n")
        assert main(["verify", c4_file, coloring]) == ExitCode.OK
        assert capsys.readouterr().out.strip() == "acyclic"

    def test_bichromatic_cycle(self, c4_file, write_file, capsys):
        coloring = write_file("bad.col", "k 3\n0 1 1\n1 2 2\n2 3 1\n3 0 2\n")
        assert main(["verify", c4_file, coloring, "--records"]) == ExitCode.NEGATIVE
        record = json.loads(capsys.readouterr().out)
        assert record["acyclic"] is False
        assert sorted(record["cycle_colors"]) == [1, 2]

    def test_missing_edge_is_data_error(self, c4_file, write_file):
        coloring = write_file("partial.col", "k 3\n0 1 1\n1 2 2\n2 3 1\n")
        assert main(["verify", c4_file, coloring]) == ExitCode.DATA

    def test_edge_not_in_graph(self, c4_file, write_file):
        coloring = write_file("stray.col", "k 3\n0 2 1\n")
        assert main(["verify", c4_file, coloring]) == ExitCode.DATA


@pytest.mark.integration
class TestAnalysisCommands:
    """index, mad, minimal, audit, discharge"""

    def test_index(self, tmp_path, capsys):
        path = tmp_path / "k33.txt"
        path.write_bytes(write_edge_list(Families.complete_bipartite(3, 3)))
        assert main(["index", str(path)]) == ExitCode.OK
        assert capsys.readouterr().out.strip() == "5"

    def test_index_needs_edges(self, write_file):
        path = write_file("empty.txt", "# n 3\n")
        assert main(["index", path]) == ExitCode.USAGE

    def test_mad(self, k4_file, capsys):
        assert main(["mad", k4_file]) == ExitCode.OK
        assert capsys.readouterr().out.strip() == "3/1"

    def test_minimal(self, c4_file, capsys):
        assert main(["minimal", c4_file, "--kappa", "2"]) == ExitCode.OK
        assert capsys.readouterr().out.startswith("minimal")

    def test_not_minimal(self, c4_file):
        assert main(["minimal", c4_file, "--kappa", "3"]) == ExitCode.NEGATIVE

    def test_audit_certified(self, c4_file, capsys):
        assert main(["audit", c4_file, "--kappa", "2", "--certify"]) == ExitCode.OK
        assert "certified minimal" in capsys.readouterr().out

    def test_audit_violation(self, write_file, capsys):
        path = write_file("bowtie.txt", "0 1\n1 2\n2 0\n0 3\n3 4\n4 0\n")
        assert main(["audit", path, "--kappa", "4", "--records", "--seed", "0"]) == ExitCode.NEGATIVE
        lines = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
        assert lines[0]["lemma"] == "kappa=2"
        assert lines[0]["status"] == "violated"

    def test_audit_records_need_seed(self, k4_file):
        """The sampled no-extension checks are random"""
        assert main(["audit", k4_file, "--kappa", "4", "--records"]) == ExitCode.USAGE

    def test_audit_budget_reaches_enumeration(self, mocker, k4_file):
        spy = mocker.patch("cli.lemma_audit", wraps=lemma_audit)
        main(["audit", k4_file, "--kappa", "4", "--budget", "50"])
        assert spy.call_args.kwargs["node_budget"] == 50

    def test_minimal_records(self, c4_file, capsys):
        assert main(["minimal", c4_file, "--kappa", "2", "--records"]) == ExitCode.OK
        record = json.loads(capsys.readouterr().out)
        assert record["minimal"] is True
        assert set(record["edge_colorings"]) == {"0", "1", "2", "3"}

    def test_audit_flags_exclusive(self, c4_file):
        with pytest.raises(SystemExit) as exc:
            main(["audit", c4_file, "--kappa", "2", "--certify", "--assume-minimal"])
        assert exc.value.code == ExitCode.USAGE

    def test_discharge(self, k4_file, capsys):
        assert main(["discharge", k4_file, "--kappa", "5"]) == ExitCode.OK
        assert "rules=nmad4" in capsys.readouterr().out

    def test_discharge_unsupported_kappa(self, k4_file):
        assert main(["discharge", k4_file, "--kappa", "4"]) == ExitCode.USAGE


@pytest.mark.integration
class TestHunt:
    """aecl hunt"""

    def test_clean_sweep(self, capsys):
        assert main(["hunt", "--max-n", "4", "--rule", "delta+2", "--class", "mad4"]) == ExitCode.OK
        assert capsys.readouterr().out.strip().endswith("scanned")

    def test_violations_as_records(self, capsys):
        assert main(["hunt", "--max-n", "4", "--rule", "delta", "--records"]) == ExitCode.NEGATIVE
        records = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
        assert any(r["violation"] for r in records)

    def test_cap(self):
        assert main(["hunt", "--max-n", "9"]) == ExitCode.USAGE

    def test_bad_range(self):
        assert main(["hunt", "--max-n", "3", "--min-n", "4"]) == ExitCode.USAGE

    def test_profile_supplies_jobs_and_budget(self, mocker):
        """The sweep template's hunt and solver sections apply"""
        fake = mocker.patch("cli.hunt_counterexamples", return_value=HuntReport(rule="delta+2", graph_class="all"))
        assert main(["hunt", "--max-n", "3", "--profile", "sweep"]) == ExitCode.OK
        cfg = fake.call_args.args[0]
        assert cfg.jobs == 4
        assert cfg.node_budget == 2_000_000
        assert cfg.connected_only is True

    def test_flags_override_profile(self, mocker):
        fake = mocker.patch("cli.hunt_counterexamples", return_value=HuntReport(rule="delta+2", graph_class="all"))
        main(["hunt", "--max-n", "3", "--profile", "sweep", "--jobs", "2", "--budget", "10",
              "--include-disconnected"])
        cfg = fake.call_args.args[0]
        assert (cfg.jobs, cfg.node_budget, cfg.connected_only) == (2, 10, False)

    def test_corpus(self, write_file, capsys):
        corpus = write_file("small.g6", "C~\nCl\n")
        assert main(["hunt", "--max-n", "4", "--corpus", corpus, "--records"]) == ExitCode.OK
        assert len(capsys.readouterr().out.splitlines()) == 2
