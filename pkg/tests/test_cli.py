import json
import subprocess
import sys

import pytest

from blowup.cli import main
from blowup.eigen import compare_spectra
from blowup.formats import read_report, write_graph6
from blowup.graph import cycle_graph, path_graph, petersen_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spectrum_examples(capsys):
    assert run(capsys, "spectrum", "--family", "laplacian", "-g", "A_")[:2] == (0, "2 0\n")
    c4 = write_graph6(cycle_graph(4))
    assert run(capsys, "spectrum", "--family", "adjacency", "-g", c4)[:2] == (0, "2 0 0 -2\n")


def test_spectrum_all_families_and_complement(capsys):
    code, out, _ = run(capsys, "spectrum", "-g", "Bw")
    assert code == 0
    assert out.splitlines() == ["adjacency: 2 -1 -1", "laplacian: 3 3 0", "signless: 4 1 1"]
    code, out, _ = run(capsys, "spectrum", "--family", "laplacian", "--complement", "-g", "Bw")
    assert out == "0 0 0\n"


def test_spectrum_malformed_graph6(capsys):
    code, out, err = run(capsys, "spectrum", "-g", "A!")
    assert code == 2 and out == "" and "invalid byte" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "spectrum", str(tmp_path / "nope.g6"))
    assert code == 2 and "cannot read" in err


def test_bad_arguments_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["blowup", "-t", "0", "-g", "A_"])
    assert exc.value.code == 2


def test_blowup_examples(capsys):
    assert run(capsys, "blowup", "--family", "laplacian", "-t", "3", "-g", "A_")[1] == "6 3 3 3 3 0\n"
    assert run(capsys, "blowup", "--family", "signless", "--complement", "-t", "2", "-g", "A_")[1] == "2 2 0 0\n"
    assert run(capsys, "blowup", "--family", "laplacian", "-t", "2", "-g", "Bg")[1] == "6 4 2 2 2 0\n"


def test_blowup_reads_edge_list_file_and_emits_graph(capsys, tmp_path):
    path = tmp_path / "p3.txt"
    path.write_text("n 3\n0 1\n1 2\n")
    code, out, _ = run(capsys, "blowup", "--family", "laplacian", "-t", "2", "--emit-graph", str(path))
    assert code == 0
    spectrum_line, graph_line = out.splitlines()
    assert spectrum_line == "6 4 2 2 2 0"
    assert graph_line.startswith("graph6: ")


def test_blowup_json_output(capsys):
    code, out, _ = run(capsys, "blowup", "-t", "2", "-g", "A_", "-o", "json", "--emit-graph")
    d = json.loads(out)
    assert d["spectra"]["laplacian"] == [4, 2, 2, 0]
    assert d["spectra"]["adjacency"] == [2, 0, 0, -2]
    assert d["graph6"] == "Cl"


def test_stdin_input(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("n 2\n0 1\n"))
    assert run(capsys, "spectrum", "--family", "signless", "-")[:2] == (0, "2 0\n")


@pytest.mark.parametrize("complement", [False, True])
@pytest.mark.parametrize("family", ["adjacency", "laplacian", "signless"])
@pytest.mark.parametrize("g6, t", [("Bg", 2), ("Bw", 3), ("DQc", 2)])
def test_blowup_agrees_with_spectrum_of_emitted_graph(capsys, family, complement, g6, t):
    flags = ["--family", family] + (["--complement"] if complement else [])
    _, out, _ = run(capsys, "blowup", "-t", str(t), "--emit-graph", "-g", g6, *flags)
    formula_line, graph_line = out.splitlines()
    _, oracle_line, _ = run(capsys, "spectrum", "-g", graph_line.split()[-1], *flags)
    formula = [float(x) for x in formula_line.split()]
    oracle = [float(x) for x in oracle_line.split()]
    assert compare_spectra(formula, oracle, 1e-8).equal


def test_verify_k2(capsys):
    code, out, _ = run(capsys, "verify", "-t", "2", "-g", "A_", "-o", "json")
    assert code == 0
    report = read_report(out)
    assert report.overall_pass and len(report.families) == 5


@pytest.mark.parametrize("g6", ["@", "A_", "Bg", "DQc"])
def test_verify_order_one(capsys, g6):
    code, out, _ = run(capsys, "verify", "-t", "1", "-g", g6)
    assert code == 0 and out.startswith("PASS")


def test_verify_petersen_file(capsys, tmp_path):
    path = tmp_path / "petersen.g6"
    path.write_text(write_graph6(petersen_graph()) + "\n")
    code, out, _ = run(capsys, "verify", "-t", "3", str(path), "-o", "json")
    d = json.loads(out)
    assert code == 0 and d["overall_pass"]
    assert max(f["max_deviation"] for f in d["families"]) < 1e-8


def test_verify_failure_still_emits_report(capsys):
    code, out, _ = run(capsys, "verify", "-t", "3", "-g", write_graph6(petersen_graph()), "--tol", "1e-300", "-o", "json")
    assert code == 3
    assert read_report(out).overall_pass is False


def test_verify_random_suite(capsys):
    code, out, _ = run(capsys, "verify", "--random", "4", "--seed", "7", "-t", "2")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 4 and all(line.startswith("PASS") for line in lines)


def test_internal_failure_exit_1(capsys, monkeypatch):
    def boom(*args, **kwargs):
        raise RuntimeError("boom")

    monkeypatch.setattr("blowup.cli.verify_blowup", boom)
    code, _, err = run(capsys, "verify", "-g", "A_")
    assert code == 1 and "internal failure" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "blowup", "blowup", "--family", "laplacian", "-t", "2", "-g", "Bg"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "6 4 2 2 2 0\n"
