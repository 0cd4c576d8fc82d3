import json
from fractions import Fraction

import pytest

from apolar.cli.app import EXIT_ERROR, EXIT_NO, EXIT_YES, run
from apolar.cli.io import (format_graph, format_matrix_list, parse_graph, parse_matrix_list, parse_matrix_spec,
                           parse_matroid, parse_matroid_list, parse_vectors)
from apolar.cli.reports import RunReport
from apolar.detection.models import DirectedGraph, DetectionRun
from apolar.shared.errors import BadDims, InputFormatError
from apolar.shared.scalars import EXACT


def invoke(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def first_line(out):
    return out.splitlines()[0]


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


# --- detection commands ---
def test_cycle_on_triangle(capsys, fixtures_dir):
    code, out, _ = invoke(capsys, "cycle", "-g", fixtures_dir / "triangle.txt", "-d", 3, "--engine", "hankel")
    assert code == EXIT_YES and first_line(out) == "yes"
    code, out, _ = invoke(capsys, "cycle", "-g", fixtures_dir / "triangle.txt", "-d", 2)
    assert code == EXIT_NO and first_line(out) == "no"


def test_cycle_general_engine_modular(capsys, fixtures_dir):
    code, out, _ = invoke(capsys, "cycle", "-g", fixtures_dir / "triangle.txt", "-d", 3,
                          "--engine", "general", "--mod", 1000003)
    assert code == EXIT_YES and first_line(out) == "yes"


def test_path_on_triangle(capsys, fixtures_dir):
    code, out, _ = invoke(capsys, "path", "-g", fixtures_dir / "triangle.txt", "-s", 1, "-t", 3, "-d", 3)
    assert code == EXIT_YES and first_line(out) == "yes"


def test_squarefree_on_fixture_circuit(capsys, fixtures_dir):
    code, out, _ = invoke(capsys, "squarefree", "-c", fixtures_dir / "circuit.txt", "-d", 3, "--dp")
    assert code == EXIT_YES and first_line(out) == "yes"


def test_sing_on_singular_pair(capsys, fixtures_dir):
    code, out, _ = invoke(capsys, "sing", "-m", fixtures_dir / "singular_pair.txt")
    assert code == EXIT_NO and first_line(out) == "no"


def test_sing_refuses_the_hankel_engine(capsys, fixtures_dir):
    code, _, err = invoke(capsys, "sing", "-m", fixtures_dir / "singular_pair.txt", "--engine", "hankel")
    assert code == EXIT_ERROR and "general engine" in err


def test_matroid_commands(capsys, tmp_path):
    matroid = write(tmp_path, "m.txt", "2 4 2 1\n1 0 1 0\n0 0 0 1\n1 2\n3 4\n")
    code, out, _ = invoke(capsys, "matroid-parity", "-m", matroid)
    assert code == EXIT_YES and first_line(out) == "yes"
    matroids = write(tmp_path, "ms.txt", "2 1 2\n1 0\n0 1\n")
    code, out, _ = invoke(capsys, "matroid-intersect", "-m", matroids)
    assert code == EXIT_NO and first_line(out) == "no"


# --- inner products ---
def test_inner_on_generic_hankel(capsys, fixtures_dir):
    code, out, _ = invoke(capsys, "inner", "-x", "hankel:3", "-c", fixtures_dir / "circuit.txt")
    assert code == EXIT_YES and first_line(out) == "-1"
    code, out, _ = invoke(capsys, "inner", "-x", "hankel:3", "-c", fixtures_dir / "circuit.txt",
                          "--engine", "general")
    assert first_line(out) == "-1"


def test_inner_json_report(capsys, fixtures_dir):
    code, out, _ = invoke(capsys, "inner", "-x", "hankel:3", "-c", fixtures_dir / "circuit.txt", "--report", "json")
    result, payload = out.splitlines()[:2]
    report = json.loads(payload)
    assert result == "-1"
    assert set(report) == {"result", "engine", "basis_dim", "gates", "micros", "mode"}
    assert report["engine"] == "hankel" and report["basis_dim"] == 13 and report["gates"] == 10


def test_inner_text_report(capsys, fixtures_dir):
    code, out, _ = invoke(capsys, "inner", "-x", "hankel:3", "-c", fixtures_dir / "circuit.txt", "--report", "text")
    assert "basis dim: 13" in out


def test_inner_from_matrix_file(capsys, tmp_path):
    matrices = write(tmp_path, "span.txt", "2 2\n0 1\n0 0\n0 0\n1 0\n")
    circuit = write(tmp_path, "c.txt", "g1 = var 1\ng2 = mullin 1:2 g1\n")
    code, out, _ = invoke(capsys, "inner", "-m", matrices, "-c", circuit)
    # det = -x1 x2
    assert code == EXIT_YES and first_line(out) == "-1"


def test_inner_argument_errors(capsys, fixtures_dir):
    circuit = fixtures_dir / "circuit.txt"
    code, _, _ = invoke(capsys, "inner", "-c", circuit)
    assert code == EXIT_ERROR
    code, _, _ = invoke(capsys, "inner", "-x", "hankel:3", "-m", fixtures_dir / "singular_pair.txt", "-c", circuit)
    assert code == EXIT_ERROR
    code, _, err = invoke(capsys, "inner", "-x", "generic:3", "--engine", "hankel", "-c", circuit)
    assert code == EXIT_ERROR and err.startswith("error:")
    code, _, _ = invoke(capsys, "inner", "-x", "toeplitz:3", "-c", circuit)
    assert code == EXIT_ERROR


# --- convolution and lab ---
def test_convolve_methods(capsys, tmp_path):
    vectors = write(tmp_path, "v.txt", "1 2 3 4\n5 6 7 8\n")
    for method in ("fast", "naive", "algebra"):
        code, out, _ = invoke(capsys, "convolve", "-f", vectors, "--method", method)
        assert code == EXIT_YES and first_line(out) == "5 16 22 60"
    code, out, _ = invoke(capsys, "convolve", "-f", vectors, "--report", "text")
    assert "bound=" in out


def test_lab_commands(capsys):
    code, out, _ = invoke(capsys, "lab", "dims", "-d", 3)
    assert first_line(out) == "20"
    code, out, _ = invoke(capsys, "lab", "dims", "-d", 3, "--kind", "hankel")
    assert first_line(out) == "13"
    code, out, _ = invoke(capsys, "lab", "fibonacci")
    assert code == EXIT_YES and first_line(out) == "yes"
    code, out, _ = invoke(capsys, "lab", "clifford")
    assert code == EXIT_YES and first_line(out) == "yes"
    code, out, _ = invoke(capsys, "lab", "waring")
    assert code == EXIT_YES and 0 < int(first_line(out)) <= 40


# --- errors ---
def test_input_errors_name_the_line(capsys, tmp_path):
    graph = write(tmp_path, "g.txt", "# two edges promised\n3 2\n1 2\n")
    code, _, err = invoke(capsys, "cycle", "-g", graph, "-d", 2)
    assert code == EXIT_ERROR and "line 4" in err
    circuit = write(tmp_path, "c.txt", "g1 = var 1\ng2 = bogus g1\n")
    code, _, err = invoke(capsys, "squarefree", "-c", circuit, "-d", 1)
    assert code == EXIT_ERROR and "line 2" in err


def test_missing_file_and_help(capsys, tmp_path):
    code, _, _ = invoke(capsys, "cycle", "-g", tmp_path / "nope.txt", "-d", 2)
    assert code == EXIT_ERROR
    code, out, _ = invoke(capsys, "--help")
    assert code == 0 and "Usage:" in out


# --- readers and writers ---
def test_graph_reader_and_writer(fixtures_dir):
    G = parse_graph((fixtures_dir / "triangle.txt").read_text())
    assert G == DirectedGraph.cycle(3)
    assert parse_graph(format_graph(G)) == G


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("3 1\n1 4\n", 2),
    ("3 1\n1 2 3\n", 2),
    ("3 1\n1 2\n2 3\n", 3),
    ("x 1\n", 1),
])
def test_graph_reader_errors(text, line):
    with pytest.raises(InputFormatError) as info:
        parse_graph(text)
    assert info.value.line == line


def test_matrix_list_reader(fixtures_dir):
    matrices = parse_matrix_list((fixtures_dir / "singular_pair.txt").read_text())
    assert matrices == [[[1, 0], [0, 0]], [[0, 1], [0, 0]]]
    assert parse_matrix_list(format_matrix_list(matrices)) == matrices
    with pytest.raises(InputFormatError) as info:
        parse_matrix_list("1 2\n1 1/0\n0 0\n")
    assert info.value.line == 2


def test_matroid_readers():
    B, parts = parse_matroid("2 4 2 1\n1 0 1 0\n0 0 0 1\n1 2\n3 4\n")
    assert B == [[1, 0, 1, 0], [0, 0, 0, 1]] and parts == [[1, 2], [3, 4]]
    with pytest.raises(InputFormatError):
        parse_matroid("3 4 2 1\n")
    with pytest.raises(InputFormatError) as info:
        parse_matroid("2 4 2 1\n1 0 1 0\n0 0 0 1\n1 2\n3 9\n")
    assert info.value.line == 5
    assert parse_matroid_list("2 1 2\n1/2 0\n0 -1\n") == [[[0.5, 0]], [[0, -1]]]


def test_vector_reader():
    sigma, tau = parse_vectors("1 2/3\n# tau\n0 -1\n")
    assert sigma == [1, Fraction(2, 3)] and tau == [0, -1]
    with pytest.raises(InputFormatError):
        parse_vectors("1 2\n3 4\n5 6\n")


@pytest.mark.parametrize("spec,expected", [("generic:4", ("generic", (4,))), ("hankel:2", ("hankel", (2,))),
                                           ("vandermonde:5:3", ("vandermonde", (5, 3)))])
def test_matrix_specs(spec, expected):
    assert parse_matrix_spec(spec) == expected


@pytest.mark.parametrize("spec", ["generic", "hankel:0", "vandermonde:3", "toeplitz:2", "generic:x"])
def test_bad_matrix_specs(spec):
    with pytest.raises(BadDims):
        parse_matrix_spec(spec)


def test_run_report_rendering():
    report = RunReport.of_run(DetectionRun(EXACT.convert(0), "hankel", 5, 7, EXACT, "cycle", {"d": 2}), 12)
    assert report.is_no
    assert report.render(None) == "no"
    assert report.notes == ["d=2"]
    assert json.loads(report.render("json").splitlines()[1])["gates"] == 7
