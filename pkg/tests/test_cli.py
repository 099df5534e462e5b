import json

import pytest

from circuitwalks import adjacency_graph, load, vertex_csv, write_hrep
from circuitwalks.cli import main
from propsuites import _mk_hrep


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def pentagon_file(tmp_path):
    p = _mk_hrep([(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1)], [3, 3, 0, 0, 5])
    f = tmp_path / "pentagon.hrep"
    f.write_text(write_hrep(p))
    return f


def test_vertices_csv_matches_library(capsys):
    code, out, _ = run(capsys, "vertices", "--input", "m4", "--format", "csv")
    assert code == 0
    p = load("m4")
    assert out == vertex_csv(adjacency_graph(p))


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "vertices", "--input", "m4", "--format", "dot")
    assert code == 2 and "usage error" in err
    code, _, err = run(capsys, "circuit-walk", "search", "--input", "m4",
                       "--from", "apex:0", "--to", "apex:1")
    assert code == 2 and "max-depth" in err
    code, _, err = run(capsys, "circuit-walk", "two-step", "--input", "m4",
                       "--from", "apex:0")
    assert code == 2
    code, _, err = run(capsys, "vertices")
    assert code == 2


def test_computation_errors_exit_1(capsys, tmp_path):
    code, _, err = run(capsys, "vertices", "--input", str(tmp_path / "missing.hrep"))
    assert code == 1 and err.startswith("error:")
    code, _, err = run(capsys, "wedge", "--input", "m4", "--facet", "99")
    assert code == 1


def test_spindle_detect_negative_is_not_an_error(capsys, tmp_path):
    f = pentagon_file(tmp_path)
    code, out, _ = run(capsys, "spindle", "detect", "--input", str(f))
    assert code == 0
    assert "not a spindle" in out


def test_spindle_detect_positive(capsys):
    code, out, _ = run(capsys, "spindle", "length", "--input", "m4")
    assert code == 0
    assert "4" in out


def test_wedge_emits_hrep(capsys):
    code, out, _ = run(capsys, "wedge", "--input", "m4", "--facet", "1")
    assert code == 0
    assert out.startswith("H")
    assert out.rstrip().endswith("END")


def test_verify_case_json(capsys):
    code, out, _ = run(capsys, "verify-paper", "--case", "todd", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["passed"] is True
    assert all(r["passed"] for r in obj["results"])


def test_byte_determinism(capsys):
    a = run(capsys, "circuits", "--input", "m4", "--format", "json")
    b = run(capsys, "circuits", "--input", "m4", "--format", "json", "--jobs", "2")
    assert a == b


def test_out_flag_writes_file(capsys, tmp_path):
    dest = tmp_path / "graph.dot"
    code, out, _ = run(capsys, "graph", "--input", "m4", "--format", "dot",
                       "--out", str(dest))
    assert code == 0
    assert out == ""
    assert dest.read_text().startswith("graph skeleton {")


def test_verify_input_pipeline_depth_bound(capsys, tmp_path):
    src = write_hrep(load("s28"))
    f = tmp_path / "copy.hrep"
    f.write_text(src)
    code, out, _ = run(capsys, "verify-paper", "--input", str(f), "--max-depth", "0")
    assert code == 3
    code, out, _ = run(capsys, "verify-paper", "--input", str(f))
    assert code == 0
    assert "upper bound" in out


def test_distance_between_apices(capsys):
    code, out, _ = run(capsys, "distance", "--input", "m4",
                       "--from", "apex:0", "--to", "apex:1")
    assert code == 0
    assert "4" in out


@pytest.mark.parametrize("fmt", ["text", "json", "csv"])
def test_twoface_scan_formats(capsys, fmt):
    code, out, _ = run(capsys, "twoface", "scan", "--input", "m4", "--format", fmt)
    assert code == 0 and out
