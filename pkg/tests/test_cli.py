import json
import subprocess
import sys

import jsonschema
import pydot
import pytest

from interactions import analyze, loads, zoo
from interactions.cli import main
from interactions.report import AnalysisReport
from interactions.schema import load_schema


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_three_separable(capsys):
    code, out, _ = run(capsys, "classify", "3", "--separable")
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert len(rows) == 5
    assert [r.split()[1] for r in rows] == ["3", "2", "2", "1", "1"]


def test_classify_json_schema(capsys):
    code, out, _ = run(capsys, "classify", "2", "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, load_schema("catalog"))
    assert len(data["classes"]) == 4
    for c in data["classes"]:
        jsonschema.validate(c["representative"], load_schema("interaction"))


def test_analyze_glauber(capsys):
    code, out, _ = run(capsys, "analyze", "zoo:glauber")
    assert code == 0
    assert "dim Consv   0" in out
    assert "separable   false" in out


def test_analyze_json_schema_and_round_trip(capsys):
    code, out, _ = run(capsys, "analyze", "zoo:lge:3", "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, load_schema("analysis"))
    assert data["dim"] == 2 and data["class_name"] == "3-lge"
    assert AnalysisReport.from_json(data) == analyze(zoo.lge(3))
    assert AnalysisReport.from_json(json.loads(json.dumps(data))).to_json() == data


def test_iq_fig14(capsys):
    code, out, _ = run(capsys, "iq", "zoo:fig14", "--graphs", "paths:2..6")
    assert code == 0
    assert out.startswith("verdict FAIL")
    assert "witness on path(2)" in out


def test_iq_json_schema(capsys):
    for target in ("zoo:fig14", "zoo:k-exclusion:2"):
        code, out, _ = run(capsys, "iq", target, "--graphs", "paths:2..3", "--format", "json")
        jsonschema.validate(json.loads(out), load_schema("iq"))


def test_iq_budget_exit_code(capsys):
    code, _, err = run(capsys, "iq", "zoo:k-exclusion:3", "--graphs", "paths:9", "--budget", "100")
    assert code == 2
    assert err.startswith("error: resource:") and err.count("\n") == 1


def test_error_exit_codes(capsys, tmp_path):
    assert run(capsys, "analyze", str(tmp_path / "missing.json"))[0] == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "analyze", str(bad))[0] == 3
    out_of_range = tmp_path / "range.json"
    out_of_range.write_text('{"states": ["0", "1"], "edges": [[[0, 5], [1, 1]]]}')
    code, _, err = run(capsys, "analyze", str(out_of_range))
    assert code == 1 and err.startswith("error: domain:")
    assert run(capsys, "classify", "7")[0] == 2
    assert run(capsys, "iq", "zoo:exclusion", "--graphs", "trees:3")[0] == 1


def test_combine_and_zoo_build(capsys, tmp_path):
    out = tmp_path / "w.json"
    code, _, _ = run(capsys, "combine", "--wedge", "zoo:exclusion", "zoo:k-exclusion:2",
                     "--base-left", "1", "--base-right", "0", "-o", str(out))
    assert code == 0
    data = json.loads(out.read_text())
    jsonschema.validate(data, load_schema("interaction"))
    assert loads(out.read_text()).edges == zoo.lge(3).edges

    boxed = tmp_path / "b.json"
    run(capsys, "combine", "--box", "zoo:exclusion", "zoo:exclusion", "-o", str(boxed))
    assert loads(boxed.read_text()).edges == zoo.n_lane(1, 2).edges

    built = tmp_path / "z.json"
    assert run(capsys, "zoo", "build", "n-lane", "1", "2", "-o", str(built))[0] == 0
    assert loads(built.read_text()).edges == zoo.n_lane(1, 2).edges
    code, out_text, _ = run(capsys, "analyze", str(built))
    assert "dim Consv   2" in out_text


def test_zoo_list(capsys):
    code, out, _ = run(capsys, "zoo", "list")
    assert code == 0
    assert {line.split()[0] for line in out.splitlines()} == set(zoo.ZOO)


def test_export_dot_parses(capsys, tmp_path):
    dot = tmp_path / "g.dot"
    assert run(capsys, "export-dot", "zoo:k-exclusion:2", "-o", str(dot))[0] == 0
    (graph,) = pydot.graph_from_dot_data(dot.read_text())
    assert graph.get_type() == "graph"
    clusters = graph.get_subgraphs()
    assert len(clusters) == 5
    assert sorted(c.get_label() for c in clusters) == ['"(0)"', '"(1)"', '"(2)"', '"(3)"', '"(4)"']
    nodes = {n.get_name() for c in clusters for n in c.get_nodes()}
    assert '"(0,2)"' in nodes and len(nodes) == 9
    assert len(graph.get_edges()) == 4


def test_export_dot_labels_use_state_names(capsys):
    code, out, _ = run(capsys, "export-dot", "zoo:glauber")
    (graph,) = pydot.graph_from_dot_data(out)
    names = {n.get_name() for c in graph.get_subgraphs() for n in c.get_nodes()}
    assert '"(-1,1)"' in names


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "interactions", "analyze", "zoo:nope"], capture_output=True, text=True
    )
    assert proc.returncode == 1
    assert proc.stderr.startswith("error: domain: unknown zoo entry")
    assert len(proc.stderr.strip().splitlines()) == 1


def test_missing_arguments_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["combine"])
    assert exc.value.code == 2
