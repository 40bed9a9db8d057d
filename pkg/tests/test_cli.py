import json

import jsonschema
import pytest

from rek_lab import load_schema
from rek_lab.cli import EXIT_BUDGET, EXIT_INFINITY, EXIT_INPUT, EXIT_OK, main
from rek_lab.generators import complete, cycle, star
from rek_lab.io import format_edge_list, read_graph, to_graph6, write_graph
from rek_lab.products import strong_product


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in [("c6.el", cycle(6)), ("star5.el", star(5)), ("c5.el", cycle(5)),
                    ("k4.g6", complete(4)), ("c30.el", cycle(30))]:
        p = tmp_path / name
        write_graph(g, p)
        paths[name] = str(p)
    p = tmp_path / "c5xk4.g6"
    p.write_text(to_graph6(strong_product(cycle(5), complete(4)).graph) + "\n")
    paths["c5xk4.g6"] = str(p)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_c6(files, capsys):
    code, out, _ = run(capsys, "compute", files["c6.el"], "--k", "3")
    assert code == EXIT_OK and out.splitlines()[0] == "2"


def test_compute_star_is_infinite(files, capsys):
    code, out, _ = run(capsys, "compute", files["star5.el"], "--k", "2")
    assert code == EXIT_INFINITY and out.strip() == "infinity"


def test_compute_product_oracle_json(files, capsys):
    code, out, _ = run(capsys, "compute", files["c5xk4.g6"], "--k", "3", "--method", "oracle", "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["value"] == 27
    jsonschema.validate(data, load_schema("restricted_cut"))


def test_compute_oracle_refusal(files, capsys):
    code, out, _ = run(capsys, "compute", files["c30.el"], "--k", "2", "--method", "oracle")
    assert code == EXIT_BUDGET and "24" in out


@pytest.mark.parametrize("argv", [
    ["compute", "/nonexistent.el", "--k", "2"],
    ["compute", "x.el"],
    ["frobnicate"],
])
def test_input_errors(argv, capsys):
    assert run(capsys, *argv)[0] == EXIT_INPUT


def test_parse_error_names_line(tmp_path, capsys):
    p = tmp_path / "bad.el"
    p.write_text("n 3\n0 1\n0 9\n")
    code, _, err = run(capsys, "compute", str(p), "--k", "1")
    assert code == EXIT_INPUT and "line 3" in err


def test_invariants(files, capsys):
    code, out, _ = run(capsys, "invariants", files["c5xk4.g6"])
    data = json.loads(out)
    assert code == EXIT_OK
    assert (data["min_degree"], data["xi"], data["xi3"]) == (11, 20, 27)
    jsonschema.validate(data, load_schema("degree_profile"))


def test_product_writes_graph_and_index_map(files, tmp_path, capsys):
    out_path = tmp_path / "prod.g6"
    code, _, _ = run(capsys, "product", "--op", "strong", files["c5.el"], files["k4.g6"], "-o", str(out_path))
    assert code == EXIT_OK
    assert read_graph(out_path) == strong_product(cycle(5), complete(4)).graph
    side = json.loads((tmp_path / "prod.json").read_text())
    assert side["kind"] == "strong" and side["index_map"][7] == [7, 1, 3]


def test_product_to_stdout(files, capsys):
    code, out, _ = run(capsys, "product", "--op", "k2odot", files["c5.el"])
    assert code == EXIT_OK and out.startswith("n 10")
    assert run(capsys, "product", "--op", "strong", files["c5.el"])[0] == EXIT_INPUT


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "--family", "circulant", "--params", "n=8", "connection_set=1,2")
    assert code == EXIT_OK and out.startswith("n 8")
    assert run(capsys, "gen", "--family", "harary", "--params", "k=3", "n=7")[0] == EXIT_INPUT
    code, out, _ = run(capsys, "gen", "--family", "random-regular", "--params", "n=10", "d=3", "--seed", "7")
    code2, out2, _ = run(capsys, "gen", "--family", "random-regular", "--params", "n=10", "d=3", "--seed", "7")
    assert out == out2


def test_gen_output_format(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "--family", "complete", "--params", "n=4", "--output-format", "g6")
    assert out.strip() == "C~"


def test_verify(files, capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "t3.1", files["c5.el"], "--n", "4", "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["verdict"] == "confirmed" and data["computed"] == 18
    jsonschema.validate(data, load_schema("theorem_report"))


def test_verify_gate_and_budget(files, capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "T3.1", files["star5.el"], "--n", "4")
    assert code == EXIT_OK and "hypotheses-unmet" in out
    code, out, _ = run(capsys, "verify", "--theorem", "T3.2", files["c5.el"], "--n", "4",
                       "--budget-oracle", "4", "--budget-flow", "10")
    assert code == EXIT_BUDGET and "oracle-too-large" in out


def test_verify_l25_second_factor(files, capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "L2.5", files["c5.el"], "--factor2", files["k4.g6"], "--json")
    assert code == EXIT_OK and json.loads(out)["predicted"] == 32


def test_sweep_cli(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "families": {"cycle": {"n": [5, 6]}, "star": {"n": [5]}},
        "theorems": ["T3.2"], "instances": 6, "seed": 3, "n_values": [4]}))
    out_path = tmp_path / "summary.json"
    code, out, _ = run(capsys, "sweep", "--config", str(cfg), "-o", str(out_path))
    assert code == EXIT_OK and "T3.2" in out
    summary = json.loads(out_path.read_text())
    jsonschema.validate(summary, load_schema("sweep_summary"))
    assert sum(summary["counts"]["T3.2"].values()) == 6


def test_sweep_bad_config(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"families": {"wheel": {"n": [5]}}, "theorems": ["T3.2"], "instances": 1}')
    assert run(capsys, "sweep", "--config", str(cfg))[0] == EXIT_INPUT
    cfg.write_text("{")
    assert run(capsys, "sweep", "--config", str(cfg))[0] == EXIT_INPUT


def test_edge_list_input_is_plain_text(files):
    assert open(files["c6.el"]).read() == format_edge_list(cycle(6))
