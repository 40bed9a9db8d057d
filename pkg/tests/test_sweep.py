import jsonschema
import pytest

from rek_lab import load_schema
from rek_lab.generators import GeneratorError
from rek_lab.sweep import SweepConfig, draw_instances, dump_summary, run_sweep

SMALL = {
    "families": {
        "cycle": {"n": [5, 6]},
        "star": {"n": [4, 5]},
        "harary": {"k": [2, 3], "n": [5, 6]},
        "random-regular": {"n": [6], "d": [3]},
    },
    "theorems": ["T3.2", "T3.1"],
    "instances": 20,
    "seed": 99,
    "n_values": [3, 4],
    "budget_oracle": 12,
}


def test_draws_are_deterministic_and_feasible():
    a = draw_instances(SweepConfig.from_json(SMALL))
    b = draw_instances(SweepConfig.from_json(SMALL))
    assert [(s.to_json(), n) for s, n in a] == [(s.to_json(), n) for s, n in b]
    assert all(not (s.family == "harary" and s.params["k"] * s.params["n"] % 2) for s, _ in a)
    other = draw_instances(SweepConfig.from_json({**SMALL, "seed": 100}))
    assert [(s.to_json(), n) for s, n in a] != [(s.to_json(), n) for s, n in other]


def test_summary_shape_and_gates():
    summary = run_sweep(SweepConfig.from_json(SMALL))
    jsonschema.validate(summary, load_schema("sweep_summary"))
    assert summary["violations"] == []
    assert summary["rng"] == "splitmix64"
    assert [r["index"] for r in summary["results"]] == sorted(r["index"] for r in summary["results"])
    star_rows = [r for r in summary["results"] if r["generator"]["family"] == "star"]
    assert star_rows and all(r["verdict"] == "hypotheses-unmet" for r in star_rows if r["theorem"] == "T3.1")


def test_parallel_matches_serial():
    cfg = SweepConfig.from_json({**SMALL, "instances": 8})
    assert dump_summary(run_sweep(cfg, workers=1)) == dump_summary(run_sweep(cfg, workers=2))


def test_output_path_does_not_change_summary():
    a = run_sweep(SweepConfig.from_json({**SMALL, "instances": 4, "output": "a.json"}))
    b = run_sweep(SweepConfig.from_json({**SMALL, "instances": 4}))
    assert dump_summary(a) == dump_summary(b)


@pytest.mark.parametrize("bad", [
    {**SMALL, "families": {"wheel": {"n": [4]}}},
    {**SMALL, "colour": "blue"},
    {**SMALL, "theorems": ["T7"]},
])
def test_bad_configs(bad):
    with pytest.raises((ValueError, GeneratorError)):
        SweepConfig.from_json(bad)


def test_infeasible_family_gives_up():
    cfg = SweepConfig.from_json({**SMALL, "families": {"harary": {"k": [3], "n": [5, 7]}}})
    with pytest.raises(GeneratorError):
        draw_instances(cfg)


@pytest.mark.slow
def test_harary_complete_sweep_has_no_violations():
    cfg = SweepConfig.from_json({
        "families": {"harary": {"k": [2, 3, 4], "n": [5, 6, 7]}},
        "theorems": ["T3.2"], "instances": 50, "seed": 11, "n_values": [4, 5]})
    counts = run_sweep(cfg)["counts"]["T3.2"]
    assert counts["violated"] == 0
    assert counts["confirmed"] + counts["oracle-too-large"] == 50
