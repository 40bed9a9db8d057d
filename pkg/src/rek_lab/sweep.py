"""Batch sweeps: generator instances x theorem ids, summarized as JSON.

An instance is a generated factor graph paired with one factor order ``n``.
Every random choice comes from a SplitMix64 stream seeded by the config, so
re-running a config reproduces the summary byte for byte.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any

from rek_lab.generators import FAMILIES, GeneratorError, GeneratorSpec
from rek_lab.rng import ALGORITHM, SplitMix64
from rek_lab.theorems import VERDICTS, Budget, check_theorem, normalize_id

THREADS_ENV = "REK_LAB_THREADS"
MAX_DRAWS = 1000
RANDOM_FAMILIES = ("random-regular",)


@dataclass
class SweepConfig:
    """``families`` maps a family name to ``{param: [choices...]}``."""

    families: dict[str, dict[str, list]]
    theorems: list[str]
    instances: int
    seed: int = 0
    n_values: list[int] = field(default_factory=lambda: [4])
    budget_oracle: int = 24
    budget_flow: int = 2000
    output: str | None = None

    def __post_init__(self) -> None:
        self.theorems = [normalize_id(t) for t in self.theorems]
        for fam in self.families:
            if fam not in FAMILIES:
                raise GeneratorError(f"unknown family {fam!r}")
        if self.instances < 0:
            raise ValueError("instances must be non-negative")
        if not self.n_values:
            raise ValueError("n_values must be non-empty")

    @classmethod
    def from_json(cls, data: dict) -> "SweepConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown sweep config keys: {sorted(unknown)}")
        return cls(**data)

    def to_json(self) -> dict[str, Any]:
        return asdict(self)

    @property
    def budget(self) -> Budget:
        return Budget(self.budget_oracle, self.budget_flow)


def draw_instances(config: SweepConfig) -> list[tuple[GeneratorSpec, int]]:
    """Deterministic list of ``(generator spec, n)`` pairs.

    Parameter combinations the family rejects (e.g. odd ``k*n`` for Harary
    graphs) are redrawn from the same stream.
    """
    rng = SplitMix64(config.seed)
    names = sorted(config.families)
    if config.instances and not names:
        raise ValueError("sweep config has no generator families")
    out = []
    for _ in range(config.instances):
        for _attempt in range(MAX_DRAWS):
            fam = names[rng.below(len(names))]
            choices = config.families[fam]
            params = {}
            for key in sorted(choices):
                options = choices[key]
                pick = options[rng.below(len(options))]
                params[key] = tuple(pick) if isinstance(pick, list) else pick
            seed = rng.next_u64() if fam in RANDOM_FAMILIES else 0
            spec = GeneratorSpec(fam, params, seed)
            n = config.n_values[rng.below(len(config.n_values))]
            try:
                spec.build()
            except GeneratorError:
                continue
            out.append((spec, n))
            break
        else:
            raise GeneratorError(f"no feasible instance after {MAX_DRAWS} draws")
    return out


def _run_one(job: tuple[dict, int, list[str], tuple[int, int]]) -> list[dict]:
    spec_json, n, theorems, (b_oracle, b_flow) = job
    g = GeneratorSpec.from_json(spec_json).build()
    rows = []
    for tid in theorems:
        report = check_theorem(tid, g, n, Budget(b_oracle, b_flow))
        rows.append({
            "theorem": tid,
            "verdict": report.verdict,
            "predicted": report.predicted,
            "computed": report.to_json()["computed"],
            "method": report.method,
        })
    return rows


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_sweep(config: SweepConfig, workers: int | None = None) -> dict[str, Any]:
    instances = draw_instances(config)
    budget = (config.budget_oracle, config.budget_flow)
    # identical draws are computed once
    keys = [json.dumps([spec.to_json(), n], sort_keys=True) for spec, n in instances]
    unique = sorted(set(keys))
    jobs = [(*json.loads(key), config.theorems, budget) for key in unique]
    workers = thread_count() if workers is None else workers
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_one, jobs))
    else:
        outcomes = [_run_one(job) for job in jobs]
    by_key = dict(zip(unique, outcomes))
    rows = []
    for index, ((spec, n), key) in enumerate(zip(instances, keys)):
        for row in by_key[key]:
            rows.append({"index": index, "generator": spec.to_json(), "n": n, **row})
    counts = {tid: {v: 0 for v in VERDICTS} for tid in config.theorems}
    for row in rows:
        counts[row["theorem"]][row["verdict"]] += 1
    violations = [row for row in rows if row["verdict"] == "violated"]
    recorded = config.to_json()
    recorded.pop("output")  # where the summary is written is not part of the result
    return {
        "config": recorded,
        "rng": ALGORITHM,
        "instances": config.instances,
        "counts": counts,
        "violations": violations,
        "results": rows,
    }


def dump_summary(summary: dict) -> str:
    return json.dumps(summary, indent=2, sort_keys=True) + "\n"
