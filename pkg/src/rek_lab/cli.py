"""``rek-lab`` command line.

Exit codes: 0 ok/confirmed, 1 violated, 2 input error, 3 value is +infinity,
4 budget refusal (oracle limit or product too large).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from rek_lab import connectivity as conn
from rek_lab.generators import FAMILIES, GeneratorError, GeneratorSpec
from rek_lab.graph import GraphError
from rek_lab.invariants import degree_profile
from rek_lab.io import ParseError, format_edge_list, read_graph, to_graph6, write_graph
from rek_lab.oracle import DEFAULT_LIMIT, OracleLimitError
from rek_lab.products import cartesian_product, direct_product, k2_odot, strong_product
from rek_lab.sweep import SweepConfig, dump_summary, run_sweep
from rek_lab.theorems import THEOREMS, Budget, check_theorem

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INPUT = 2
EXIT_INFINITY = 3
EXIT_BUDGET = 4


class InputError(Exception):
    pass


def _load(path: str, fmt: str | None):
    try:
        return read_graph(path, fmt)
    except FileNotFoundError:
        raise InputError(f"cannot read {path}: no such file") from None
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(data, as_json: bool, text: str) -> None:
    print(json.dumps(data, indent=2, sort_keys=True) if as_json else text)


def cmd_compute(args) -> int:
    g = _load(args.file, args.format)
    if args.k == 1 and g.n < 2:
        raise InputError("edge-connectivity needs at least 2 vertices")
    if args.k == 2 and g.n < 4:
        raise InputError("restricted edge-connectivity needs at least 4 vertices")
    try:
        if args.k == 3:
            cut = conn.lambda3(g, args.method, args.budget_oracle)
        else:
            cut = conn.restricted_edge_connectivity(g, args.k, args.method, args.budget_oracle)
    except OracleLimitError as exc:
        _emit({"error": str(exc), "limit": exc.limit, "n": exc.n}, args.json, f"refused: {exc}")
        return EXIT_BUDGET
    data = cut.to_json()
    text = str(conn.render_value(cut.value))
    if cut.witness is not None and not args.json:
        text += f"\nside_x: {' '.join(map(str, cut.witness.side_x))}"
    _emit(data, args.json, text)
    return EXIT_OK if cut.is_finite else EXIT_INFINITY


def cmd_invariants(args) -> int:
    g = _load(args.file, args.format)
    if g.n == 0:
        raise InputError("empty graph has no degree profile")
    print(json.dumps(degree_profile(g).to_json(), indent=2, sort_keys=True))
    return EXIT_OK


_PRODUCTS = {
    "strong": strong_product,
    "cartesian": cartesian_product,
    "direct": direct_product,
}


def cmd_product(args) -> int:
    g = _load(args.left, args.format)
    if args.op == "k2odot":
        if args.right is not None:
            raise InputError("k2odot takes a single graph")
        pg = k2_odot(g)
    else:
        if args.right is None:
            raise InputError(f"{args.op} product needs two graph files")
        h = _load(args.right, args.format)
        try:
            pg = _PRODUCTS[args.op](g, h)
        except GraphError as exc:
            raise InputError(str(exc)) from None
    side = {"kind": pg.kind.value, "m": pg.m, "n": pg.n, "index_map": pg.index_map()}
    if args.output:
        write_graph(pg.graph, args.output, args.output_format)
        map_path = args.index_map or str(Path(args.output).with_suffix(".json"))
        Path(map_path).write_text(json.dumps(side) + "\n")
    else:
        fmt = args.output_format or "el"
        sys.stdout.write(to_graph6(pg.graph) + "\n" if fmt == "g6" else format_edge_list(pg.graph))
        if args.index_map:
            Path(args.index_map).write_text(json.dumps(side) + "\n")
    return EXIT_OK


def _parse_params(items: list[str]) -> dict:
    params = {}
    for item in items:
        if "=" not in item:
            raise InputError(f"parameter {item!r} must look like key=value")
        key, raw = item.split("=", 1)
        try:
            if key == "connection_set":
                params[key] = tuple(int(x) for x in raw.split(",") if x)
            else:
                params[key] = int(raw)
        except ValueError:
            raise InputError(f"parameter {item!r} needs integer values") from None
    return params


def cmd_gen(args) -> int:
    spec = GeneratorSpec(args.family, _parse_params(args.params), args.seed)
    try:
        g = spec.build()
    except KeyError as exc:
        raise InputError(f"family {args.family} needs parameter {exc.args[0]}") from None
    except GeneratorError as exc:
        raise InputError(str(exc)) from None
    if args.output:
        write_graph(g, args.output, args.output_format)
    else:
        fmt = args.output_format or "el"
        sys.stdout.write(to_graph6(g) + "\n" if fmt == "g6" else format_edge_list(g))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load(args.file, args.format)
    h = _load(args.factor2, args.format) if args.factor2 else None
    budget = Budget(args.budget_oracle, args.budget_flow)
    try:
        report = check_theorem(args.theorem, g, args.n, budget, h=h)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    data = report.to_json()
    text = (f"{report.theorem}: {report.verdict} "
            f"(predicted {report.predicted}, computed {data['computed']}, method {report.method})")
    _emit(data, args.json, text)
    if report.verdict == "violated":
        return EXIT_VIOLATED
    if report.verdict == "oracle-too-large":
        return EXIT_BUDGET
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        data = json.loads(Path(args.config).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {args.config}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.config}: invalid JSON at line {exc.lineno}") from None
    if args.seed is not None:
        data["seed"] = args.seed
    if args.budget_oracle is not None:
        data["budget_oracle"] = args.budget_oracle
    if args.budget_flow is not None:
        data["budget_flow"] = args.budget_flow
    if args.output is not None:
        data["output"] = args.output
    try:
        config = SweepConfig.from_json(data)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad sweep config: {exc}") from None
    summary = run_sweep(config)
    text = dump_summary(summary)
    if config.output:
        Path(config.output).write_text(text)
    if args.json or not config.output:
        sys.stdout.write(text)
    else:
        for tid, counts in summary["counts"].items():
            print(tid, " ".join(f"{k}={v}" for k, v in counts.items()))
    return EXIT_VIOLATED if summary["violations"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rek-lab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def graph_args(sp):
        sp.add_argument("--format", choices=("el", "g6"), help="override extension-based detection")

    c = sub.add_parser("compute", help="lambda, lambda_2 or lambda_3 of a graph")
    c.add_argument("file")
    c.add_argument("--k", type=int, choices=(1, 2, 3), required=True)
    c.add_argument("--method", choices=("flow", "oracle"), default="flow")
    c.add_argument("--json", action="store_true")
    c.add_argument("--budget-oracle", type=int, default=DEFAULT_LIMIT)
    graph_args(c)
    c.set_defaults(func=cmd_compute)

    i = sub.add_parser("invariants", help="degree profile as JSON")
    i.add_argument("file")
    graph_args(i)
    i.set_defaults(func=cmd_invariants)

    pr = sub.add_parser("product", help="graph products")
    pr.add_argument("--op", choices=("strong", "cartesian", "direct", "k2odot"), required=True)
    pr.add_argument("left")
    pr.add_argument("right", nargs="?")
    pr.add_argument("-o", "--output")
    pr.add_argument("--output-format", choices=("el", "g6"))
    pr.add_argument("--index-map", help="path for the JSON index side table")
    graph_args(pr)
    pr.set_defaults(func=cmd_product)

    gn = sub.add_parser("gen", help="generate a factor graph")
    gn.add_argument("--family", choices=FAMILIES, required=True)
    gn.add_argument("--params", nargs="*", default=[], metavar="KEY=VALUE")
    gn.add_argument("--seed", type=int, default=0)
    gn.add_argument("-o", "--output")
    gn.add_argument("--output-format", choices=("el", "g6"))
    gn.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="check one theorem on one factor graph")
    v.add_argument("--theorem", required=True,
                   type=str.upper, choices=THEOREMS, metavar="{" + ",".join(t.lower() for t in THEOREMS) + "}")
    v.add_argument("file")
    v.add_argument("--n", type=int)
    v.add_argument("--factor2", help="second factor for L2.5 (default C_n)")
    v.add_argument("--json", action="store_true")
    v.add_argument("--budget-oracle", type=int, default=DEFAULT_LIMIT)
    v.add_argument("--budget-flow", type=int, default=2000)
    graph_args(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="run a generator x theorem sweep from a JSON config")
    s.add_argument("--config", required=True)
    s.add_argument("--seed", type=int)
    s.add_argument("-o", "--output")
    s.add_argument("--json", action="store_true")
    s.add_argument("--budget-oracle", type=int)
    s.add_argument("--budget-flow", type=int)
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
