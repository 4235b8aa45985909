"""Command-line entry point.

Graphs transit between subcommands as graph6 on standard streams; reports
are JSON on stdout.  Exit codes: 0 definitive answer, 1 usage or input
error, 2 solver UNKNOWN encountered.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import __version__, cnf, constructions, harness, oracle, poset, saturation
from .graphs import Graph6Error, GraphError, parse_graph6, write_graph6

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNKNOWN = 2


def _run_report(args: argparse.Namespace, payload: dict, started: float) -> dict:
    echo = {k: v for k, v in sorted(vars(args).items()) if k != "func" and v is not None}
    echo = {k: (str(v) if not isinstance(v, (int, float, bool, str, list)) else v)
            for k, v in echo.items()}
    digest = hashlib.sha256(
        json.dumps(echo, sort_keys=True).encode()
    ).hexdigest()
    return {
        "command": echo,
        "config_digest": digest,
        "results": payload,
        "wall_time": round(time.monotonic() - started, 3),
        "artifact_version": __version__,
    }


def _emit(report: dict, args) -> None:
    out = json.dumps(report, indent=2, sort_keys=True)
    if getattr(args, "report", None):
        with open(args.report, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _solver_config(args) -> harness.SolverConfig:
    if getattr(args, "config", None):
        cfg = harness.SolverConfig.from_file(args.config)
        if args.time_limit:
            cfg.time_limit = args.time_limit
        return cfg
    cfg = harness.SolverConfig.discover(time_limit=args.time_limit or 300.0)
    if cfg is None:
        raise SystemExit(
            "no SAT solver found: set RAMSAT_SOLVER, pass --config, or put "
            "cadical/kissat/varisat on PATH"
        )
    return cfg


def cmd_construct(args) -> int:
    if args.family == "r4t":
        spec, g = constructions.construct_r4t(args.t)
    elif args.family == "r3t":
        spec, g = constructions.construct_r3t(args.t)
    elif args.family == "paley":
        spec = constructions.paley_spec(args.p)
        g = constructions.circulant(spec)
    else:
        distances = frozenset(int(d) for d in args.distances.split(","))
        spec = constructions.CirculantSpec(args.n, distances)
        g = constructions.circulant(spec)
    print(write_graph6(g))
    if args.show_spec:
        print(spec.text(), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    started = time.monotonic()
    lines = open(args.input) if args.input else sys.stdin
    reports = []
    try:
        for line in lines:
            if not line.strip():
                continue
            g = parse_graph6(line)
            report = saturation.is_doubly_saturated(g, args.s, args.t)
            reports.append({"graph6": write_graph6(g), **report.to_json()})
    finally:
        if args.input:
            lines.close()
    if not reports:
        print("no graphs on input", file=sys.stderr)
        return EXIT_ERROR
    _emit(_run_report(args, reports, started), args)
    return EXIT_OK


def cmd_encode(args) -> int:
    formula, vm = cnf.encode_ds(
        args.n, args.s, args.t, symmetry_break=not args.no_symmetry
    )
    cnf.write_dimacs(formula, args.out, vm)
    print(
        json.dumps(
            {
                "out": args.out,
                "num_vars": formula.num_vars,
                "num_clauses": len(formula.clauses),
                "groups": {
                    tag: formula.group_clause_count(tag)
                    for tag in ("goodness", "degeneracy", "maximality",
                                "minimality", "cardinality", "lex")
                },
            }
        )
    )
    return EXIT_OK


def cmd_solve(args) -> int:
    started = time.monotonic()
    cfg = _solver_config(args)
    try:
        g, result = harness.find_ds_graph(args.n, args.s, args.t, cfg)
    except harness.UnknownResult as exc:
        _emit(_run_report(args, {"status": "UNKNOWN", "detail": str(exc)}, started), args)
        return EXIT_UNKNOWN
    payload = {
        **result.to_json(),
        "graph6": write_graph6(g) if g else None,
    }
    _emit(_run_report(args, payload, started), args)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    started = time.monotonic()
    cfg = _solver_config(args)
    try:
        result = harness.enumerate_ds(
            args.n,
            args.s,
            args.t,
            cfg,
            max_models=args.max_models,
            symmetry_break=args.symmetry,
        )
    except harness.UnknownResult:
        _emit(_run_report(args, {"status": "UNKNOWN"}, started), args)
        return EXIT_UNKNOWN
    payload = {
        "classes": [write_graph6(g) for g in result.classes],
        "labeled_models": result.labeled_models,
        "complete": result.complete,
    }
    _emit(_run_report(args, payload, started), args)
    return EXIT_OK


def cmd_search_min(args) -> int:
    started = time.monotonic()
    cfg = _solver_config(args)
    report = harness.search_min_n(args.s, args.t, args.n_max, cfg)
    _emit(_run_report(args, report.to_json(), started), args)
    return EXIT_UNKNOWN if report.conditional else EXIT_OK


def cmd_paley_scan(args) -> int:
    started = time.monotonic()
    row = constructions.paley_scan(args.s, args.p_max)
    payload = {"s": args.s, "p": row.p if row else None, "p_max": args.p_max}
    _emit(_run_report(args, payload, started), args)
    return EXIT_OK


def cmd_poset(args) -> int:
    started = time.monotonic()
    if args.enumerate:
        classes = poset.enumerate_good_classes(args.n, args.s, args.t)
    else:
        with open(args.input) as fh:
            classes = poset.load_good_classes(fh, args.s, args.t)
    summary = poset.build_poset(classes, args.s, args.t)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(poset.emit_component_plot_data(summary))
    _emit(_run_report(args, summary.to_json(), started), args)
    return EXIT_OK


def cmd_oracle(args) -> int:
    for g in oracle.brute_force_oracle(args.n, args.s, args.t):
        print(write_graph6(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramsat",
        description="doubly saturated Ramsey-good graph toolkit",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_st(p):
        p.add_argument("--s", type=int, required=True)
        p.add_argument("--t", type=int, required=True)

    def add_solver(p):
        p.add_argument("--config", help="solver config file (JSON or key=value)")
        p.add_argument("--time-limit", type=float, default=None, dest="time_limit")
        p.add_argument("--report", help="write the JSON run report to a file")

    p = sub.add_parser("construct", help="emit a constructed graph as graph6")
    fam = p.add_subparsers(dest="family", required=True)
    f = fam.add_parser("r4t")
    f.add_argument("--t", type=int, required=True)
    f = fam.add_parser("r3t")
    f.add_argument("--t", type=int, required=True)
    f = fam.add_parser("paley")
    f.add_argument("--p", type=int, required=True)
    f = fam.add_parser("circulant")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--distances", required=True, help="comma-separated")
    for name in ("r4t", "r3t", "paley", "circulant"):
        fam.choices[name].add_argument("--show-spec", action="store_true")
        fam.choices[name].set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify graph6 input for double saturation")
    add_st(p)
    p.add_argument("--input", help="graph6 file (default stdin)")
    p.add_argument("--report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("encode", help="emit the DIMACS encoding")
    p.add_argument("--n", type=int, required=True)
    add_st(p)
    p.add_argument("--out", required=True)
    p.add_argument("--no-symmetry", action="store_true")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("solve", help="solve one (n,s,t) instance")
    p.add_argument("--n", type=int, required=True)
    add_st(p)
    add_solver(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("enumerate", help="enumerate models with blocking clauses")
    p.add_argument("--n", type=int, required=True)
    add_st(p)
    p.add_argument("--max-models", type=int, default=1000)
    p.add_argument("--symmetry", action="store_true",
                   help="enable lex symmetry breaking (labeled counts then "
                        "cover survivors only)")
    add_solver(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("search-min", help="scan n upward for the first SAT")
    add_st(p)
    p.add_argument("--n-max", type=int, required=True)
    add_solver(p)
    p.set_defaults(func=cmd_search_min)

    p = sub.add_parser("paley-scan", help="least Paley prime for R(s,s)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--p-max", type=int, required=True)
    p.add_argument("--report")
    p.set_defaults(func=cmd_paley_scan)

    p = sub.add_parser("poset", help="component structure of good classes")
    add_st(p)
    p.add_argument("--input", help="graph6 file of all good graphs on one n")
    p.add_argument("--enumerate", action="store_true",
                   help="enumerate internally (requires --n <= 8)")
    p.add_argument("--n", type=int, help="order for --enumerate")
    p.add_argument("--csv", help="write component plot data CSV")
    p.add_argument("--report")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("oracle", help="exhaustive doubly saturated classes, n <= 8")
    p.add_argument("--n", type=int, required=True)
    add_st(p)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.subcommand == "poset" and not args.enumerate and not args.input:
        parser.error("poset requires --input or --enumerate with --n")
    if args.subcommand == "poset" and args.enumerate and args.n is None:
        parser.error("--enumerate requires --n")
    try:
        return args.func(args)
    except (GraphError, Graph6Error, cnf.EncodingError, poset.PosetError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except harness.SolverError as exc:
        if isinstance(exc, harness.UnknownResult):
            print(f"unknown: {exc}", file=sys.stderr)
            return EXIT_UNKNOWN
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
