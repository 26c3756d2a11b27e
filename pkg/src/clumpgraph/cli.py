"""Command-line front end.

Every subcommand is a thin adapter over the library: identical inputs give
identical results to direct calls.  Exit status 0 means success (including
"verified"), 1 means a usage or input error, and 2 means a mathematical
verification failed (a JSON witness goes to stdout in that case).  All
numbers print as exact rationals.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import clumps, graphs, lp, search, structure, weighting

USAGE_ERROR = 1
VERIFICATION_FAILURE = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; this CLI reserves 2
    for verification failures, so remap usage errors to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("CLUMPGRAPH_WORKERS", "1")))
    except ValueError:
        return 1


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(args, text: str) -> None:
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_clumps(args) -> clumps.ClumpGraph:
    if getattr(args, "input", None):
        return clumps.parse_clumps(_read_input(args.input))
    if getattr(args, "clumps", None):
        if args.k is None:
            raise graphs.GraphFormatError("--clumps needs --k")
        layers = clumps.parse_clump_layers(args.clumps, args.k)
        weights = None
        if getattr(args, "weights", None):
            weights = clumps.parse_weight_line(args.weights, layers)
        return clumps.ClumpGraph(args.k, layers, weights)
    raise graphs.GraphFormatError("need --input FILE or an inline --clumps spec")


def _violations_json(report) -> str:
    return json.dumps(
        {
            "verdict": report.verdict,
            "violations": [
                {"condition": v.condition, "layer": v.layer, "detail": v.detail}
                for v in report.violations
            ],
        },
        indent=2,
    ) + "\n"


# --- subcommand bodies -------------------------------------------------------


def _cmd_layer(args) -> int:
    g = graphs.parse_graph(_read_input(args.input))
    layered = graphs.layered_colored(g, args.k)
    _emit(args, graphs.format_colored_graph(layered))
    return 0


def _cmd_saturate(args) -> int:
    g = graphs.parse_colored_graph(_read_input(args.input), args.k)
    _emit(args, graphs.format_colored_graph(graphs.saturate(g)))
    return 0


def _cmd_normalize(args) -> int:
    g = graphs.parse_colored_graph(_read_input(args.input), args.k)
    _emit(args, graphs.format_colored_graph(graphs.normalize_end_layer(g)))
    return 0


def _cmd_clump(args) -> int:
    g = graphs.parse_colored_graph(_read_input(args.input), args.k)
    h = clumps.build_clump_graph(g)
    if args.format == "dot":
        _emit(args, clumps.to_dot(h))
    else:
        _emit(args, clumps.format_clumps(h))
    return 0


def _cmd_blowup(args) -> int:
    h = _load_clumps(args)
    _emit(args, graphs.format_colored_graph(clumps.blow_up(h)))
    return 0


def _cmd_validate(args) -> int:
    h = _load_clumps(args)
    if args.level == "canonical":
        report = clumps.validate_canonical(h)
    else:
        report = clumps.validate_strongly_canonical(h)
    if report.verdict:
        if args.format == "json":
            _emit(args, _violations_json(report))
        else:
            _emit(args, "valid\n")
        return 0
    _emit(args, _violations_json(report))
    return VERIFICATION_FAILURE


def _cmd_segments(args) -> int:
    h = _load_clumps(args)
    _emit(args, json.dumps(structure.structure_report(h), indent=2) + "\n")
    return 0


def _cmd_weights(args) -> int:
    h = _load_clumps(args)
    report = weighting.scheme_report(h)
    ok = report["feasible"] and report["total"] == report["expected_total"]
    if args.format == "json":
        _emit(args, json.dumps(report, indent=2) + "\n")
    else:
        lines = ["u=" + "|".join(",".join(ws) for ws in report["weights"])]
        lines.append(f"total: {report['total']}")
        lines.append(f"feasible: {str(report['feasible']).lower()}")
        _emit(args, "\n".join(lines) + "\n")
    if not ok:
        if args.format != "json":
            _emit(args, json.dumps(report, indent=2) + "\n")
        return VERIFICATION_FAILURE
    return 0


def _cmd_lp(args) -> int:
    h = _load_clumps(args)
    if args.program == "report":
        try:
            rec = lp.duality_report(h, args.delta)
        except AssertionError as exc:
            _emit(args, json.dumps({"error": str(exc)}) + "\n")
            return VERIFICATION_FAILURE
        payload = {
            "primal": str(rec.primal),
            "dual": str(rec.dual),
            "scheme_value": "n/a" if rec.scheme_value is None else str(rec.scheme_value),
        }
        if args.format == "json":
            _emit(args, json.dumps(payload, indent=2) + "\n")
        else:
            _emit(
                args,
                f"primal: {payload['primal']}\ndual: {payload['dual']}\n"
                f"scheme: {payload['scheme_value']}\n",
            )
        return 0
    instance = (
        lp.build_primal_lp(h, args.delta)
        if args.program == "primal"
        else lp.build_dual_lp(h, args.delta)
    )
    if args.emit_lp:
        _emit(args, lp.format_lp(instance))
        return 0
    sol = lp.simplex_solve(instance)
    if args.format == "json":
        _emit(args, json.dumps(lp.solution_json(sol), indent=2) + "\n")
    else:
        out = [f"status: {sol.status}"]
        if sol.value is not None:
            out.append(f"value: {sol.value}")
        if sol.assignment is not None:
            out.append("assignment: " + " ".join(str(x) for x in sol.assignment))
        _emit(args, "\n".join(out) + "\n")
    return 0


def _cmd_enum_clumps(args) -> int:
    if args.count_only:
        seqs, classes = clumps.count_strongly_canonical(args.k, args.depth)
        _emit(args, f"sequences={seqs} classes={classes}\n")
        return 0
    lines = []
    for h in clumps.enumerate_strongly_canonical(args.k, args.depth):
        lines.append(
            "|".join(",".join(str(c) for c in layer) for layer in h.sorted_layers)
        )
    _emit(args, "\n".join(lines) + ("\n" if lines else ""))
    return 0


def _cmd_extremal(args) -> int:
    deltas = [int(x) for x in args.deltas.split(",") if x]
    rows = search.extremal_table(args.k, args.n_max, deltas, workers=args.workers)
    if args.format == "text":
        lines = [
            f"k={r.k} n={r.n} delta={r.delta} max_diam={r.max_diameter} "
            f"bound={r.bound if r.bound is not None else 'n/a'}"
            for r in rows
        ]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, search.extremal_csv(rows))
    violated = [
        r for r in rows if r.bound_floor is not None and r.max_diameter > r.bound_floor
    ]
    if violated:
        _emit(
            args,
            json.dumps(
                [
                    {
                        "k": r.k,
                        "n": r.n,
                        "delta": r.delta,
                        "max_diameter": r.max_diameter,
                        "bound": str(r.bound),
                        "witness": sorted(r.witness.edges),
                    }
                    for r in violated
                ]
            )
            + "\n",
        )
        return VERIFICATION_FAILURE
    return 0


def _cmd_k5_search(args) -> int:
    failures = search.scheme_failure_search(
        args.k, args.depth_max, limit=args.limit, workers=args.workers
    )
    payload = [
        {
            "layers": [sorted(layer) for layer in f.graph.layers],
            "k": f.graph.k,
            "kind": f.kind,
            "layer": f.layer,
            "detail": f.detail,
        }
        for f in failures
    ]
    _emit(args, json.dumps(payload, indent=2) + "\n")
    return 0


def _cmd_bound(args) -> int:
    b = weighting.diameter_bound(args.n, args.delta, args.k)
    lines = [f"{b} (floor {math.floor(b)})"]
    if args.compare:
        cmp_b = weighting.comparison_bound(args.n, args.delta, args.k)
        base = weighting.baseline_bound(args.n, args.delta)
        lines.append(f"comparison (3-1/(k-1)) n/delta - 1: {cmp_b} (floor {math.floor(cmp_b)})")
        lines.append(f"baseline 3n/(delta+1): {base}")
        if args.r is not None:
            fam = weighting.counterexample_diameter(args.r, args.n, args.delta)
            lines.append(f"counterexample family (r={args.r}): {fam}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


# --- parser ------------------------------------------------------------------


def _add_clump_source(p: _Parser, with_weights: bool = False) -> None:
    p.add_argument("--input", help="clump text file ('-' for stdin)")
    p.add_argument("--clumps", help="inline layer spec like 0|1,2|0")
    p.add_argument("--k", type=int, help="color count for inline specs")
    if with_weights:
        p.add_argument("--weights", help="inline weights like 1|2,1|1")


def build_parser() -> _Parser:
    top = _Parser(prog="clumpgraph", description=__doc__)
    top.add_argument("--output", help="write to this path instead of stdout")
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("layer", help="layer a graph from a max-eccentricity root and color it")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=["text"], default="text")
    p.set_defaults(func=_cmd_layer)

    p = sub.add_parser("saturate", help="saturate a layered colored graph")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=["text"], default="text")
    p.set_defaults(func=_cmd_saturate)

    p = sub.add_parser("normalize", help="make the last layer single-colored")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=["text"], default="text")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("clump", help="build the clump graph of a saturated graph")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=["text", "dot"], default="text")
    p.set_defaults(func=_cmd_clump)

    p = sub.add_parser("blowup", help="blow a weighted clump graph back up")
    _add_clump_source(p, with_weights=True)
    p.add_argument("--format", choices=["text"], default="text")
    p.set_defaults(func=_cmd_blowup)

    p = sub.add_parser("validate", help="check canonical / strongly canonical structure")
    _add_clump_source(p, with_weights=True)
    p.add_argument("--level", choices=["strong", "canonical"], default="strong")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("segments", help="core sets, big layers and the segment partition")
    _add_clump_source(p)
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=_cmd_segments)

    p = sub.add_parser("weights", help="assign the dual weighting and verify it")
    _add_clump_source(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("lp", help="build and solve the clump LPs")
    _add_clump_source(p)
    p.add_argument("--delta", type=int, default=1)
    p.add_argument("--program", choices=["dual", "primal", "report"], default="report")
    p.add_argument("--emit-lp", action="store_true", help="print the program instead of solving")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_lp)

    p = sub.add_parser("enum-clumps", help="enumerate strongly canonical clump graphs")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--depth", "--D", type=int, required=True, dest="depth")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--workers", type=int, default=_default_workers(),
                   help="accepted for interface parity; the stream is a single pass")
    p.add_argument("--format", choices=["text"], default="text")
    p.set_defaults(func=_cmd_enum_clumps)

    p = sub.add_parser("extremal", help="extremal diameter table over all small graphs")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--deltas", default="1,2,3")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--format", choices=["csv", "text"], default="csv")
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("k5-search", help="hunt for weighting-scheme failures")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--d-max", type=int, default=4, dest="depth_max")
    p.add_argument("--limit", type=int)
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=_cmd_k5_search)

    p = sub.add_parser("bound", help="evaluate the closed-form diameter bounds")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--compare", action="store_true")
    p.add_argument("--r", type=int, help="also print the counterexample-family diameter")
    p.add_argument("--format", choices=["text"], default="text")
    p.set_defaults(func=_cmd_bound)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"clumpgraph: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (graphs.GraphError, clumps.ClumpError, lp.LPError, ValueError) as exc:
        print(f"clumpgraph: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
