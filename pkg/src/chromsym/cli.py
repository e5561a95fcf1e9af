"""Command-line front end.

Subcommands compute chromatic symmetric functions and chromatic polynomials
of graph specs, run positivity checks and missing-partition scans, list
partitions, and drive the identity verifiers (single instances or whole
grids).  Every subcommand has a human-readable and a ``--json`` mode with
byte-deterministic output; ``--strict`` turns negative mathematical verdicts
into exit status 1, and usage or domain errors exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .csf import chromatic_poly_closed, chromatic_poly_dc, compute_csf
from .graphs import parse_graph_spec
from .identities import DEFAULT_GRID_VERTEX_CAP, VERIFIERS, iter_grid
from .partitions import Partition, partitions_of
from .positivity import e_positivity, missing_partition_scan, s_positivity
from .symfunc import Basis, convert

_CLOSED_CHROMATIC_FAMILIES = {"sun", "dumbbell", "cdumbbell", "sdumbbell"}


def _compute_chromatic(spec_text: str, max_edges=None):
    spec = parse_graph_spec(spec_text)
    if spec.family in _CLOSED_CHROMATIC_FAMILIES:
        return chromatic_poly_closed(spec), "closed"
    return chromatic_poly_dc(spec.build(), max_edges=max_edges), "dc"


def _print_json(obj) -> None:
    print(json.dumps(obj, separators=(", ", ": ")))


def _cmd_csf(args) -> int:
    f, engine = compute_csf(args.spec, max_subset_edges=args.max_edges)
    basis = Basis(args.basis)
    if basis is not Basis.E:
        f = convert(f, basis, max_degree=args.max_degree)
    if args.json:
        obj = f.to_json_obj()
        obj["spec"] = str(parse_graph_spec(args.spec))
        obj["engine"] = engine
        _print_json(obj)
    else:
        print(f"X[{args.spec}] = {f}  ({engine})")
    return 0


def _cmd_chrompoly(args) -> int:
    poly, engine = _compute_chromatic(args.spec, max_edges=args.max_edges)
    if args.at is not None:
        value = poly(args.at)
        if args.json:
            _print_json({"spec": args.spec, "engine": engine, "at": args.at, "value": value})
        else:
            print(value)
        return 0
    if args.json:
        _print_json({"spec": args.spec, "engine": engine, "coeffs": poly.to_json_obj()})
    else:
        print(f"chi[{args.spec}] = {poly}  ({engine})")
    return 0


def _cmd_positivity(args) -> int:
    check = e_positivity if args.basis == "e" else s_positivity
    report = check(args.spec, max_subset_edges=args.max_edges)
    if args.json:
        _print_json(report.to_json_obj())
    else:
        verdict = f"{args.basis}-positive" if report.positive else f"not {args.basis}-positive"
        line = f"{args.spec}: {verdict}  ({report.engine})"
        if report.witness is not None:
            lam, c = report.witness
            line += f"; witness [{','.join(map(str, lam))}] -> {c}"
        print(line)
    return 0 if report.positive or not args.strict else 1


def _cmd_scan(args) -> int:
    g = parse_graph_spec(args.spec).build()
    missing = missing_partition_scan(g, max_vertices=args.max_vertices)
    if args.json:
        _print_json({"spec": args.spec, "missing": [list(lam) for lam in missing]})
    elif missing:
        for lam in missing:
            print(lam)
    else:
        print("none")
    return 1 if missing and args.strict else 0


def _cmd_partitions(args) -> int:
    parts = partitions_of(args.n)
    if args.json:
        _print_json([list(lam) for lam in parts])
    else:
        for lam in parts:
            print(lam)
    return 0


def _parse_int_params(names):
    def parse(text: str) -> dict:
        pieces = [p.strip() for p in text.split(",")]
        if len(pieces) != len(names):
            raise ValueError(f"expected {len(names)} comma-separated values ({','.join(names)})")
        return {name: int(p) for name, p in zip(names, pieces)}

    return parse


def _parse_distinguishability(text: str) -> dict:
    family, _, cap = text.partition(",")
    if not cap:
        raise ValueError("expected FAMILY,SIZE_CAP")
    return {"family": family.strip(), "size_cap": int(cap)}


_PARAM_PARSERS = {
    "triple_deletion": lambda s: {"target": s},
    "sun_coefficient": _parse_int_params(("n", "k")),
    "small_sun_coefficient": _parse_int_params(("a", "b", "c")),
    "sun_spider_reduction": _parse_int_params(("a", "b")),
    "dumbbell_recursion": _parse_int_params(("m", "l", "n")),
    "dumbbell_tadpole_expansion": _parse_int_params(("m", "l", "n")),
    "dumbbell_full_expansion": _parse_int_params(("m", "l", "n")),
    "cdumbbell_recursion": _parse_int_params(("m", "l", "n")),
    "cdumbbell_lollipop_expansion": _parse_int_params(("m", "l", "n")),
    "cdumbbell_full_expansion": _parse_int_params(("m", "l", "n")),
    "chromatic_closed_forms": lambda s: {"target": s},
    "distinguishability": _parse_distinguishability,
}


def _grid_worker(task):
    name, kwargs = task
    return VERIFIERS[name](**kwargs).to_json_obj()


def _report_line(obj: dict) -> str:
    status = "ok" if obj["equal"] else "FAIL"
    return f"{obj['name']} {json.dumps(obj['params'], separators=(',', ':'))}: {status}"


def _cmd_verify(args) -> int:
    name = args.name.replace("-", "_")
    if name not in VERIFIERS:
        known = ", ".join(sorted(VERIFIERS))
        raise ValueError(f"unknown identity {args.name!r}; known: {known}")
    if args.grid is not None:
        tasks = [(name, kw) for kw in iter_grid(name, args.grid)]
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(_grid_worker, tasks))
        else:
            results = [_grid_worker(t) for t in tasks]
        all_equal = all(r["equal"] for r in results)
        if args.json:
            _print_json(
                {
                    "identity": name,
                    "grid_cap": args.grid,
                    "count": len(results),
                    "all_equal": all_equal,
                    "reports": results,
                }
            )
        else:
            for r in results:
                print(_report_line(r))
            print(f"{name}: {len(results)} instances, {'all equal' if all_equal else 'FAILURES'}")
        return 1 if not all_equal and args.strict else 0
    if args.params is None:
        raise ValueError("verify needs PARAMS, or --grid CAP for a grid run")
    kwargs = _PARAM_PARSERS[name](args.params)
    report = VERIFIERS[name](**kwargs)
    obj = report.to_json_obj()
    if args.json:
        _print_json(obj)
    else:
        print(_report_line(obj))
        if not report.equal and report.difference is not None:
            print(f"difference: {report.difference}")
    return 1 if not report.equal and args.strict else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromsym",
        description="Exact chromatic symmetric functions of sun and dumbbell graph families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, vertices=False, degree=False):
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument("--max-edges", type=int, default=None, metavar="N",
                       help="override the edge-count guard")
        if vertices:
            p.add_argument("--max-vertices", type=int, default=None, metavar="N",
                           help="override the vertex-count guard")
        if degree:
            p.add_argument("--max-degree", type=int, default=None, metavar="N",
                           help="override the basis-transition degree guard")

    p = sub.add_parser("csf", help="chromatic symmetric function of a graph spec")
    p.add_argument("spec")
    p.add_argument("--basis", choices=("p", "e", "s"), default="e")
    add_common(p, degree=True)
    p.set_defaults(func=_cmd_csf)

    p = sub.add_parser("chrompoly", help="chromatic polynomial of a graph spec")
    p.add_argument("spec")
    p.add_argument("--at", type=int, default=None, metavar="N", help="evaluate at x = N")
    add_common(p)
    p.set_defaults(func=_cmd_chrompoly)

    p = sub.add_parser("positivity", help="e- or s-positivity verdict with witness")
    p.add_argument("spec")
    p.add_argument("--basis", choices=("e", "s"), default="e")
    p.add_argument("--strict", action="store_true",
                   help="exit 1 when the function is not positive")
    add_common(p)
    p.set_defaults(func=_cmd_positivity)

    p = sub.add_parser("scan", help="partition types with no connected partition")
    p.add_argument("spec")
    p.add_argument("--strict", action="store_true", help="exit 1 when types are missing")
    add_common(p, vertices=True)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("partitions", help="list the partitions of N, largest part first")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.set_defaults(func=_cmd_partitions)

    p = sub.add_parser("verify", help="check one stated identity, or its whole grid")
    p.add_argument("name", help="identity name (hyphens or underscores)")
    p.add_argument("params", nargs="?", default=None,
                   help="instance parameters, e.g. 4,1,3 or a graph spec")
    p.add_argument("--grid", type=int, default=None, const=DEFAULT_GRID_VERTEX_CAP,
                   nargs="?", metavar="CAP",
                   help="run the whole grid up to CAP vertices (default %(const)s)")
    p.add_argument("--jobs", type=int, default=1, metavar="J",
                   help="parallel workers for grid runs")
    p.add_argument("--strict", action="store_true", help="exit 1 when a check fails")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
