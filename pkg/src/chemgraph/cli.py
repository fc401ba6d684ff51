"""Command-line surface.

Every subcommand is a thin adapter over one library call; output is a
deterministic function of the arguments.  Exit status: 0 on success, 1
when a verification run finds a disagreement, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .census import Census, census_from_json, is_realizable, order_size, vertex_counts
from .classify import classify, predicted_censuses, verify_characterization
from .families import (
    FamilyId,
    chemical_size_range,
    construct_f1_explicit,
    family_atlas_rows,
    family_censuses,
    realize_census,
)
from .graphs import edge_census, is_chemical_graph, parse_graph6, write_graph6
from .indices import (
    BUILTINS,
    DEFAULT_EPS,
    IndexDefinition,
    builtin_names,
    evaluate,
    index_from_json,
    lookup,
    v_profile,
)
from .oracle import census_atlas, default_workers, enumerate_connected_maxdeg3, extremal_censuses


class _UsageError(Exception):
    pass


def _parse_index(args) -> IndexDefinition:
    given = [args.index is not None, args.coeffs is not None, getattr(args, "index_json", None) is not None]
    if sum(given) != 1:
        raise _UsageError("exactly one of --index, --coeffs, --index-json is required")
    if args.index is not None:
        return lookup(args.index)
    if args.coeffs is not None:
        parts = args.coeffs.split(",")
        if len(parts) != 5:
            raise _UsageError("--coeffs needs 5 comma-separated numbers: c12,c13,c22,c23,c33")
        return IndexDefinition("custom", *(float(p) for p in parts))
    with open(args.index_json, encoding="utf-8") as fh:
        return index_from_json(json.load(fh))


def _parse_census(text: str) -> Census:
    parts = text.split(",")
    if len(parts) != 5:
        raise _UsageError("census needs 5 comma-separated integers: x12,x13,x22,x23,x33")
    return census_from_json([int(p) for p in parts])


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _censuses_payload(censuses, fmt: str) -> str:
    rows = sorted(censuses)
    if fmt == "json":
        return json.dumps([list(x) for x in rows])
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["x12", "x13", "x22", "x23", "x33"])
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    return "\n".join(str(x) for x in rows) if rows else "(empty)"


def _cmd_indices(args) -> int:
    if args.format == "json":
        _emit(args, json.dumps({n: list(BUILTINS[n].coeffs) for n in builtin_names()}))
        return 0
    lines = [f"{'name':<12} {'c12':>10} {'c13':>10} {'c22':>10} {'c23':>10} {'c33':>10}"]
    for name in builtin_names():
        f = BUILTINS[name]
        lines.append(f"{name:<12}" + "".join(f" {c:>10.6g}" for c in f.coeffs))
    _emit(args, "\n".join(lines))
    return 0


def _cmd_eval(args) -> int:
    f = _parse_index(args)
    if (args.census is None) == (args.graph6 is None):
        raise _UsageError("exactly one of --census, --graph6 is required")
    if args.census is not None:
        x = _parse_census(args.census)
    else:
        x = edge_census(parse_graph6(args.graph6))
    value = evaluate(f, x)
    if args.format == "json":
        _emit(args, json.dumps({"index": f.name, "census": list(x), "value": value}))
    else:
        _emit(args, repr(value))
    return 0


def _cmd_census(args) -> int:
    g = parse_graph6(args.graph6)
    x = edge_census(g)
    check = is_chemical_graph(g)
    if args.format == "json":
        n, m = order_size(x)
        _emit(args, json.dumps({"census": list(x), "n": n, "m": m, "chemical": check.ok}))
    else:
        note = "" if check.ok else f"  [not chemical: {check.reason}]"
        _emit(args, f"{x}{note}")
    return 0


def _cmd_enumerate(args) -> int:
    stream = enumerate_connected_maxdeg3(args.order, args.workers)
    if args.size is not None:
        stream = (g for g in stream if g.m == args.size)
    if args.count:
        _emit(args, str(sum(1 for _ in stream)))
        return 0
    out = sys.stdout if not args.output else open(args.output, "w", encoding="utf-8")
    try:
        for g in stream:
            out.write(write_graph6(g) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _cmd_extremal(args) -> int:
    f = _parse_index(args)
    report = extremal_censuses(f, args.n, args.m, args.direction, args.workers)
    if args.format == "json":
        _emit(args, report.to_json())
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(report.csv_rows()[0]))
        writer.writeheader()
        writer.writerows(report.csv_rows())
        _emit(args, buf.getvalue().rstrip("\n"))
    else:
        lines = [
            f"{report.direction} {report.index} over n={report.n}, m={report.m} "
            f"({report.graph_count} graphs): optimum={report.optimum!r}"
        ]
        for x in report.optimal_censuses:
            lines.append(f"  {x}  witness={report.witnesses[x]}")
        _emit(args, "\n".join(lines))
    return 0


def _cmd_classify(args) -> int:
    f = _parse_index(args)
    result = classify(f, args.epsilon)
    if args.format == "json":
        payload = result.to_json_dict()
        payload["v_profile"] = {k: v for k, v in zip(
            ("v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"),
            (lambda p: (p.v1, p.v2, p.v3, p.v4, p.v5, p.v6, p.v7, p.v8))(v_profile(f, args.epsilon)),
        )}
        _emit(args, json.dumps(payload))
        return 0
    lines = [f"index: {result.index}", f"  max: {result.max_family}", f"  min: {result.min_family}"]
    if result.conflicts:
        lines.append(f"  conflicts: {', '.join(result.conflicts)}")
    _emit(args, "\n".join(lines))
    return 0


def _cmd_family(args) -> int:
    fam = family_censuses(FamilyId(args.id), args.n, args.m)
    if not fam.censuses and fam.reason and args.format == "text":
        _emit(args, f"(empty: {fam.reason})")
        return 0
    _emit(args, _censuses_payload(fam.censuses, args.format))
    return 0


def _cmd_construct(args) -> int:
    g = construct_f1_explicit(args.n, args.m)
    _emit(args, write_graph6(g))
    return 0


def _cmd_realize(args) -> int:
    x = _parse_census(args.census)
    g = realize_census(x, node_budget=args.budget)
    if g is None:
        reasons = ", ".join(is_realizable(x).violations)
        _emit(args, f"none  [not realizable: {reasons}]")
        return 0
    _emit(args, write_graph6(g))
    return 0


def _cmd_atlas(args) -> int:
    if args.families:
        rows = []
        for n in range(7, args.n_max + 1):
            for m in chemical_size_range(n):
                for fid in FamilyId:
                    rows.extend(family_atlas_rows(fid, n, m))
        if args.format == "json":
            _emit(args, json.dumps(rows))
        else:
            buf = io.StringIO()
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
            _emit(args, buf.getvalue().rstrip("\n"))
        return 0
    if args.n is None or args.m is None:
        raise _UsageError("atlas needs --n and --m (or --families with --n-max)")
    _emit(args, _censuses_payload(census_atlas(args.n, args.m, args.workers), args.format))
    return 0


def _cmd_verify(args) -> int:
    if args.all_builtins:
        names = builtin_names()
    elif args.index or args.coeffs or args.index_json:
        names = None
    else:
        raise _UsageError("verify needs --index/--coeffs/--index-json or --all-builtins")
    targets = [lookup(n) for n in names] if names else [_parse_index(args)]
    any_disagreement = False
    payloads = []
    for f in targets:
        report = verify_characterization(f, args.n_max, args.workers, args.epsilon)
        any_disagreement |= not report.ok()
        if args.format == "json":
            payloads.append(report.to_json_dict())
        else:
            summary = (
                f"{'FAIL' if not report.ok() else 'ok  '} {f.name}: "
                f"{report.agreements} agree, {report.disagreements} disagree, "
                f"{report.skipped} skipped"
            )
            payloads.append(summary if report.ok() else summary + "\n" + report.to_text())
    _emit(args, json.dumps(payloads) if args.format == "json" else "\n".join(payloads))
    return 1 if any_disagreement else 0


def _add_index_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--index", help="built-in index name (case-insensitive)")
    p.add_argument("--coeffs", help="custom index as c12,c13,c22,c23,c33")
    p.add_argument("--index-json", dest="index_json", help='JSON file {"name":..., "c":[...]}')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chemgraph",
        description="Extremal chemical graphs for degree-based topological indices.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=("text", "json", "csv", "graph6"), default="text")
        p.add_argument("--output", help="write output to FILE instead of stdout")
        p.add_argument("--workers", type=int, default=default_workers(),
                       help="worker processes (default: CHEMGRAPH_WORKERS or 1)")
        p.add_argument("--epsilon", type=float, default=DEFAULT_EPS,
                       help="zero-classification tolerance for V-values")
        return p

    add("indices", _cmd_indices, "list the built-in indices and their coefficients")

    p = add("eval", _cmd_eval, "evaluate an index on a census or a graph6 graph")
    _add_index_options(p)
    p.add_argument("--census", help="census as x12,x13,x22,x23,x33")
    p.add_argument("--graph6", help="graph6 record")

    p = add("census", _cmd_census, "edge census of a graph6 graph")
    p.add_argument("--graph6", required=True)

    p = add("enumerate", _cmd_enumerate, "enumerate connected max-degree-3 graphs")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--size", type=int, help="restrict to one edge count")
    p.add_argument("--count", action="store_true", help="print the count only")

    p = add("extremal", _cmd_extremal, "brute-force extremal censuses of an index")
    _add_index_options(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--direction", choices=("max", "min"), default="max")

    p = add("classify", _cmd_classify, "predict the extremal families of an index")
    _add_index_options(p)

    p = add("family", _cmd_family, "census set of one family at (n, m)")
    p.add_argument("--id", required=True, help="F1..F12")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = add("construct", _cmd_construct, "explicit first-family witness (even n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = add("realize", _cmd_realize, "witness graph for a census, if one exists")
    p.add_argument("--census", required=True, help="census as x12,x13,x22,x23,x33")
    p.add_argument("--budget", type=int, default=2_000_000, help="realizer node budget")

    p = add("verify", _cmd_verify, "check characterizations against the oracle")
    _add_index_options(p)
    p.add_argument("--all-builtins", action="store_true")
    p.add_argument("--n-max", dest="n_max", type=int, default=9)

    p = add("atlas", _cmd_atlas, "observed censuses at (n, m), or the family atlas")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--families", action="store_true", help="export the family atlas instead")
    p.add_argument("--n-max", dest="n_max", type=int, default=9)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
