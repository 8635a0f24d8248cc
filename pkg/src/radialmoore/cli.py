"""Command-line interface: ``radialmoore <subcommand> ...``.

Exit codes: 0 success, 1 a requested check failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from math import factorial
from typing import Iterable, TextIO

from . import bounds as bnd
from . import graph6
from .canon import SearchBudgetExceeded, automorphism_group
from .census import CensusInfeasibleError, MixedOrderError, census, rank_by_status
from .gd import GdConstructionError, build_gd, verify_gd
from .graph import (
    Graph,
    check_structural_props,
    girth,
    radius_diameter,
    status_vector,
    statuses,
    verify_radial_moore,
)
from .recurrence import OutOfDomainError, bound_table
from .roots import NotApplicableError, asymptotic_ratios, cauchy_bound_check, cubic_roots, laguerre_interval
from .swap import hoffman_singleton, swap_search

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_range(text: str) -> list[int]:
    try:
        if "-" in text:
            lo, hi = text.split("-", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}") from None


def _open_input(path: str | None) -> Iterable[str]:
    if path is None or path == "-":
        return sys.stdin
    return open(path, encoding="ascii", errors="replace")


def _read_graphs(path: str | None, err: TextIO) -> tuple[list[Graph], int]:
    graphs, bad = [], 0
    for lineno, item in graph6.read_stream(_open_input(path)):
        if isinstance(item, Exception):
            print(f"line {lineno}: {item}", file=err)
            bad += 1
        else:
            graphs.append(item)
    return graphs, bad


def _num(x: float) -> str:
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def _csv(rows: list[list], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerows(rows)


# -- subcommands ----------------------------------------------------------


def cmd_bounds(args, out: TextIO, err: TextIO) -> int:
    if args.k < 1:
        raise UsageError(f"need k >= 1, got {args.k}")
    rep = bnd.bounds_report(args.d, args.k)
    fields = rep.as_dict()
    flags = {
        "total_status_upper_paper": "ceiling formula for the attachment count",
        "total_status_upper_consistent": "least attachment count (differs at d=4)",
    }
    if args.format == "json":
        doc = {key: (str(v) if isinstance(v, int) and key not in ("d", "k") else v) for key, v in fields.items()}
        doc["variants_agree"] = rep.variants_agree
        doc["flags"] = flags
        print(json.dumps(doc, indent=2), file=out)
    elif args.format == "csv":
        _csv([["field", "value"]] + [[key, v] for key, v in fields.items()], out)
    else:
        for key, v in fields.items():
            note = f"  [{flags[key]}]" if key in flags else ""
            print(f"{key}: {v}{note}", file=out)
        if args.k != 2:
            print("note: status bounds apply to radius 2 (diameter 3) only", file=out)
    return EXIT_OK


def cmd_table(args, out: TextIO, err: TextIO) -> int:
    ds = args.d if args.d is not None else list(range(4, 8))
    ks = args.k if args.k is not None else list(range(3, 8))
    bad = [d for d in ds if d < 4]
    if bad:
        raise UsageError(f"d={bad[0]} out of domain: the central-vertex bound needs d >= 4")
    if any(k < 2 for k in ks):
        raise UsageError("the central-vertex bound needs k >= 2")
    rows = bound_table(ds, ks)
    if args.format == "csv":
        _csv([["d", "k", "bound", "moore"]] + [list(r) for r in rows], out)
    elif args.format == "json":
        doc = [{"d": d, "k": k, "bound": str(b), "moore": str(m)} for d, k, b, m in rows]
        print(json.dumps(doc, indent=2), file=out)
    else:
        cells = {(d, k): f"{b} ({m})" for d, k, b, m in rows}
        width = max(len(c) for c in cells.values())
        print("k\\d " + " ".join(f"{d:>{width}}" for d in ds), file=out)
        for k in ks:
            print(f"{k:<3} " + " ".join(f"{cells[(d, k)]:>{width}}" for d in ds), file=out)
    return EXIT_OK


def cmd_construct(args, out: TextIO, err: TextIO) -> int:
    if args.family == "gd":
        if args.d is None or args.d < 3:
            raise UsageError(f"construct gd needs --d >= 3, got {args.d}")
        g = build_gd(args.d)
    else:
        g = hoffman_singleton()
    status = EXIT_OK
    report = None
    if args.verify:
        if args.family == "gd":
            try:
                rep = verify_gd(args.d, g)
                report = f"verified G_{args.d}: order {rep.order}, radius 2, diameter 3, central=1, status vector {rep.status_vector}"
            except GdConstructionError as exc:
                report, status = str(exc), EXIT_FAIL
        else:
            st = set(statuses(g))
            ok = g.n == 50 and g.regular_degree() == 7 and st == {bnd.moore_status(7, 2)} and girth(g) == 5
            report = f"Hoffman-Singleton: {g.n} vertices, 7-regular, all statuses {sorted(st)}, girth {girth(g)}"
            if not ok:
                report, status = "verification failed: " + report, EXIT_FAIL
    if args.format == "json":
        doc = {"graph6": graph6.encode_str(g), "n": g.n, "edges": g.num_edges()}
        if report is not None:
            doc["verification"] = report
            doc["status_vector"] = [[s, m] for s, m in status_vector(g).entries]
        print(json.dumps(doc, indent=2), file=out)
    else:
        print(graph6.encode_str(g), file=out)
        if report is not None:
            print(report, file=err)
    return status


def _verify_line(g: Graph, d: int | None, k: int | None) -> tuple[bool, dict]:
    dd = d if d is not None else (g.regular_degree() or (g.degree(0) if g.n else 0))
    if k is None:
        try:
            k = radius_diameter(g)[0]
        except ValueError:
            k = 1
    rep = verify_radial_moore(g, dd, k)
    info = {
        "d": dd,
        "k": k,
        "is_radial_moore": rep.is_radial_moore,
        "central": len(rep.central_vertices),
        "reason": rep.reason(),
    }
    if rep.connected:
        info["status_vector"] = str(status_vector(g))
    if rep.is_radial_moore:
        info["violations"] = check_structural_props(g, k)
    return rep.is_radial_moore and not info.get("violations"), info


def cmd_verify(args, out: TextIO, err: TextIO) -> int:
    total = ok_count = bad_lines = 0
    docs = []
    for lineno, item in graph6.read_stream(_open_input(args.input)):
        if isinstance(item, Exception):
            bad_lines += 1
            print(f"line {lineno}: parse error: {item}", file=err)
            continue
        total += 1
        ok, info = _verify_line(item, args.d, args.k)
        ok_count += ok
        info["line"] = lineno
        docs.append(info)
        if args.format == "text":
            if info["is_radial_moore"]:
                line = f"radial-moore d={info['d']} k={info['k']}, central={info['central']}, status={info['status_vector']}"
                if info["violations"]:
                    line += f", violations={len(info['violations'])}"
            else:
                line = f"not radial-moore ({info['reason']})"
            print(line, file=out)
    summary = {"graphs": total, "radial_moore": ok_count, "parse_errors": bad_lines}
    if args.format == "json":
        print(json.dumps({"results": docs, "summary": summary}, indent=2), file=out)
    else:
        print(f"summary: {total} graphs, {ok_count} radial Moore, {bad_lines} parse errors", file=out)
    if bad_lines:
        return EXIT_USAGE
    return EXIT_OK if ok_count == total else EXIT_FAIL


def cmd_census(args, out: TextIO, err: TextIO) -> int:
    graphs = None
    bad = 0
    if args.input is not None:
        graphs, bad = _read_graphs(args.input, err)
    try:
        res = census(args.d, args.k, graphs)
    except CensusInfeasibleError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(res.to_json(), file=out)
    elif args.format == "csv":
        out.write(res.to_csv())
    else:
        print(f"census d={res.d} k={res.k}", file=out)
        print(f"regular graphs: {res.total_regular}", file=out)
        print(f"radial Moore: {res.radial_moore}", file=out)
        print(f"max central: {res.max_central}", file=out)
        hist = ", ".join(f"{c}:{m}" for c, m in sorted(res.central_histogram.items()))
        print(f"central histogram: {hist}", file=out)
        print(f"structural violations: {len(res.violations)}", file=out)
        for i, r in enumerate(res.status_ranking, 1):
            print(f"{i:>4} {r.graph6} total={r.total} central={r.central} status={r.status_vector}", file=out)
    if bad:
        return EXIT_USAGE
    return EXIT_FAIL if res.violations else EXIT_OK


def cmd_rank(args, out: TextIO, err: TextIO) -> int:
    graphs, bad = _read_graphs(args.input, err)
    try:
        ranking = rank_by_status(graphs)
    except MixedOrderError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        doc = [
            {"graph6": r.graph6, "total_status": r.total, "status_vector": [[s, m] for s, m in r.status_vector.entries], "central": r.central}
            for r in ranking
        ]
        print(json.dumps(doc, indent=2), file=out)
    elif args.format == "csv":
        _csv([["rank", "graph6", "total_status", "status_vector", "central"]]
             + [[i, r.graph6, r.total, str(r.status_vector), r.central] for i, r in enumerate(ranking, 1)], out)
    else:
        for i, r in enumerate(ranking, 1):
            print(f"{i:>4} {r.graph6} total={r.total} central={r.central} status={r.status_vector}", file=out)
    return EXIT_USAGE if bad else EXIT_OK


def cmd_aut(args, out: TextIO, err: TextIO) -> int:
    if args.family == "gd":
        if args.d is None or args.d < 3:
            raise UsageError(f"aut --family gd needs --d >= 3, got {args.d}")
        graphs = [(f"G_{args.d}", build_gd(args.d))]
    elif args.family == "hoffman-singleton":
        graphs = [("hoffman-singleton", hoffman_singleton())]
    else:
        parsed, bad = _read_graphs(args.input, err)
        if bad:
            return EXIT_USAGE
        graphs = [(graph6.encode_str(g), g) for g in parsed]
    results = []
    status = EXIT_OK
    for name, g in graphs:
        try:
            order = automorphism_group(g, budget=args.budget).order
            results.append({"graph": name, "order": str(order)})
        except SearchBudgetExceeded as exc:
            results.append({"graph": name, "error": str(exc), "order_at_least": str(exc.partial_order)})
            status = EXIT_FAIL
    if args.family == "gd" and status == EXIT_OK and int(results[0]["order"]) != factorial(args.d):
        status = EXIT_FAIL
    if args.format == "json":
        print(json.dumps(results, indent=2), file=out)
    else:
        for r in results:
            if "order" in r:
                line = r["order"] if len(results) == 1 else f"{r['graph']} {r['order']}"
            else:
                line = f"{r['graph']} timeout: order >= {r['order_at_least']}"
            print(line, file=out)
    return status


def _minus(s: str) -> str:
    return "\u2212" + s[1:] if s.startswith("-") else s


def _fmt_complex_pair(z: complex) -> str:
    im = _num(abs(z.imag))
    return f"{_minus(_num(z.real))}±{'' if im == '1' else im}i"


def cmd_roots(args, out: TextIO, err: TextIO) -> int:
    d = args.d
    cr = cubic_roots(d)
    doc = {
        "d": d,
        "cubic": f"x^3 - x^2 - {d - 3}x - {d - 1}",
        "discriminant": str(cr.discriminant),
        "real_roots": [_num(x) for x in cr.real_roots],
        "complex_pair": [[_num(z.real), _num(z.imag)] for z in cr.complex_pair] if cr.complex_pair else None,
    }
    ok = True
    if d <= 16:
        doc["cauchy_modulus_le_2"] = cauchy_bound_check(d)
        ok = doc["cauchy_modulus_le_2"]
    else:
        lo, hi = laguerre_interval(d)
        doc["laguerre_interval"] = [_num(lo), _num(hi)]
        doc["laguerre_contains_roots"] = all(lo - 1e-9 <= x <= hi + 1e-9 for x in cr.real_roots)
        doc["asymptotic_ratios"] = [_num(x) for x in asymptotic_ratios(d)]
        ok = doc["laguerre_contains_roots"]
    if args.format == "json":
        print(json.dumps(doc, indent=2), file=out)
    else:
        parts = ["real: " + ", ".join(_minus(x) for x in doc["real_roots"])]
        if cr.complex_pair:
            parts.append("complex: " + _fmt_complex_pair(cr.complex_pair[1]))
        parts.append(f"Δ={cr.discriminant}")
        print("; ".join(parts), file=out)
        if d <= 16:
            print(f"cauchy: complex modulus {_num(abs(cr.complex_pair[0]))} <= 2: {doc['cauchy_modulus_le_2']}", file=out)
        else:
            print(f"laguerre interval: [{doc['laguerre_interval'][0]}, {doc['laguerre_interval'][1]}] contains roots: {doc['laguerre_contains_roots']}", file=out)
            print("asymptotic ratios: " + ", ".join(doc["asymptotic_ratios"]), file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_swap_search(args, out: TextIO, err: TextIO) -> int:
    if args.input is not None:
        graphs, bad = _read_graphs(args.input, err)
        if bad or len(graphs) != 1:
            raise UsageError("swap-search expects exactly one graph6 line on input")
        g = graphs[0]
    else:
        g = hoffman_singleton()
    try:
        s = swap_search(g, args.d, args.k, workers=args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    doc = {
        "d": s.d,
        "k": s.k,
        "candidates": s.candidates,
        "radial_moore": s.radial_moore,
        "max_central": s.max_central,
        "central_histogram": {str(c): m for c, m in sorted(s.central_histogram.items())},
        "example": s.best.describe() if s.best else None,
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2), file=out)
    else:
        print(f"swaps tried: {s.candidates}", file=out)
        print(f"radial Moore results: {s.radial_moore}", file=out)
        print(f"max central: {s.max_central}", file=out)
        hist = ", ".join(f"{c}:{m}" for c, m in sorted(s.central_histogram.items()))
        print(f"central histogram: {hist}", file=out)
        if s.best:
            print(f"example: {s.best.describe()}", file=out)
    return EXIT_OK


# -- parser -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="radialmoore", description="Bounds, constructions and searches for radial Moore graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bounds", help="closed-form bounds for (d, k)")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--format", choices=["text", "json", "csv"], default="text")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("table", help="central-vertex upper bounds with Moore bounds")
    s.add_argument("--d", "--d-range", dest="d", type=_int_range, help="N or LO-HI (default 4-7)")
    s.add_argument("--k", "--k-range", dest="k", type=_int_range, help="N or LO-HI (default 3-7)")
    s.add_argument("--format", choices=["text", "json", "csv"], default="text")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("construct", help="emit G_d or the Hoffman-Singleton graph")
    s.add_argument("family", choices=["gd", "hoffman-singleton"])
    s.add_argument("--d", type=int)
    s.add_argument("--verify", action="store_true")
    s.add_argument("--format", choices=["graph6", "json"], default="graph6")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("verify", help="radial-Moore report per graph6 line")
    s.add_argument("--input", help="graph6 file (default stdin)")
    s.add_argument("--d", type=int, help="degree (default: inferred)")
    s.add_argument("--k", type=int, help="radius (default: the graph's radius)")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("census", help="radial Moore census with status ranking")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--input", help="isomorph-free graph6 stream instead of internal generation")
    s.add_argument("--format", choices=["text", "json", "csv"], default="text")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("rank", help="rank graph6 input by status")
    s.add_argument("--input")
    s.add_argument("--format", choices=["text", "json", "csv"], default="text")
    s.set_defaults(func=cmd_rank)

    s = sub.add_parser("aut", help="automorphism group order")
    s.add_argument("--family", choices=["gd", "hoffman-singleton"])
    s.add_argument("--d", type=int)
    s.add_argument("--input")
    s.add_argument("--budget", type=int, default=2_000_000, help="search-tree node budget")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_aut)

    s = sub.add_parser("roots", help="roots of the cubic factor of the recurrence")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("swap-search", help="all two-edge swaps of a d-regular graph")
    s.add_argument("--input", help="single graph6 line (default: Hoffman-Singleton)")
    s.add_argument("--d", type=int, default=7)
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--workers", type=int, help="process pool size (default: $RADIALMOORE_WORKERS or CPU count)")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_swap_search)
    return p


def main(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, err)
    except (UsageError, bnd.UnsupportedDegreeError, OutOfDomainError, NotApplicableError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
