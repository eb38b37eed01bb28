"""Command-line front end.

Exit codes: 0 success with every check passing, 1 a published claim
disagreed with computation, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import audit, embodiment, jaco, setgraph
from .graph import Graph, GraphError, format_edge_list, hole_report, read_edge_list
from .triples import Triple, TripleError, classify, is_pythagorean, primitive_triples_up_to, triples_up_to

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _table(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = []
    for k, r in enumerate(cells):
        lines.append(" | ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip())
        if k == 0:
            lines.append("-+-".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _json(obj: object) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _render(fmt: str, header: Sequence[str], rows: Sequence[Sequence[object]], key: str) -> str:
    if fmt == "csv":
        return _csv(header, rows)
    if fmt == "json":
        return _json({key: [dict(zip(header, r)) for r in rows]})
    return _table(header, rows)


def _report_claims(results: Sequence[audit.ClaimResult], err) -> int:
    bad = [r for r in results if not r.ok]
    for r in bad:
        for d in r.discrepancies:
            print(f"MISMATCH {d}", file=err)
    return EXIT_MISMATCH if bad else EXIT_OK


# --- commands ------------------------------------------------------------------


def cmd_holes(args, out, err) -> int:
    try:
        g = read_edge_list(args.path)
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc.strerror}") from exc
    except GraphError as exc:
        raise UsageError(str(exc)) from exc
    out.write(format_hole_report(g, args.format))
    return EXIT_OK


def format_hole_report(g: Graph, fmt: str) -> str:
    rep = hole_report(g)
    holes = [([g.labels[v] for v in t], list(d)) for t, d in rep.pyth_holes]
    pdeg = [(g.labels[v], d) for v, d in enumerate(rep.primitive_degree)]
    if fmt == "json":
        return _json(
            {
                "vertices": g.vertex_count,
                "edges": g.edge_count,
                "h": rep.h,
                "h_p": rep.h_p,
                "pythagorean_holes": [{"vertices": v, "degrees": d} for v, d in holes],
                "primitive_degree": [{"vertex": v, "d_p": d} for v, d in pdeg],
            }
        )
    if fmt == "csv":
        rows = [("summary", "h", rep.h), ("summary", "h_p", rep.h_p)]
        rows += [("hole", " ".join(map(str, v)), " ".join(map(str, d))) for v, d in holes]
        rows += [("d_p", v, d) for v, d in pdeg]
        return _csv(("record", "key", "value"), rows)
    lines = [
        f"vertices: {g.vertex_count}",
        f"edges: {g.edge_count}",
        f"h: {rep.h}",
        f"h^p: {rep.h_p}",
        "pythagorean holes:",
    ]
    lines += [f"  {' '.join(map(str, v))}  degrees {tuple(d)}" for v, d in holes] or ["  none"]
    lines.append("primitive degrees:")
    lines += [f"  {v}: {d}" for v, d in pdeg]
    return "\n".join(lines) + "\n"


def _triple_arg(a: int, b: int, c: int) -> Triple:
    try:
        ok = is_pythagorean(a, b, c)
    except TripleError as exc:
        raise UsageError(str(exc)) from exc
    if not ok:
        x, y, z = sorted((a, b, c))
        raise UsageError(f"not Pythagorean: {x}^2 + {y}^2 = {x * x + y * y} != {z * z} = {z}^2")
    t = Triple.of(a, b, c)
    if t.a < 3:
        raise UsageError(f"smallest leg must be at least 3, got {t}")
    return t


def cmd_embodiment(args, out, err) -> int:
    t = _triple_arg(args.a, args.b, args.c)
    status = EXIT_OK
    if args.emit_graph or not args.verify:
        out.write(format_edge_list(embodiment.build_embodiment(t), [f"graphical embodiment of {t}"]))
    if args.verify:
        rep = embodiment.verify_embodiment(t)
        if args.format == "json":
            out.write(_json(rep.as_dict()))
        else:
            rows = [(c.name, c.predicted, "" if c.computed is None else c.computed, c.status) for c in rep.checks]
            out.write(_render(args.format, ("invariant", "predicted", "computed", "status"), rows, "checks"))
        for c in rep.checks:
            if c.status == "MISMATCH":
                print(f"MISMATCH embodiment {t} {c.name}: predicted {c.predicted}, computed {c.computed}", file=err)
        status = EXIT_OK if rep.ok else EXIT_MISMATCH
    return status


def cmd_setgraph(args, out, err) -> int:
    n = args.n
    try:
        g = setgraph.build_setgraph(n)
    except setgraph.SetGraphError as exc:
        raise UsageError(str(exc)) from exc
    if args.emit_graph or not args.verify:
        out.write(format_edge_list(g, [f"set-graph n = {n}: {g.vertex_count} vertices, {g.edge_count} edges"]))
    if not args.verify:
        return EXIT_OK
    results = []
    law = setgraph.degree_law(n)
    r = audit.ClaimResult("degree law")
    r.expect("max degree", 2 * law.min_degree, law.max_degree)
    r.expect("vertices of max degree", 1, law.max_count)
    r.expect("singletons independent", True, law.singletons_independent)
    results.append(r)
    lemma = setgraph.triangle_inequality_lemma(n)
    r = audit.ClaimResult("degree triangle inequality")
    r.expect("distinct-value violations", [], list(lemma.distinct_violations))
    results.append(r)
    if n <= setgraph.MAX_CENSUS:
        r = audit.ClaimResult("no Pythagorean holes")
        r.expect("h^p == 0", True, setgraph.check_no_pythagorean_holes(n))
        results.append(r)
    if n <= setgraph.MAX_CLIQUE:
        r = audit.ClaimResult("largest cliques")
        r.expect("(order, count)", setgraph.predicted_largest_cliques(n), setgraph.count_largest_cliques(n))
        results.append(r)
    rows = [(r.claim, r.checked, "pass" if r.ok else "FAIL") for r in results]
    extra = {
        "n": n,
        "vertices": g.vertex_count,
        "max_degree": law.max_degree,
        "min_degree": law.min_degree,
        "boundary_degree_triples": [list(t) for t in lemma.sequence_violations],
    }
    if args.format == "json":
        out.write(_json({**extra, "checks": [
            {"claim": r.claim, "ok": r.ok, "discrepancies": [str(d) for d in r.discrepancies]} for r in results
        ]}))
    else:
        out.write(_render(args.format, ("check", "cases", "result"), rows, "checks"))
    return _report_claims(results, err)


def cmd_jaco(args, out, err) -> int:
    n = args.n
    if not 1 <= n <= jaco.CENSUS_CAP:
        raise UsageError(f"n must be in 1..{jaco.CENSUS_CAP}, got {n}")
    j = jaco.build_jaco(n)
    g = jaco.underlying_graph(j)
    if args.emit_graph or not args.census:
        out.write(format_edge_list(g, [f"underlying Jaco graph J*_{n}(1)"]))
    if args.census:
        holes = jaco.pythagorean_census(n, j)
        header = ("i", "j", "k", "degrees", "type", "aligned")
        rows = [(*h.vertices, "({},{},{})".format(*h.degrees), str(h.kind), int(h.aligned)) for h in holes]
        if args.format == "json":
            out.write(_json({
                "n": n,
                "h_p": len(holes),
                "by_type": {str(k): v for k, v in sorted(jaco.type_counts(holes).items(), key=lambda kv: (kv[0].kind != "t", kv[0].index))},
                "holes": [
                    {"vertices": list(h.vertices), "degrees": list(h.degrees), "type": str(h.kind), "aligned": h.aligned}
                    for h in holes
                ],
            }))
        else:
            out.write(_render(args.format, header, rows, "holes"))
    return EXIT_OK


FISHER_HEADER = ("i", "d^-(v_i)", "d^+(v_i)", "h(J*_i(1))", "h^p_t1(J*_i(1))")
FISHER_EXTRA = ("h^p(J*_i(1))", "h^p_t1 aligned")


def cmd_fisher(args, out, err) -> int:
    n = args.n_max
    if not 1 <= n <= jaco.CENSUS_CAP:
        raise UsageError(f"n_max must be in 1..{jaco.CENSUS_CAP}, got {n}")
    reference = None
    if args.reference:
        try:
            with open(args.reference, encoding="utf-8") as fh:
                reference = audit.read_reference_csv(fh.read())
        except (OSError, ValueError) as exc:
            raise UsageError(f"bad reference table {args.reference}: {exc}") from exc
    rows = jaco.fisher_table(n)
    data = [(r.i, r.d_minus, r.d_plus, r.h, r.h_p_t1) for r in rows]
    header = FISHER_HEADER
    if args.extended:
        header = header + FISHER_EXTRA
        data = [d + (r.h_p, r.h_p_t1_aligned) for d, r in zip(data, rows)]
    if args.format == "csv":
        keys = ("i", "d_minus", "d_plus", "h", "h_p_t1") + (("h_p", "h_p_t1_aligned") if args.extended else ())
        out.write(_csv(keys, data))
    elif args.format == "json":
        keys = ("i", "d_minus", "d_plus", "h", "h_p_t1") + (("h_p", "h_p_t1_aligned") if args.extended else ())
        out.write(_json({"rows": [dict(zip(keys, d)) for d in data]}))
    else:
        out.write(_table(header, data))
    checks = [audit.audit_fisher(rows, reference)]
    rec = audit.ClaimResult("hole recursion")
    for r in rows:
        if r.h_recursion is not None:
            rec.expect(f"row {r.i}", r.h_recursion, r.h)
    checks.append(rec)
    return _report_claims(checks, err)


def cmd_triples(args, out, err) -> int:
    ts = primitive_triples_up_to(args.c_max) if args.primitive_only else triples_up_to(args.c_max)
    header = ("a", "b", "c", "primitive", "root", "scale", "type")
    rows = [(t.a, t.b, t.c, int(t.primitive), str(t.root), t.scale, str(classify(t))) for t in ts]
    out.write(_render(args.format, header, rows, "triples"))
    return EXIT_OK


def cmd_audit(args, out, err) -> int:
    results = [audit.audit_fisher(jaco.fisher_table(35)), audit.audit_primitives()]
    results.append(audit.audit_recursion(4, args.n_max))
    results.extend(audit.audit_t1_law(args.n_max))
    results.append(audit.audit_embodiments(100))
    results.extend(audit.audit_setgraphs())
    rows = [(r.claim, r.checked, len(r.discrepancies), "pass" if r.ok else "FAIL") for r in results]
    out.write(_render(args.format, ("claim", "cases", "mismatches", "result"), rows, "claims"))
    return _report_claims(results, err)


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("table", "csv", "json"), default="table")

    p = argparse.ArgumentParser(prog="pythagorean-holes", description="Triangle and Pythagorean-hole analysis.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("holes", parents=[fmt], help="hole report for an edge-list file")
    s.add_argument("path")
    s.set_defaults(func=cmd_holes)

    s = sub.add_parser("embodiment", parents=[fmt], help="graphical embodiment of a triple")
    for name in "abc":
        s.add_argument(name, type=int)
    s.add_argument("--verify", action="store_true")
    s.add_argument("--emit-graph", action="store_true")
    s.set_defaults(func=cmd_embodiment)

    s = sub.add_parser("setgraph", parents=[fmt], help="set-graph of an n-set")
    s.add_argument("n", type=int)
    s.add_argument("--verify", action="store_true")
    s.add_argument("--emit-graph", action="store_true")
    s.set_defaults(func=cmd_setgraph)

    s = sub.add_parser("jaco", parents=[fmt], help="underlying Jaco graph J*_n(1)")
    s.add_argument("n", type=int)
    s.add_argument("--census", action="store_true")
    s.add_argument("--emit-graph", action="store_true")
    s.set_defaults(func=cmd_jaco)

    s = sub.add_parser("fisher", parents=[fmt], help="adapted Fisher table")
    s.add_argument("n_max", type=int)
    s.add_argument("--reference", help="CSV with columns i,d_minus,d_plus,h,h_p_t1 (default: published table)")
    s.add_argument("--extended", action="store_true", help="add total and index-aligned hole counts")
    s.set_defaults(func=cmd_fisher)

    s = sub.add_parser("triples", parents=[fmt], help="Pythagorean triples with c <= c_max")
    s.add_argument("c_max", type=int)
    s.add_argument("--primitive-only", action="store_true")
    s.set_defaults(func=cmd_triples)

    s = sub.add_parser("audit", parents=[fmt], help="check every published claim")
    s.add_argument("--n-max", type=int, default=500)
    s.set_defaults(func=cmd_audit)
    return p


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, err)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
