"""Command line interface.

Subcommands:
  graph       print the prime graph of a group (text, --dot or --json)
  components  connected components
  coclique    exact maximum coclique, optionally through a fixed vertex
  compare     labeled-graph equality of two groups, with an edge diff
  verify      run the claim registry (exit 0 unless some claim FAILs)
  search      enumerate simple groups with prime spectrum inside a given set
  oracle      brute-force element orders for the small enumerable groups
  compact     print a compact form, optionally expanded at a field size
  report      write CSV summaries and rendered figures for groups and claims
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from pathlib import Path

from . import __version__
from . import claims as claims_mod
from . import graphs as G
from . import groups as gr
from .numtheory import PrimeSet
from .oracle import alt_orders, psl2_orders, sz8_orders
from .tabulated import TabulatedDataError, load_tabulated


def _print_graph_text(g: G.PrimeGraph) -> None:
    print(f"group:    {g.name}")
    print(f"vertices: {' '.join(map(str, g.vertices))}")
    edges = g.edge_list()
    print(f"edges:    {' '.join(f'{r}-{s}' for r, s in edges) if edges else '(none)'}")
    if g.classes:
        for label, primes in g.classes:
            print(f"  class {label}: {' '.join(map(str, primes))}")


def _cmd_graph(args) -> int:
    g = G.graph_of(args.group)
    if args.dot:
        sys.stdout.write(G.to_dot(g))
    elif args.json:
        print(G.to_json(g))
    else:
        _print_graph_text(g)
    return 0


def _cmd_components(args) -> int:
    g = G.graph_of(args.group)
    parts = G.components(g)
    print(f"s({g.name}) = {parts.count}")
    for i, comp in enumerate(parts.components, start=1):
        print(f"  pi_{i}: {' '.join(map(str, comp))}")
    return 0


def _cmd_coclique(args) -> int:
    g = G.graph_of(args.group)
    if args.at is not None:
        res = G.max_coclique_at(args.at, g)
        print(f"t({args.at}, {g.name}) = {res.size}")
    else:
        res = G.max_coclique(g)
        print(f"t({g.name}) = {res.size}")
    print(f"witness: {' '.join(map(str, res.witness))}")
    return 0


def _cmd_compare(args) -> int:
    a = G.graph_of(args.group1)
    b = G.graph_of(args.group2)
    if G.graphs_equal(a, b):
        print(f"{a.name} and {b.name} have the same prime graph")
        return 0
    print(f"{a.name} and {b.name} differ")
    if a.vertices != b.vertices:
        only_a = sorted(set(a.vertices) - set(b.vertices))
        only_b = sorted(set(b.vertices) - set(a.vertices))
        if only_a:
            print(f"  vertices only in {a.name}: {' '.join(map(str, only_a))}")
        if only_b:
            print(f"  vertices only in {b.name}: {' '.join(map(str, only_b))}")
    for name, extra in ((a.name, a.edges - b.edges), (b.name, b.edges - a.edges)):
        if extra:
            print(f"  edges only in {name}: "
                  + " ".join(f"{r}-{s}" for r, s in sorted(extra)))
    return 1


def _print_report(r: claims_mod.ClaimReport, verbose: bool) -> None:
    print(f"{r.claim_id}  {r.status:<12} {r.title}")
    if r.status == claims_mod.DISCREPANCY or verbose:
        print(f"    anchor:   {r.anchor}")
        print(f"    expected: {r.expected}")
        print(f"    computed: {json.dumps(r.computed)}")


def _cmd_verify(args) -> int:
    if args.claim and not args.all:
        reports = [claims_mod.run_claim(args.claim, scale=args.grid_scale)]
    else:
        reports = claims_mod.run_all(scale=args.grid_scale)
    for r in reports:
        _print_report(r, args.verbose)
    counts = {s: sum(1 for r in reports if r.status == s)
              for s in ("PASS", "FAIL", "DISCREPANCY", "SKIPPED")}
    print(", ".join(f"{v} {k}" for k, v in counts.items() if v))
    return 1 if claims_mod.suite_failed(reports) else 0


def _cmd_search(args) -> int:
    pi: PrimeSet = tuple(sorted({int(x) for x in args.pi.split(",") if x.strip()}))
    bounds = gr.Bounds(q_max=args.qmax, n_max=args.nmax)
    found = gr.enumerate_candidates(pi, bounds)
    print(f"simple groups with prime spectrum inside {{{', '.join(map(str, pi))}}} "
          f"(q <= {bounds.q_max}, n <= {bounds.n_max}): {len(found)}")
    for g in found:
        print(f"  {str(g):<14} order {gr.order(g)}")
    return 0


def _cmd_oracle(args) -> int:
    gid = gr.parse_group_id(args.group)
    if gid.family == "Alt":
        spec = alt_orders(gid.n)
    elif gid.family == "PSL" and gid.n == 2:
        spec = psl2_orders(gid.q)
    elif gid.family == "Sz" and gid.q == 8:
        spec = sz8_orders()
    else:
        print(f"no enumeration oracle for {gid}", file=sys.stderr)
        return 2
    print(f"element orders of {gid}: {' '.join(map(str, sorted(spec.orders)))}")
    return 0


def _cmd_compact(args) -> int:
    c = G.compact_form(args.family)
    if args.expand is not None:
        g = G.expand_compact(c, args.expand)
        _print_graph_text(g)
        return 0
    print(f"compact form of {c.family}: {len(c.classes)} classes")
    print(f"  classes: {' '.join(c.class_labels())}")
    for a, b in sorted(c.class_edges):
        print(f"  edge: {a} -- {b}")
    for rule in c.rules:
        print(f"  rule: {rule.description}")
    return 0


def _safe_name(token: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", token).strip("_")


def _cmd_report(args) -> int:
    from .render import save_graph_figure

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    if args.groups:
        rows = []
        for token in args.groups:
            g = G.graph_of(token)
            parts = G.components(g)
            best = G.max_coclique(g)
            fig_path = out / f"graph_{_safe_name(g.name)}.png"
            save_graph_figure(g, fig_path)
            written.append(fig_path)
            rows.append({
                "group": g.name,
                "vertex_count": len(g.vertices),
                "edge_count": len(g.edges),
                "vertices": " ".join(map(str, g.vertices)),
                "edges": " ".join(f"{r}-{s}" for r, s in g.edge_list()),
                "component_count": parts.count,
                "components": " | ".join(" ".join(map(str, c)) for c in parts.components),
                "coclique_size": best.size,
                "coclique": " ".join(map(str, best.witness)),
            })
        summary = out / "summary.csv"
        with summary.open("w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
            writer.writeheader()
            writer.writerows(rows)
        written.append(summary)

    if args.claims:
        reports = claims_mod.run_all(scale=args.grid_scale)
        path = out / "claims.csv"
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["claim_id", "title", "status", "anchor", "expected"])
            for r in reports:
                writer.writerow([r.claim_id, r.title, r.status, r.anchor, r.expected])
        written.append(path)

    if not written:
        print("nothing to report: pass group tokens and/or --claims", file=sys.stderr)
        return 2
    for p in written:
        print(f"wrote {p}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gkgraph",
        description="Gruenberg-Kegel (prime) graphs of finite simple groups.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="print the prime graph of a group")
    p.add_argument("group")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="DOT output")
    fmt.add_argument("--json", action="store_true", help="JSON output")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("components", help="connected components of the prime graph")
    p.add_argument("group")
    p.set_defaults(func=_cmd_components)

    p = sub.add_parser("coclique", help="exact maximum coclique")
    p.add_argument("group")
    p.add_argument("--at", type=int, help="restrict to cocliques containing this prime")
    p.set_defaults(func=_cmd_coclique)

    p = sub.add_parser("compare", help="labeled-graph equality of two groups")
    p.add_argument("group1")
    p.add_argument("group2")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("verify", help="replay the claim registry")
    p.add_argument("claim", nargs="?", help="a single claim id (default: all)")
    p.add_argument("--all", action="store_true", help="run every claim")
    p.add_argument("--grid-scale", type=float, default=1.0,
                   help="scale factor for the per-claim parameter grids")
    p.add_argument("--verbose", action="store_true", help="print evidence for every claim")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="enumerate simple groups by prime spectrum")
    p.add_argument("--pi", required=True, help="comma-separated primes, e.g. 2,3,5,7,13,17")
    p.add_argument("--qmax", type=int, default=gr.Bounds().q_max)
    p.add_argument("--nmax", type=int, default=gr.Bounds().n_max)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("oracle", help="brute-force element orders (Alt, PSL2, Sz(8))")
    p.add_argument("group")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("compact", help="print a compact form (G2, F4, 2F4, E8)")
    p.add_argument("family", choices=["G2", "F4", "2F4", "E8"])
    p.add_argument("--expand", type=int, help="expand at this field size")
    p.set_defaults(func=_cmd_compact)

    p = sub.add_parser("report", help="write CSV summaries and figure files")
    p.add_argument("groups", nargs="*", help="group tokens to summarize and render")
    p.add_argument("--claims", action="store_true", help="also write claims.csv")
    p.add_argument("--grid-scale", type=float, default=1.0)
    p.add_argument("--out", default="gkgraph-report", help="output directory")
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (gr.InvalidGroupError, gr.UnsupportedGroupError, G.MissingDataError,
            claims_mod.UnknownClaimError, TabulatedDataError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
