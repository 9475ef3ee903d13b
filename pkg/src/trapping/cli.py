"""``trapping`` command line: analyze, generate, bounds, scaling, dominate.

Exit codes: 0 success, 2 input or validation error, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path

from . import graph as gr
from .analysis import analyze, bounds_report, dominate_report, scaling_experiment
from .errors import NumericalFailure, TrappingError, UnknownVertex
from .exact import max_degree_vertex
from .io import read_edge_list, read_sidecar, sidecar_path, write_edge_list, write_sidecar
from .montecarlo import SimConfig

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC = 0, 2, 3

log = logging.getLogger("trapping")


class UsageError(TrappingError):
    pass


def _parse_ids(text: str) -> list:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}") from None


def _resolve_vertex(g: gr.Graph, vid: int) -> int:
    """Map an id as written in the input file to the internal id."""
    if g.labels is None:
        g.check_vertex(vid)
        return vid
    try:
        return g.labels.index(vid)
    except ValueError:
        raise UnknownVertex(vid) from None


def _external_id(g: gr.Graph, v: int) -> int:
    return v if g.labels is None else g.labels[v]


def _component(token: str) -> gr.Graph:
    """Parse a component token: ``i``, ``k<n>``, ``c<n>``, ``p<n>``, ``s<n>``."""
    token = token.strip().lower()
    if token in ("i", "k1", "p1"):
        return gr.isolated()
    builders = {"k": gr.complete, "c": gr.cycle, "p": gr.path, "s": gr.star}
    if token[:1] in builders and token[1:].isdigit():
        return builders[token[0]](int(token[1:]))
    raise UsageError(f"unknown component {token!r} (use i, k<n>, c<n>, p<n>, s<n>)")


def _dump_json(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, ensure_ascii=False)
    sys.stdout.write("\n")


# -- analyze ---------------------------------------------------------------

def cmd_analyze(args) -> int:
    g = read_edge_list(args.graph)
    if args.trap == "max-degree":
        theta = max_degree_vertex(g)
    else:
        try:
            theta = _resolve_vertex(g, int(args.trap))
        except ValueError:
            raise UsageError(f"--trap must be a vertex id or 'max-degree', got {args.trap!r}") from None
    mc = None
    if args.mc:
        mc = SimConfig(seed=args.seed, walks_per_vertex=args.mc, max_steps=args.max_steps)
    report = analyze(g, theta, with_spectral=args.spectral, mc=mc)
    report.trap["theta"] = _external_id(g, theta)

    scar = sidecar_path(args.graph)
    if scar.exists():
        spec, order, scope = read_sidecar(args.graph)
        if scope == "component" and theta == 0:
            report.bounds = bounds_report(spec, order).as_dict() if order >= 1 else None

    if args.json:
        _dump_json(report.as_dict())
    elif args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["vertex", "trapping_time"])
        for v, t in enumerate(report.trapping_times):
            if v != theta:
                w.writerow([_external_id(g, v), repr(t)])
        w.writerow(["att", repr(report.att_exact)])
    else:
        s = report.graph_summary
        print(f"vertices      {s['vertices']}")
        print(f"edges         {s['edges']}")
        print(f"trap          {report.trap['theta']} (degree {report.trap['d_theta']})")
        print(f"att_exact     {report.att_exact:.12g}")
        if report.att_spectral is not None:
            print(f"att_spectral  {report.att_spectral:.12g}")
            print(f"att_weighted  {report.att_weighted:.12g}")
        print(f"lower_bound   {report.lower_bound:.12g}")
        print(f"kemeny        {report.kemeny:.12g}")
        print(f"optimal       {str(report.optimal).lower()}")
        if report.montecarlo is not None:
            est = report.montecarlo
            print(f"mc_att        {est.att_estimate:.6g} +/- {est.att_stderr:.2g}"
                  f" ({args.mc} walks/vertex, seed {args.seed})")
        for w in report.warnings:
            print(f"warning: {w}")
    return EXIT_OK


# -- generate --------------------------------------------------------------

def cmd_generate(args) -> int:
    fam, params = args.family, args.params
    spec = None

    def need(k):
        if len(params) != k:
            raise UsageError(f"{fam} takes {k} integer argument(s), got {len(params)}")
        try:
            return [int(p) for p in params]
        except ValueError:
            raise UsageError(f"{fam} arguments must be integers: {params}") from None

    if fam == "startype":
        if not args.components:
            raise UsageError("startype needs --components")
        need(0)
        spec = gr.StarTypeSpec([_component(t) for t in args.components.split(",")])
        g, _ = gr.compose_star_type(spec)
    elif fam == "ba":
        n, m = need(2)
        g = gr.generate_preferential_attachment(n, m, args.seed)
    else:
        (size,) = need(1)
        g = {"star": gr.star, "complete": gr.complete, "cycle": gr.cycle, "path": gr.path}[fam](size)

    scope = "all"
    if args.subdivide:
        if args.component_scope:
            if spec is None:
                raise UsageError("--component-scope only applies to startype")
            scope = "component"
        g = gr.subdivide(g, args.subdivide, scope=scope, spec=spec)
    elif spec is not None:
        scope = "component"

    if args.out is None:
        write_edge_list(g, sys.stdout)
        if spec is not None:
            log.warning("no --out given; sidecar spec not written")
        return EXIT_OK
    out = Path(args.out)
    if out.exists() and not args.force:
        raise UsageError(f"{out} exists; pass --force to overwrite")
    if spec is not None and sidecar_path(out).exists() and not args.force:
        raise UsageError(f"{sidecar_path(out)} exists; pass --force to overwrite")
    write_edge_list(g, out)
    if spec is not None:
        write_sidecar(spec, out, order=args.subdivide or 0, scope=scope)
    print(f"wrote {out}: {g.vertex_count} vertices, {g.edge_count} edges")
    return EXIT_OK


# -- bounds ----------------------------------------------------------------

def cmd_bounds(args) -> int:
    spec, order, scope = read_sidecar(args.graph)
    if scope != "component":
        raise UsageError("bounds need a component-scope star-type sidecar")
    n = order if args.order is None else args.order
    rep = bounds_report(spec, n)
    if args.order is None or args.order == order:
        g = read_edge_list(args.graph)
        if (g.vertex_count, g.edge_count) != (rep.vertices, rep.edges):
            rep.warnings.append("graph file does not match the sidecar construction")
    if args.json:
        _dump_json(rep.as_dict())
        return EXIT_OK
    d = rep.as_dict()
    rows = [
        ("order n", n),
        ("sum |E_i|", d["sum_e"]),
        ("d_theta", d["d_theta"]),
        ("lower", d["lower"]),
        ("att_exact", d["att_exact"]),
        ("upper_prop1", d["upper_prop1"]),
        ("upper_cor1", d["upper_cor1"]),
        ("upper_cor2", d["upper_cor2"]),
        ("restricted_att", d["restricted_att"]),
    ]
    for name, val in rows:
        shown = "-" if val is None else (f"{val:.12g}" if isinstance(val, float) else str(val))
        print(f"{name:<24}{shown}")
    for k, ok in rep.verdicts.items():
        print(f"{k:<24}{'PASS' if ok else 'FAIL'}")
    print(f"{'sandwich':<24}{d['sandwich']}")
    for w in rep.warnings:
        print(f"warning: {w}")
    return EXIT_OK


# -- scaling ---------------------------------------------------------------

def cmd_scaling(args) -> int:
    sizes = _parse_ids(" ".join(args.sizes))
    estimate = args.gamma_check is not None
    gamma = args.gamma_check if isinstance(args.gamma_check, float) else None
    res = scaling_experiment(sizes, m_attach=args.m, seed=args.seed, gamma=gamma, estimate=estimate)
    if args.json:
        _dump_json(res.as_dict())
        return EXIT_OK
    print(f"{'size':>8} {'edges':>8} {'k_max':>6} {'att_exact':>14} {'lower_bound':>14}")
    for r in res.rows:
        print(f"{r.size:>8} {r.edges:>8} {r.k_max:>6} {r.att_exact:>14.8g} {r.lower_bound:>14.8g}")
    print(f"slope      {res.slope:.6f}")
    if estimate:
        g = "-" if res.gamma is None else f"{res.gamma:.4f}"
        p = "- (gamma outside (2, 3))" if res.predicted_exponent is None else f"{res.predicted_exponent:.6f}"
        print(f"gamma      {g}")
        print(f"predicted  {p}")
    print(f"verdict    {res.verdict}")
    return EXIT_OK


# -- dominate --------------------------------------------------------------

def cmd_dominate(args) -> int:
    g = read_edge_list(args.graph)
    ids = _parse_ids(args.set)
    internal = [_resolve_vertex(g, v) for v in ids]
    rep = dominate_report(g, internal)
    rep.vertices = ids
    rep.universal = {ext: rep.universal[v] for ext, v in zip(ids, internal)}
    if args.json:
        _dump_json(rep.as_dict())
        return EXIT_OK
    print(f"dominating    {str(rep.dominating).lower()}")
    for v, uni in rep.universal.items():
        verdict = "optimal (universal)" if uni else "not optimal (not universal)"
        print(f"trap at {v:<6}{verdict}")
    print("note: a set is dominating iff every outside vertex is adjacent to the set;"
          " a single trap attains the degree lower bound iff its vertex is universal.")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trapping", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="trapping times, ATT, bounds for one trap")
    a.add_argument("graph")
    a.add_argument("--trap", default="max-degree", help="vertex id or 'max-degree' (ties: lowest id)")
    a.add_argument("--spectral", action="store_true")
    a.add_argument("--mc", type=int, metavar="WALKS", help="Monte Carlo walks per vertex")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--max-steps", type=int, default=1_000_000)
    fmt = a.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    a.set_defaults(func=cmd_analyze)

    gnr = sub.add_parser("generate", help="write a graph family as an edge list")
    gnr.add_argument("family", choices=["star", "complete", "cycle", "path", "startype", "ba"])
    gnr.add_argument("params", nargs="*")
    gnr.add_argument("--components", help="comma list of i, k<n>, c<n>, p<n>, s<n>")
    gnr.add_argument("--subdivide", type=int, default=0, metavar="N")
    gnr.add_argument("--component-scope", action="store_true")
    gnr.add_argument("--seed", type=int, default=0)
    gnr.add_argument("--out")
    gnr.add_argument("--force", action="store_true")
    gnr.set_defaults(func=cmd_generate)

    b = sub.add_parser("bounds", help="bound table for a star-type graph with sidecar")
    b.add_argument("graph")
    b.add_argument("--order", type=int)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bounds)

    s = sub.add_parser("scaling", help="hub-trap ATT scaling on preferential-attachment graphs")
    s.add_argument("--sizes", nargs="+", required=True)
    s.add_argument("--m", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--gamma-check", nargs="?", type=float, const=True, default=None, metavar="GAMMA",
                   help="report the predicted exponent; estimates gamma when no value is given")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_scaling)

    d = sub.add_parser("dominate", help="dominating-set and per-trap optimality check")
    d.add_argument("graph")
    d.add_argument("--set", required=True)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_dominate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except NumericalFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (TrappingError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
