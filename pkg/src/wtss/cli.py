"""Command-line front end.

Exit codes: 0 success, 1 verification failure (counterexample, unproven
edge or violated size bound), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from wtss.builder import build_wtss, build_wtss_t, dump_stats, indegree_cap
from wtss.errors import WtssError
from wtss.flow import fsmc, short_max_flow
from wtss.generators import (FAMILIES, dump_witnesses, gen_rational_increment_lb, generate,
                             load_witnesses)
from wtss.graph import dump_graph, format_weight, load_graph, match_subgraph
from wtss.oracle import dump_counterexample, verify_edge_necessity, verify_wtss, verify_wtss_t
from wtss.shortest_path import sssp
from wtss.transform import dump_mapping, reduce_out_degree


class _Failure(Exception):
    """Verification failed; the message goes to stdout and the exit code is 1."""


def _read_graph(path: str, source: int | None = None):
    g = load_graph(Path(path).read_bytes())
    if source is not None and source != g.source:
        g = g.with_source(source)
    return g


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _sidecar(explicit: str | None, output: str | None, suffix: str) -> str | None:
    if explicit is not None:
        return explicit
    if output is None or output == "-":
        return None
    return output + suffix


def _fmt_dist(d) -> str:
    return "inf" if d is None else format_weight(Fraction(d))


def _check_bound(text_stats: str, k: int, n: int, max_indeg: int, edges: int) -> None:
    cap = indegree_cap(k)
    if max_indeg > cap or edges > cap * n:
        raise _Failure(text_stats + f"violation: in-degree {max_indeg} or edges {edges} "
                       f"exceed cap {cap} per vertex\n")


def cmd_build(args) -> None:
    g = _read_graph(args.input, args.source)
    if args.command == "build":
        r = build_wtss(g, None, args.k)
    else:
        r = build_wtss_t(g, None, args.target, args.k)
    _emit(dump_graph(r.subgraph), args.output)
    st = dump_stats(r)
    side = _sidecar(args.stats, args.output, ".stats")
    if side is not None:
        Path(side).write_text(st)
    if args.command == "build":
        sub = r.subgraph
        _check_bound(st, args.k, g.n, max((sub.in_degree(v) for v in range(g.n)), default=0),
                     len(sub))


def cmd_verify(args) -> None:
    g = _read_graph(args.input, args.source)
    h = match_subgraph(g, load_graph(Path(args.subgraph).read_bytes()))
    if args.command == "verify":
        bad = verify_wtss(g, h, g.source, args.k)
    else:
        bad = verify_wtss_t(g, h, g.source, args.target, args.k)
    if bad is not None:
        raise _Failure(dump_counterexample(bad))
    sys.stdout.write("ok\n")


def cmd_necessity(args) -> None:
    g = _read_graph(args.input, args.source)
    budget = Fraction(args.k)
    witnesses = None
    if args.witnesses:
        witnesses = [w for _, w in load_witnesses(Path(args.witnesses).read_text())]
    elif budget.denominator != 1:
        raise WtssError("a fractional budget needs --witnesses")
    verdicts = verify_edge_necessity(g, g.source, budget, witnesses)
    lines = []
    for v in verdicts:
        line = f"edge {v.edge} {v.label}"
        if v.necessary:
            line += f" target {v.target} increment {v.increment}"
        lines.append(line)
    text = "\n".join(lines) + "\n"
    if not all(v.necessary for v in verdicts):
        raise _Failure(text)
    sys.stdout.write(text)


def cmd_gen(args) -> None:
    if args.family == "rational-increment" and args.rescale:
        inst = gen_rational_increment_lb(args.size, rescale=True)
    else:
        inst = generate(args.family, args.k, args.size)
    comment = f"{inst.family} k={inst.k} size={inst.size} edges={inst.graph.m}"
    _emit(dump_graph(inst.graph, comment), args.output)
    side = _sidecar(args.witnesses, args.output, ".wit")
    if side is not None:
        Path(side).write_text(dump_witnesses(inst))


def cmd_transform(args) -> None:
    g = _read_graph(args.input, args.source)
    h, mapping = reduce_out_degree(g)
    _emit(dump_graph(h), args.output)
    side = _sidecar(args.mapping, args.output, ".map")
    if side is not None:
        Path(side).write_text(dump_mapping(mapping))


def cmd_dist(args) -> None:
    g = _read_graph(args.input, args.source)
    dist = sssp(g, g.source)
    targets = range(g.n) if args.target is None else [args.target]
    sys.stdout.write("".join(f"{v} {_fmt_dist(dist[v])}\n" for v in targets))


def cmd_cut(args) -> None:
    g = _read_graph(args.input, args.source)
    sources = args.sources if args.sources else [g.source]
    res = fsmc(g, sources, g.source, args.target)
    value = short_max_flow(g, sources, g.source, args.target).value
    join = lambda xs: " ".join(map(str, sorted(xs)))
    sys.stdout.write(f"value {value}\ncut {join(res.cut)}\n"
                     f"A {join(res.side_a)}\nB {join(res.side_b)}\n")


def cmd_stats(args) -> None:
    g = _read_graph(args.input, args.source)
    h = match_subgraph(g, load_graph(Path(args.subgraph).read_bytes()))
    indeg = [h.in_degree(v) for v in range(g.n)]
    max_indeg = max(indeg, default=0)
    text = (f"edges {len(h)}\nmax_indegree {max_indeg}\n"
            f"bound {indegree_cap(args.k)}\n")
    _check_bound(text, args.k, g.n, max_indeg, len(h))
    sys.stdout.write(text)


def _positive(text: str) -> int:
    k = int(text)
    if k < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return k


def _budget(text: str) -> Fraction:
    try:
        k = Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad budget {text!r}") from None
    if k <= 0:
        raise argparse.ArgumentTypeError(f"budget must be positive, got {text}")
    return k


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wtss", description="Weight-tolerant shortest-path subgraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def command(name, func, help, k=True, target=False, output=False):
        c = sub.add_parser(name, help=help)
        c.set_defaults(func=func)
        c.add_argument("--input", "-i", required=True, help="graph file")
        c.add_argument("--source", type=int, help="override the file's source vertex")
        if k:
            c.add_argument("--k", type=_positive, required=True, help="increment budget")
        if target:
            c.add_argument("--target", "-t", type=int, required=True)
        if output:
            c.add_argument("--output", "-o", help="output file (default: stdout)")
        return c

    for name, help in (("build", "full k-WTSS"), ("build-t", "k-WTSS for one target")):
        c = command(name, cmd_build, help, target=name == "build-t", output=True)
        c.add_argument("--stats", help="stats sidecar (default: OUTPUT.stats)")
    for name, help in (("verify", "check a subgraph against every increment"),
                       ("verify-t", "check one target's distance")):
        c = command(name, cmd_verify, help, target=name == "verify-t")
        c.add_argument("--subgraph", "-H", required=True, help="candidate subgraph file")

    c = command("necessity", cmd_necessity, "certify every edge as necessary", k=False)
    c.add_argument("--k", type=_budget, required=True, help="budget (may be p/q with --witnesses)")
    c.add_argument("--witnesses", "-w", help="witness file; otherwise enumerate all increments")

    c = sub.add_parser("gen", help="lower-bound instance and witnesses")
    c.set_defaults(func=cmd_gen)
    c.add_argument("--family", required=True, choices=sorted(FAMILIES))
    c.add_argument("--k", type=_positive, default=1)
    c.add_argument("--size", type=int, required=True, help="|X| for tree, n otherwise")
    c.add_argument("--output", "-o")
    c.add_argument("--witnesses", "-w", help="witness sidecar (default: OUTPUT.wit)")
    c.add_argument("--rescale", action="store_true",
                   help="rational-increment: halve witnesses so each totals 1")

    c = command("transform", cmd_transform, "out-degree reduction", k=False, output=True)
    c.add_argument("--mapping", help="edge mapping sidecar (default: OUTPUT.map)")

    c = command("dist", cmd_dist, "exact single-source distances", k=False)
    c.add_argument("--target", "-t", type=int)

    c = command("cut", cmd_cut, "farthest min-cut of the shortest-path subgraph",
                k=False, target=True)
    c.add_argument("--sources", type=int, nargs="+", help="source set (default: the source)")

    c = command("stats", cmd_stats, "size statistics of a subgraph; fails above the cap")
    c.add_argument("--subgraph", "-H", required=True)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except _Failure as exc:
        sys.stdout.write(str(exc))
        return 1
    except (WtssError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
