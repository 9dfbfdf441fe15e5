"""Construction of weight-tolerant shortest-path subgraphs.

:func:`build_wtss_t` builds a subgraph preserving the single distance
dist(s, t) under every integer increment of total at most ``k``. It works on
the degree-reduced graph and recursively strips farthest min-cuts of
shortest-path subgraphs, indexing the branches by a vector ``sigma`` whose
``j``-th entry records which of the ``k`` cuts was removed at level ``j``
(-1 for levels not yet reached). Only the in-edges of ``t`` carried by the
final max-flow of each branch are kept.

:func:`build_wtss` composes these per-target subgraphs over all vertices in
ascending order, each round working on the previous round's output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from wtss.errors import IntegralityError, ParameterError, UnreachableError
from wtss.flow import farthest_min_cut, max_flow, partition
from wtss.graph import Graph, GraphLike, Subgraph, _check_vertex, reachable_from, st_path_closure
from wtss.shortest_path import shortest_path_edges
from wtss.transform import map_back, reduce_out_degree

Sigma = tuple[int, ...]


def indegree_cap(k: int) -> int:
    """floor(e * (k-1)! * 2^k), the per-vertex in-degree bound."""
    return math.floor(math.e * math.factorial(k - 1) * 2**k)


def branch_bound(k: int) -> int:
    """Number of sigma vectors that can reach the final max-flow:
    1 + (k-1) + (k-1)(k-2) + ... + (k-1)!  (at most e * (k-1)!)."""
    return sum(math.factorial(k - 1) // math.factorial(j) for j in range(k))


def _guard(sigma: list[int], j: int, k: int) -> bool:
    """True when the branch at level ``j`` is pruned.

    Level ``j`` survives only if every earlier choice satisfies
    sigma(i) <= k - j + i - 1, which leaves (k-1)!/(k-j)! live vectors at
    level ``j`` and none at level k + 1.
    """
    return any(sigma[i - 1] >= k - j + i for i in range(1, j))


@dataclass
class WtssResult:
    subgraph: Subgraph
    k: int
    s: int
    t: Optional[int] = None
    kept_in_edges: frozenset[int] = frozenset()  # in-edges of t collected from final flows
    cut_edges_into_t: frozenset[int] = frozenset()
    cut_sizes: dict[Sigma, list[int]] = field(default_factory=dict)
    flow_branches: int = 0
    levels_below_bound: list[tuple[Sigma, int, int]] = field(default_factory=list)
    growth_violations: list[tuple[Sigma, int, int, int]] = field(default_factory=list)
    rounds: list["WtssResult"] = field(default_factory=list)

    @property
    def edge_count(self) -> int:
        return len(self.subgraph)


class _Recursion:
    """State of one k-WTSS(t) run on the degree-reduced graph."""

    def __init__(self, g: Graph, t: int, k: int):
        self.g = g
        self.s = g.source
        self.t = t
        self.k = k
        self.d: int = 0
        self.collected: set[int] = set()
        self.cut_into_t: set[int] = set()
        self.cut_sizes: dict[Sigma, list[int]] = {}
        self.flow_branches = 0
        self.levels_below_bound: list[tuple[Sigma, int, int]] = []
        self.growth_violations: list[tuple[Sigma, int, int, int]] = []

    def run(self) -> None:
        s, t = self.s, self.t
        start = st_path_closure(self.g.full(), s, t)
        _, self.d = shortest_path_edges(start, s, t)
        self.visit(start, [-1] * self.k, 1)

    def visit(self, cur: Subgraph, sigma: list[int], j: int) -> None:
        k, s, t = self.k, self.s, self.t
        if _guard(sigma, j, k):
            return
        if not cur.included:
            return  # t unreachable: nothing left below this branch
        short_ids, dist = shortest_path_edges(cur, s, t)
        level = self.d + j - 1
        if dist < level:
            self.levels_below_bound.append((tuple(sigma), j, dist))
        nxt = list(sigma)
        nxt[j - 1] = 0
        if dist != level:
            self.visit(cur, nxt, j + 1)
            return

        short = Subgraph(self.g, short_ids)
        edges = self.g.edges
        sources = frozenset([s])
        sizes: list[int] = []
        for _ in range(k):
            cut = farthest_min_cut(short, sources, t).cut
            sizes.append(len(cut))
            self.cut_into_t.update(e for e in cut if edges[e].head == t)
            self.visit(st_path_closure(cur.without(cut), s, t), list(nxt), j + 1)
            nxt[j - 1] += 1
            side_a, _ = partition(short, cut, sources, t)
            out_a = {edges[e].head for e in short_ids
                     if edges[e].tail in side_a and edges[e].head not in side_a}
            sources = (side_a | out_a) - {t}
        flow = max_flow(short, sources, t)
        self.collected.update(e for e in flow.support if edges[e].head == t)
        self.flow_branches += 1
        key = tuple(sigma)
        self.cut_sizes[key] = sizes
        for i in range(1, len(sizes)):
            if sizes[i] > 2 * sizes[i - 1]:
                self.growth_violations.append((key, i, sizes[i - 1], sizes[i]))


def _prepare(g: GraphLike, s: int | None, k: int) -> tuple[Graph, list[int] | None]:
    if k < 1:
        raise ParameterError(f"k must be a positive integer, got {k}")
    if isinstance(g, Subgraph):
        base, idmap = g.to_graph()
    else:
        base, idmap = g, None
    if s is not None and s != base.source:
        _check_vertex(base, s)
        base = base.with_source(s)
    if not base.is_integral:
        raise IntegralityError("the construction requires integer edge weights")
    return base, idmap


def _lift(sub: Subgraph, target: GraphLike, idmap: list[int] | None) -> Subgraph:
    if idmap is None:
        return sub
    parent = target.parent if isinstance(target, Subgraph) else target
    return Subgraph(parent, frozenset(idmap[e] for e in sub.included))


def build_wtss_t(g: GraphLike, s: int | None, t: int, k: int) -> WtssResult:
    """k-WTSS(t) of ``g`` (a graph or a subgraph view) for source ``s``.

    The result keeps every edge of ``g`` except the in-edges of ``t``, of
    which only those collected from the final max-flows survive. Returned
    edge ids refer to ``g``'s parent graph.

    Raises:
        UnreachableError: ``t`` is not reachable from ``s``.
        IntegralityError: some weight is not an integer.
    """
    base, idmap = _prepare(g, s, k)
    src = base.source
    _check_vertex(base, t)
    in_t = {e.id for e in base.edges if e.head == t}
    if t == src:
        kept = base.full().without(in_t)
        return WtssResult(_lift(kept, g, idmap), k, src, t)
    if t not in reachable_from(base, [src]):
        raise UnreachableError(f"vertex {t} is not reachable from {src}")

    transformed, mapping = reduce_out_degree(base)
    rec = _Recursion(transformed, t, k)
    rec.run()
    t_in = {e.id for e in transformed.edges if e.head == t}
    h_transformed = transformed.full().without(t_in - rec.collected)
    h_base = map_back(h_transformed, mapping)
    back = mapping.backward()
    collected = frozenset(back[e] for e in rec.collected)
    into_t = frozenset(back[e] for e in rec.cut_into_t)
    if idmap is not None:
        collected = frozenset(idmap[e] for e in collected)
        into_t = frozenset(idmap[e] for e in into_t)
    return WtssResult(
        subgraph=_lift(h_base, g, idmap), k=k, s=src, t=t,
        kept_in_edges=collected, cut_edges_into_t=into_t, cut_sizes=rec.cut_sizes,
        flow_branches=rec.flow_branches,
        levels_below_bound=rec.levels_below_bound,
        growth_violations=rec.growth_violations)


def build_wtss(g: GraphLike, s: int | None, k: int) -> WtssResult:
    """k-WTSS of ``g``: vertices are processed in ascending id, round ``i``
    replacing the in-edges of ``v_i`` in the current graph by those of its
    k-WTSS(v_i) computed on that same current graph.

    The source loses all in-edges; vertices unreachable from the source
    lose theirs too.
    """
    base, _ = _prepare(g, s, k)
    src = base.source
    parent = g.parent if isinstance(g, Subgraph) else g
    cur = g.full() if isinstance(g, Graph) else g
    if s is not None and s != parent.source:
        parent = parent.with_source(s)
        cur = Subgraph(parent, cur.included)
    result = WtssResult(cur, k, src)
    for v in range(parent.n):
        in_v = {e.id for e in cur.in_edges(v)}
        if v == src or v not in reachable_from(cur, [src]):
            cur = cur.without(in_v)
            continue
        r = build_wtss_t(cur, src, v, k)
        cur = r.subgraph
        result.rounds.append(r)
        result.flow_branches = max(result.flow_branches, r.flow_branches)
        result.levels_below_bound.extend(r.levels_below_bound)
        result.growth_violations.extend(r.growth_violations)
        for sigma, sizes in r.cut_sizes.items():
            result.cut_sizes[(v,) + sigma] = sizes
    result.subgraph = cur
    return result


def stats(r: WtssResult) -> dict:
    """Edge count, in-degrees, the in-degree cap and the cut-size ledger."""
    sub = r.subgraph
    indeg = [sub.in_degree(v) for v in range(sub.n)]
    return {
        "edges": len(sub),
        "indegree": indeg,
        "max_indegree": max(indeg, default=0),
        "bound": indegree_cap(r.k),
        "edge_bound": indegree_cap(r.k) * sub.n,
        "cut_sizes": dict(r.cut_sizes),
        "flow_branches": r.flow_branches,
        "branch_bound": branch_bound(r.k),
    }


def dump_stats(r: WtssResult) -> str:
    st = stats(r)
    return (f"edges {st['edges']}\nmax_indegree {st['max_indegree']}\n"
            f"bound {st['bound']}\n")
