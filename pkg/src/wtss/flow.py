"""Unit-capacity max-flow, farthest min-cuts and their shortest-path
subgraph counterparts.

Flows are multi-source: every vertex of the source set may emit flow and
no super-source vertex is ever materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from wtss import kernels
from wtss.errors import NotACutError, RangeError, UnreachableError
from wtss.graph import GraphLike, Subgraph, _check_vertex, as_subgraph
from wtss.shortest_path import shortest_path_subgraph


@dataclass(frozen=True)
class FlowAssignment:
    support: frozenset[int]  # edges carrying one unit
    value: int
    sources: frozenset[int]
    sink: int

    def __contains__(self, edge_id: int) -> bool:
        return edge_id in self.support


@dataclass(frozen=True)
class CutResult:
    cut: frozenset[int]
    side_a: frozenset[int]
    side_b: frozenset[int]


def _source_flags(sub: Subgraph, sources: Iterable[int], t: int) -> tuple[frozenset[int], list[bool]]:
    _check_vertex(sub.parent, t)
    srcs = frozenset(sources)
    for v in srcs:
        _check_vertex(sub.parent, v)
    if t in srcs:
        raise RangeError(f"sink {t} is in the source set")
    flags = [False] * sub.n
    for v in srcs:
        flags[v] = True
    return srcs, flags


def _flow(sub: Subgraph, flags: list[bool], t: int) -> tuple[list[int], int]:
    return kernels.unit_max_flow(sub.parent.topology, sub.mask, flags, t)


def max_flow(g: GraphLike, sources: Iterable[int], t: int) -> FlowAssignment:
    """Maximum integral unit-capacity flow from ``sources`` to ``t``.

    Augmenting paths are found by BFS scanning residual arcs in ascending
    edge id, so the result is a function of the canonical edge order.
    """
    sub = as_subgraph(g)
    srcs, flags = _source_flags(sub, sources, t)
    flow, value = _flow(sub, flags, t)
    support = frozenset(e for e, f in enumerate(flow) if f)
    return FlowAssignment(support, value, srcs, t)


def farthest_min_cut(g: GraphLike, sources: Iterable[int], t: int) -> CutResult:
    """The unique farthest (S, t)-min-cut.

    ``side_b`` holds the vertices with a residual path to ``t`` under a
    max-flow, ``side_a`` the rest, and the cut is every edge from A to B.

    Raises:
        UnreachableError: the max-flow value is zero.
    """
    sub = as_subgraph(g)
    _, flags = _source_flags(sub, sources, t)
    flow, value = _flow(sub, flags, t)
    if value == 0:
        raise UnreachableError(f"vertex {t} is not reachable from the source set")
    in_b = kernels.residual_sink_side(sub.parent.topology, sub.mask, flow, t)
    edges = sub.parent.edges
    cut = frozenset(i for i in sub.included
                    if not in_b[edges[i].tail] and in_b[edges[i].head])
    side_b = frozenset(v for v in range(sub.n) if in_b[v])
    side_a = frozenset(range(sub.n)) - side_b
    return CutResult(cut, side_a, side_b)


def partition(g: GraphLike, cut: Iterable[int], sources: Iterable[int],
              t: int | None = None) -> tuple[frozenset[int], frozenset[int]]:
    """(A, B) where A is everything reachable from ``sources`` once ``cut``
    is removed.

    Raises:
        NotACutError: ``t`` is given and still reachable.
    """
    sub = as_subgraph(g).without(cut)
    flags = [False] * sub.n
    for v in sources:
        _check_vertex(sub.parent, v)
        flags[v] = True
    seen = kernels.reach(sub.parent.topology, sub.mask, flags)
    side_a = frozenset(v for v in range(sub.n) if seen[v])
    if t is not None and t in side_a:
        raise NotACutError(f"vertex {t} is still reachable after removing the cut")
    return side_a, frozenset(range(sub.n)) - side_a


def fsmc(g: GraphLike, sources: Iterable[int], s: int, t: int) -> CutResult:
    """Farthest min-cut of the s-t shortest-path subgraph.

    The returned sides are the partition taken inside the shortest-path
    subgraph (reachability from ``sources`` after removing the cut).
    """
    srcs = frozenset(sources)
    short = shortest_path_subgraph(g, s, t)
    far = farthest_min_cut(short, srcs, t)
    side_a, side_b = partition(short, far.cut, srcs, t)
    return CutResult(far.cut, side_a, side_b)


def short_max_flow(g: GraphLike, sources: Iterable[int], s: int, t: int) -> FlowAssignment:
    """Max-flow from ``sources`` to ``t`` inside the s-t shortest-path subgraph."""
    return max_flow(shortest_path_subgraph(g, s, t), sources, t)
