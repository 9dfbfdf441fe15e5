"""Exact single-source distances and shortest-path subgraph extraction.

Distances come from round-based Bellman-Ford relaxation on the graph's
integer-scaled weights, so negative edges are fine and nothing is ever
rounded. An unreachable vertex is reported as ``None``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from wtss import kernels
from wtss.errors import NegativeCycleError, UnreachableError
from wtss.graph import GraphLike, Subgraph, _check_vertex, as_subgraph, reachable_from, reaching

DistanceTable = tuple[Optional[Fraction], ...]


def scaled_distances(g: GraphLike, src: int, *, reverse: bool = False,
                     weights: Sequence[int] | None = None) -> list[int | None]:
    """Distances in units of ``1 / parent.scale`` (or of ``weights`` when
    given as an override on the same edge ids)."""
    sub = as_subgraph(g)
    _check_vertex(sub.parent, src)
    topo = sub.parent.reverse_topology if reverse else sub.parent.topology
    dist, reached, ok = kernels.bellman_ford(topo, sub.mask, src, weights)
    if not ok:
        raise NegativeCycleError(
            f"negative-weight cycle {'reaching' if reverse else 'reachable from'} vertex {src}")
    return [d if r else None for d, r in zip(dist, reached)]


def _unscale(dist: list[int | None], scale: int) -> DistanceTable:
    return tuple(None if d is None else Fraction(d, scale) for d in dist)


def sssp(g: GraphLike, src: int) -> DistanceTable:
    """Exact distances from ``src``; ``None`` marks unreachable vertices.

    Raises:
        NegativeCycleError: a negative cycle is reachable from ``src``.
    """
    sub = as_subgraph(g)
    return _unscale(scaled_distances(sub, src), sub.parent.scale)


def reverse_sssp(g: GraphLike, dst: int) -> DistanceTable:
    """Exact distances to ``dst`` from every vertex."""
    sub = as_subgraph(g)
    return _unscale(scaled_distances(sub, dst, reverse=True), sub.parent.scale)


def shortest_path_edges(g: GraphLike, s: int, t: int) -> tuple[frozenset[int], int]:
    """Edge ids of the shortest-path subgraph and the scaled distance d(s, t).

    Edges are restricted to those leaving vertices reachable from ``s``, so
    cycles elsewhere in the graph cannot disturb the backward pass.
    """
    sub = as_subgraph(g)
    parent = sub.parent
    fwd = reachable_from(sub, [s])
    if t not in fwd:
        raise UnreachableError(f"vertex {t} is not reachable from {s}")
    bwd = reaching(sub, [t])
    edges = parent.edges
    live = Subgraph(parent, frozenset(
        i for i in sub.included if edges[i].tail in fwd and edges[i].head in bwd))
    ds = scaled_distances(live, s)
    dt = scaled_distances(live, t, reverse=True)
    d = ds[t]
    w = parent.scaled_weights
    keep = frozenset(i for i in live.included
                     if ds[edges[i].tail] + w[i] + dt[edges[i].head] == d)
    return keep, d


def shortest_path_subgraph(g: GraphLike, s: int, t: int) -> Subgraph:
    """The union of all minimum-weight s-t paths: edges (u, v) with
    ``dist(s,u) + w(u,v) + dist(v,t) == dist(s,t)``.

    Raises:
        UnreachableError: no s-t path exists.
    """
    sub = as_subgraph(g)
    keep, _ = shortest_path_edges(sub, s, t)
    return Subgraph(sub.parent, keep)


def distance(g: GraphLike, s: int, t: int) -> Fraction | None:
    return sssp(g, s)[t]
