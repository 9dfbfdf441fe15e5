"""Out-degree reduction by zero-weight binary-tree gadgets.

Every vertex ``v`` with out-edges ``(v, u_1) ... (v, u_d)`` is rewired as
``v -> r_v -> (tree) -> l_v^i -> u_i``. Gadget edges weigh zero and the
leaf edge ``(l_v^i, u_i)`` carries the original weight, so distances
between original vertices are unchanged. A new source of out-degree one
is added when the original source has more than one out-edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from wtss.graph import Edge, Graph, Subgraph


@dataclass(frozen=True)
class TransformMapping:
    original: Graph
    forward: tuple[int, ...]  # original edge id -> leaf edge id
    gadgets: Mapping[int, tuple[int, ...]]  # original vertex -> (root, other gadget vertices...)
    super_source: int | None = None
    super_edge: int | None = None

    @property
    def source(self) -> int:
        return self.original.source if self.super_source is None else self.super_source

    def backward(self) -> dict[int, int]:
        return {leaf: orig for orig, leaf in enumerate(self.forward)}


def reduce_out_degree(g: Graph) -> tuple[Graph, TransformMapping]:
    """Transformed graph with source out-degree 1 and every out-degree <= 2.

    Trees are balanced and their leaves follow canonical out-edge order.
    """
    out: list[list[Edge]] = [[] for _ in range(g.n)]
    for e in g.edges:
        out[e.tail].append(e)

    n_new = g.n
    new_edges: list[tuple[int, int, object]] = []
    super_source = super_edge = None
    if len(out[g.source]) > 1:
        super_source = n_new
        n_new += 1
        super_edge = len(new_edges)
        new_edges.append((super_source, g.source, 0))

    forward = [0] * g.m
    gadgets: dict[int, tuple[int, ...]] = {}
    for v in range(g.n):
        if not out[v]:
            continue
        first = n_new
        d = len(out[v])
        n_new += 2 * d - 1
        nodes = iter(range(first, first + 2 * d - 1))
        root = next(nodes)
        new_edges.append((v, root, 0))
        # (node, slice of out-edges it covers); children allocated breadth-first
        pending = [(root, out[v])]
        while pending:
            node, span = pending.pop(0)
            if len(span) == 1:
                forward[span[0].id] = len(new_edges)
                new_edges.append((node, span[0].head, span[0].weight))
                continue
            half = (len(span) + 1) // 2
            for part in (span[:half], span[half:]):
                child = next(nodes)
                new_edges.append((node, child, 0))
                pending.append((child, part))
        gadgets[v] = tuple(range(first, first + 2 * d - 1))

    source = g.source if super_source is None else super_source
    transformed = Graph.from_edges(n_new, new_edges, source)
    return transformed, TransformMapping(g, tuple(forward), gadgets, super_source, super_edge)


def map_back(h_transformed: Subgraph, mapping: TransformMapping) -> Subgraph:
    """Original edge ``e`` is kept iff its leaf edge is in ``h_transformed``."""
    kept = h_transformed.included
    return Subgraph(mapping.original,
                    frozenset(e for e, leaf in enumerate(mapping.forward) if leaf in kept))


def transport_increment(amounts: Mapping[int, object], mapping: TransformMapping) -> dict[int, object]:
    """Move an increment on original edges onto the corresponding leaf edges."""
    return {mapping.forward[e]: a for e, a in amounts.items()}


def dump_mapping(mapping: TransformMapping) -> str:
    lines = [f"map {e} {leaf}" for e, leaf in enumerate(mapping.forward)]
    if mapping.super_source is not None:
        lines.append(f"# super-source {mapping.super_source} via edge {mapping.super_edge}")
    return "\n".join(lines) + "\n"
