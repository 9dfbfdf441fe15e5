"""Directed multigraphs with exact rational weights, subgraph views and the
line-oriented graph file format.

Weights are :class:`fractions.Fraction`. Internally every graph also keeps
its weights scaled by the lcm of their denominators, so all distance
kernels run on integers.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Union

import numpy as np

from wtss import kernels
from wtss.errors import NegativeCycleError, ParseError, RangeError

Weight = Fraction


class Edge(NamedTuple):
    id: int
    tail: int
    head: int
    weight: Fraction


def as_weight(value) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to an exact weight."""
    if isinstance(value, float):
        raise TypeError("floating-point weights are not supported")
    return Fraction(value)


def format_weight(w: Fraction) -> str:
    return str(w.numerator) if w.denominator == 1 else f"{w.numerator}/{w.denominator}"


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable directed multigraph with a designated source.

    Edge ids are positions in ``edges``; that order is canonical for every
    deterministic output.
    """

    n: int
    edges: tuple[Edge, ...]
    source: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise RangeError("vertex count must be non-negative")
        if self.n and not 0 <= self.source < self.n:
            raise RangeError(f"source {self.source} outside [0, {self.n})")
        for i, e in enumerate(self.edges):
            if e.id != i:
                raise RangeError(f"edge at position {i} has id {e.id}")
            if not (0 <= e.tail < self.n and 0 <= e.head < self.n):
                raise RangeError(f"edge {i} ({e.tail}, {e.head}) outside [0, {self.n})")
        if self.n and has_negative_cycle(self.full(), self.source):
            raise NegativeCycleError("negative-weight cycle reachable from the source")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple], source: int = 0) -> "Graph":
        """Build from ``(tail, head, weight)`` triples."""
        return cls(n, tuple(Edge(i, int(u), int(v), as_weight(w))
                            for i, (u, v, w) in enumerate(edges)), source)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def scale(self) -> int:
        return math.lcm(*(e.weight.denominator for e in self.edges)) if self.edges else 1

    @cached_property
    def scaled_weights(self) -> list[int]:
        s = self.scale
        return [e.weight.numerator * (s // e.weight.denominator) for e in self.edges]

    @cached_property
    def topology(self) -> kernels.Topology:
        return kernels.Topology(self.n, [e.tail for e in self.edges],
                                [e.head for e in self.edges], self.scaled_weights)

    @cached_property
    def reverse_topology(self) -> kernels.Topology:
        return kernels.Topology(self.n, [e.head for e in self.edges],
                                [e.tail for e in self.edges], self.scaled_weights)

    @cached_property
    def _out(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for e in self.edges:
            out[e.tail].append(e.id)
        return out

    @cached_property
    def _in(self) -> list[list[int]]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for e in self.edges:
            inc[e.head].append(e.id)
        return inc

    @property
    def is_integral(self) -> bool:
        return self.scale == 1

    def full(self) -> "Subgraph":
        return Subgraph(self, frozenset(range(self.m)))

    def empty(self) -> "Subgraph":
        return Subgraph(self, frozenset())

    def subgraph(self, edge_ids: Iterable[int]) -> "Subgraph":
        return Subgraph(self, frozenset(edge_ids))

    def with_weights(self, weights: Iterable) -> "Graph":
        return Graph(self.n, tuple(e._replace(weight=as_weight(w))
                                   for e, w in zip(self.edges, weights, strict=True)),
                     self.source)

    def with_source(self, source: int) -> "Graph":
        return Graph(self.n, self.edges, source)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.source, self.edges) == (other.n, other.source, other.edges)

    def __hash__(self):
        return hash((self.n, self.source, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, source={self.source})"


@dataclass(frozen=True, eq=False)
class Subgraph:
    """Edge-subset view of a parent graph. The vertex set is the parent's."""

    parent: Graph
    included: frozenset[int]

    def __post_init__(self):
        bad = [e for e in self.included if not 0 <= e < self.parent.m]
        if bad:
            raise RangeError(f"edge ids {sorted(bad)} not in parent graph")

    @property
    def n(self) -> int:
        return self.parent.n

    @cached_property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.parent.m, dtype=np.uint8)
        if self.included:
            mask[list(self.included)] = 1
        return mask

    def edge_ids(self) -> list[int]:
        return sorted(self.included)

    def edges(self) -> list[Edge]:
        return [self.parent.edges[i] for i in sorted(self.included)]

    def out_edges(self, v: int) -> list[Edge]:
        _check_vertex(self.parent, v)
        return [self.parent.edges[i] for i in self.parent._out[v] if i in self.included]

    def in_edges(self, v: int) -> list[Edge]:
        _check_vertex(self.parent, v)
        return [self.parent.edges[i] for i in self.parent._in[v] if i in self.included]

    def in_degree(self, v: int) -> int:
        return sum(1 for i in self.parent._in[v] if i in self.included)

    def without(self, edge_ids: Iterable[int]) -> "Subgraph":
        return Subgraph(self.parent, self.included - frozenset(edge_ids))

    def restrict(self, edge_ids: Iterable[int]) -> "Subgraph":
        return Subgraph(self.parent, self.included & frozenset(edge_ids))

    def to_graph(self) -> tuple[Graph, list[int]]:
        """Materialize as a standalone graph; returns it with the list mapping
        new edge ids to parent edge ids."""
        keep = self.edge_ids()
        g = Graph(self.n, tuple(Edge(i, *self.parent.edges[p][1:])
                                for i, p in enumerate(keep)), self.parent.source)
        return g, keep

    def __len__(self):
        return len(self.included)

    def __eq__(self, other):
        if not isinstance(other, Subgraph):
            return NotImplemented
        return self.included == other.included and (
            self.parent is other.parent or self.parent == other.parent)

    def __hash__(self):
        return hash(self.included)

    def __repr__(self):
        return f"Subgraph({len(self.included)} of {self.parent.m} edges)"


GraphLike = Union[Graph, Subgraph]


def as_subgraph(g: GraphLike) -> Subgraph:
    return g.full() if isinstance(g, Graph) else g


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise RangeError(f"vertex {v} outside [0, {g.n})")


def has_negative_cycle(g: GraphLike, src: int) -> bool:
    sub = as_subgraph(g)
    _, _, ok = kernels.bellman_ford(sub.parent.topology, sub.mask, src)
    return not ok


def reachable_from(g: GraphLike, seeds: Iterable[int]) -> set[int]:
    sub = as_subgraph(g)
    flags = [False] * sub.n
    for v in seeds:
        _check_vertex(sub.parent, v)
        flags[v] = True
    seen = kernels.reach(sub.parent.topology, sub.mask, flags)
    return {v for v in range(sub.n) if seen[v]}


def reaching(g: GraphLike, targets: Iterable[int]) -> set[int]:
    """Vertices with a path to some vertex of ``targets``."""
    sub = as_subgraph(g)
    flags = [False] * sub.n
    for v in targets:
        _check_vertex(sub.parent, v)
        flags[v] = True
    seen = kernels.reach(sub.parent.topology, sub.mask, flags, reverse=True)
    return {v for v in range(sub.n) if seen[v]}


def out_edges(g: GraphLike, v: int) -> list[Edge]:
    return as_subgraph(g).out_edges(v)


def in_edges(g: GraphLike, v: int) -> list[Edge]:
    return as_subgraph(g).in_edges(v)


def st_path_closure(g: GraphLike, s: int, t: int) -> Subgraph:
    """Union of all s-t paths: edges (u, v) with u reachable from ``s`` and
    ``t`` reachable from v. Empty when ``t`` is unreachable."""
    sub = as_subgraph(g)
    fwd = reachable_from(sub, [s])
    if t not in fwd:
        return sub.parent.empty()
    bwd = reaching(sub, [t])
    edges = sub.parent.edges
    return Subgraph(sub.parent, frozenset(
        i for i in sub.included if edges[i].tail in fwd and edges[i].head in bwd))


# --- file format -----------------------------------------------------------

def load_graph(text: str | bytes) -> Graph:
    """Parse the line-oriented graph format (``n``, ``s``, ``e`` records)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = None
    source = None
    triples = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        try:
            if tag == "n" and len(parts) == 2:
                if n is not None:
                    raise ParseError("duplicate 'n' record", lineno)
                n = int(parts[1])
                if n < 0:
                    raise ParseError("vertex count must be non-negative", lineno)
            elif tag == "s" and len(parts) == 2:
                if source is not None:
                    raise ParseError("duplicate 's' record", lineno)
                source = int(parts[1])
            elif tag == "e" and len(parts) == 4:
                if n is None:
                    raise ParseError("'e' record before 'n'", lineno)
                u, v = int(parts[1]), int(parts[2])
                if not (0 <= u < n and 0 <= v < n):
                    raise RangeError(f"line {lineno}: edge ({u}, {v}) outside [0, {n})")
                triples.append((u, v, _parse_weight(parts[3], lineno)))
            else:
                raise ParseError(f"malformed record {line!r}", lineno)
        except ValueError as exc:
            if isinstance(exc, (ParseError, RangeError)):
                raise
            raise ParseError(f"malformed record {line!r}", lineno) from exc
    if n is None:
        raise ParseError("missing 'n' record")
    if source is None:
        source = 0
    if n and not 0 <= source < n:
        raise RangeError(f"source {source} outside [0, {n})")
    return Graph.from_edges(n, triples, source)


def _parse_weight(token: str, lineno: int) -> Fraction:
    num, _, den = token.partition("/")
    try:
        if den:
            if int(den) <= 0:
                raise ParseError(f"bad weight denominator in {token!r}", lineno)
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except ValueError as exc:
        raise ParseError(f"bad weight {token!r}", lineno) from exc


def dump_graph(g: GraphLike, comment: str | None = None) -> str:
    """Serialize in canonical edge order. A subgraph is written as a graph
    of its included edges (renumbered densely)."""
    if isinstance(g, Subgraph):
        g = g.to_graph()[0]
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n {g.n}")
    lines.append(f"s {g.source}")
    lines.extend(f"e {e.tail} {e.head} {format_weight(e.weight)}" for e in g.edges)
    return "\n".join(lines) + "\n"


def match_subgraph(parent: Graph, child: Graph) -> Subgraph:
    """Identify ``child``'s edges inside ``parent`` by (tail, head, weight),
    taking parallel copies in canonical order."""
    if child.n != parent.n:
        raise RangeError(f"vertex count {child.n} differs from parent's {parent.n}")
    pool: dict[tuple, list[int]] = {}
    for e in parent.edges:
        pool.setdefault((e.tail, e.head, e.weight), []).append(e.id)
    need = Counter((e.tail, e.head, e.weight) for e in child.edges)
    chosen = []
    for key, count in need.items():
        ids = pool.get(key, [])
        if len(ids) < count:
            raise RangeError(f"edge {key[0]}->{key[1]} ({format_weight(key[2])}) "
                             "is not in the parent graph")
        chosen.extend(ids[:count])
    return Subgraph(parent, frozenset(chosen))
