"""Exhaustive verification against bounded weight increments.

Every check compares exact distances in the full graph and in a candidate
subgraph under the same increased weights. Integer mode enumerates all
increment functions of total at most ``k``; rational or signed increments
are only ever checked on explicitly supplied witnesses.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from wtss.errors import BudgetError, WitnessBudgetError
from wtss.graph import Graph, GraphLike, Subgraph, as_subgraph, reachable_from
from wtss.shortest_path import scaled_distances


@dataclass(frozen=True)
class IncrementFunction:
    """Non-zero per-edge amounts. Amounts are naturals in integer mode;
    demo mode allows any exact rational, including negative ones."""

    amounts: Mapping[int, Fraction | int] = field(default_factory=dict)

    @property
    def total(self) -> Fraction | int:
        return sum(self.amounts.values(), 0)

    @property
    def magnitude(self) -> Fraction | int:
        return sum((abs(a) for a in self.amounts.values()), 0)

    def dense(self, m: int) -> tuple:
        return tuple(self.amounts.get(e, 0) for e in range(m))

    def __str__(self):
        if not self.amounts:
            return "(none)"
        return " ".join(f"{e}={_fmt(a)}" for e, a in sorted(self.amounts.items()))


def _fmt(a) -> str:
    a = Fraction(a)
    return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


@dataclass(frozen=True)
class Counterexample:
    increment: IncrementFunction
    target: int
    dist_in_g: Optional[Fraction]
    dist_in_h: Optional[Fraction]  # None: unreachable in the subgraph

    def __str__(self):
        show = lambda d: "inf" if d is None else _fmt(d)
        return (f"increment {self.increment}\ntarget {self.target}\n"
                f"dist_g {show(self.dist_in_g)}\ndist_h {show(self.dist_in_h)}")


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_increments(m: int, k: int) -> Iterator[IncrementFunction]:
    """Every natural increment on ``m`` edges with total <= ``k``, once each.

    Order: by total, then by the amount on lower edge ids, descending.
    The stream has C(m + k, k) elements.
    """
    if k < 0:
        raise BudgetError(f"budget must be non-negative, got {k}")
    for total in range(k + 1):
        for comp in _compositions(total, m):
            yield IncrementFunction({e: a for e, a in enumerate(comp) if a})


def apply_increment(g: Graph, inc: IncrementFunction | Mapping[int, object]) -> Graph:
    amounts = inc.amounts if isinstance(inc, IncrementFunction) else inc
    return g.with_weights(e.weight + Fraction(amounts.get(e.id, 0)) for e in g.edges)


def _scaled(g: Graph, inc: IncrementFunction) -> tuple[list[int], int]:
    """Incremented weights as integers over a common scale."""
    if not inc.amounts:
        return g.scaled_weights, g.scale
    scale = math.lcm(g.scale, *(Fraction(a).denominator for a in inc.amounts.values()))
    out = []
    for e in g.edges:
        w = e.weight + Fraction(inc.amounts.get(e.id, 0))
        out.append(w.numerator * (scale // w.denominator))
    return out, scale


def _dists(sub: Subgraph, src: int, weights: list[int]) -> list[int | None]:
    return scaled_distances(sub, src, weights=weights)


def _check(g: Graph, h: Subgraph, s: int, targets: Sequence[int],
           increments: Iterable[IncrementFunction]) -> Counterexample | None:
    full = g.full()
    for inc in increments:
        weights, scale = _scaled(g, inc)
        dg = _dists(full, s, weights)
        dh = _dists(h, s, weights)
        for t in targets:
            if dg[t] != dh[t]:
                conv = lambda d: None if d is None else Fraction(d, scale)
                return Counterexample(inc, t, conv(dg[t]), conv(dh[t]))
    return None


def _parent_check(g: Graph, h: GraphLike) -> Subgraph:
    h = as_subgraph(h)
    if h.parent is not g and h.parent != g:
        raise ValueError("h must be a subgraph of g")
    return h


def verify_wtss(g: Graph, h: GraphLike, s: int, k: int) -> Counterexample | None:
    """None if ``h`` preserves dist(s, t) for every t under every natural
    increment of total <= ``k``; otherwise the first failure found in
    enumeration order (then by target id)."""
    h = _parent_check(g, h)
    return _check(g, h, s, range(g.n), enumerate_increments(g.m, k))


def verify_wtss_t(g: Graph, h: GraphLike, s: int, t: int, k: int) -> Counterexample | None:
    h = _parent_check(g, h)
    return _check(g, h, s, [t], enumerate_increments(g.m, k))


@dataclass(frozen=True)
class EdgeVerdict:
    edge: int
    necessary: bool
    increment: Optional[IncrementFunction] = None
    target: Optional[int] = None

    @property
    def label(self) -> str:
        return "NECESSARY" if self.necessary else "NOT-PROVEN"


def verify_edge_necessity(g: Graph, s: int, k, witnesses: Sequence[IncrementFunction] | None = None
                          ) -> list[EdgeVerdict]:
    """For each edge, search for an increment (enumerated, or from
    ``witnesses``) and a target whose distance changes when the edge is
    deleted. Witness budgets are checked on the sum of absolute amounts.

    Raises:
        WitnessBudgetError: a witness exceeds ``k``.
    """
    if witnesses is None:
        if isinstance(k, Fraction) and k.denominator != 1:
            raise BudgetError("exhaustive enumeration needs an integer budget")
        increments: Iterable[IncrementFunction] = list(enumerate_increments(g.m, int(k)))
    else:
        for w in witnesses:
            if w.magnitude > k:
                raise WitnessBudgetError(f"witness {w} has total {_fmt(w.magnitude)} > {k}")
        increments = witnesses
    full = g.full()
    found: dict[int, EdgeVerdict] = {}
    for inc in increments:
        if len(found) == g.m:
            break
        weights, _ = _scaled(g, inc)
        base = _dists(full, s, weights)
        for e in range(g.m):
            if e in found:
                continue
            cut = _dists(full.without([e]), s, weights)
            for t in range(g.n):
                if cut[t] != base[t]:
                    found[e] = EdgeVerdict(e, True, inc, t)
                    break
    return [found.get(e, EdgeVerdict(e, False)) for e in range(g.m)]


def verify_ftrs_reduction(g0: Graph, h: GraphLike, s: int, k: int
                          ) -> tuple[frozenset[int], int] | None:
    """Check reachability from ``s`` survives in ``h`` under every deletion
    of at most ``k`` edges. Returns the first failing (deleted set, target)."""
    if any(e.weight != 0 for e in g0.edges):
        raise ValueError("the reachability reduction needs an all-zero weighting")
    h = _parent_check(g0, h)
    full = g0.full()
    for size in range(k + 1):
        for dead in itertools.combinations(range(g0.m), size):
            rg = reachable_from(full.without(dead), [s])
            rh = reachable_from(h.without(dead), [s])
            if rg != rh:
                return frozenset(dead), min(rg ^ rh)
    return None


def dump_counterexample(c: Counterexample) -> str:
    return str(c) + "\n"
