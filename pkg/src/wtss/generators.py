"""Deterministic lower-bound instances with their adversarial increments.

Each generator returns an :class:`LBInstance` whose witnesses make every
edge of the graph indispensable: under the witness increment, some target's
distance changes when the edge is deleted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from wtss.errors import ParameterError
from wtss.graph import Graph, format_weight
from wtss.oracle import IncrementFunction


@dataclass
class LBInstance:
    graph: Graph
    family: str
    k: int
    size: int
    witnesses: list[tuple[str, IncrementFunction]]
    predicted_edges: int
    params: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def witness_budget(self):
        return max((w.magnitude for _, w in self.witnesses), default=0)


def _tri(i: int) -> int:
    """2 + 3 + ... + i (zero for i <= 1)."""
    return sum(range(2, i + 1))


def gen_tree_lb(k: int, x: int) -> LBInstance:
    """Full binary trees T_1..T_l hung off the source, every leaf wired to
    every vertex of a set X of size ``x``.

    Tree ``i`` has height k - (2 + ... + i); its root edge weighs
    (2 + ... + i) + i and every other edge weighs 1, so the paths through
    tree ``i`` all weigh k + i + 1.
    """
    if k < 2:
        raise ParameterError(f"k must be at least 2, got {k}")
    if x < 1:
        raise ParameterError(f"|X| must be at least 1, got {x}")
    l = 1
    while _tri(l + 1) <= k:
        l += 1
    heights = [k - _tri(i) for i in range(1, l + 1)]

    n = 1
    roots, tree_edges, leaves_by_tree = [], [], []
    for h in heights:
        size = 2 ** (h + 1) - 1
        first = n
        n += size
        roots.append(first)
        # heap layout: node p has children 2p+1, 2p+2 (offsets within the tree)
        tree_edges.append([(first + p, first + c) for p in range(size)
                           for c in (2 * p + 1, 2 * p + 2) if c < size])
        leaves_by_tree.append([first + p for p in range(2**h - 1, size)])
    xs = list(range(n, n + x))
    n += x

    triples = [(0, r, _tri(i) + i) for i, r in enumerate(roots, start=1)]
    root_edge = list(range(len(triples)))
    tree_edge_ids = []
    for edges in tree_edges:
        ids = {}
        for u, v in edges:
            ids[(u, v)] = len(triples)
            triples.append((u, v, 1))
        tree_edge_ids.append(ids)
    leaf_edge = {}
    all_leaves = [leaf for group in leaves_by_tree for leaf in group]
    for leaf in all_leaves:
        for xv in xs:
            leaf_edge[(leaf, xv)] = len(triples)
            triples.append((leaf, xv, 1))
    g = Graph.from_edges(n, triples, 0)

    witnesses = []
    for i, (root, h, leaves, ids) in enumerate(
            zip(roots, heights, leaves_by_tree, tree_edge_ids), start=1):
        for leaf in leaves:
            # root-to-leaf path in heap offsets
            path, p = [], leaf - root
            while p > 0:
                parent = (p - 1) // 2
                path.append((root + parent, root + p))
                p = parent
            path.reverse()
            on_path = {root} | {v for _, v in path}
            amounts: dict[int, int] = {root_edge[j - 1]: i + 1 - j for j in range(1, i)}
            for (u, v), e in ids.items():
                if u in on_path and v not in on_path:
                    amounts[e] = 1
            inc = IncrementFunction(amounts)
            for xv in xs:
                spec = [root_edge[i - 1]] + [ids[a] for a in path] + [leaf_edge[(leaf, xv)]]
                witnesses.append(("path:" + ",".join(map(str, spec)), inc))

    num_leaves = [2**h for h in heights]
    formula = l + sum(2 * c - 1 for c in num_leaves) + sum(num_leaves) * x
    # a full binary tree with c leaves has 2c - 2 edges
    actual = l + sum(2 * c - 2 for c in num_leaves) + sum(num_leaves) * x
    inst = LBInstance(g, "tree", k, x, witnesses, formula,
                      params={"l": l, "heights": heights, "leaves": sum(num_leaves),
                              "x": x, "vertices": n, "construction_edges": actual,
                              "size_bound": Fraction(5, 4) * 2**k * x})
    if formula != actual:
        inst.notes.append(
            f"closed form l + sum(2|L_i| - 1) + |L||X| gives {formula} but the "
            f"construction has {actual} edges (each tree contributes 2|L_i| - 2)")
    return inst


def gen_rational_weight_lb(n: int) -> LBInstance:
    """Source s plus a transitive tournament v_1 -> ... -> v_{n-1} whose
    non-consecutive edges weigh 1 - (i + j) / 2n; the consecutive chain
    weighs 0 and the source edge weighs n."""
    if n < 4:
        raise ParameterError(f"n must be at least 4, got {n}")
    triples = [(0, 1, n)]
    ids = {}
    for i in range(1, n):
        for j in range(i + 1, n):
            ids[(i, j)] = len(triples)
            w = 0 if j == i + 1 else 1 - Fraction(i + j, 2 * n)
            triples.append((i, j, w))
    g = Graph.from_edges(n, triples, 0)
    witnesses = [(f"edge:{e}", IncrementFunction({ids[(i, i + 1)]: 1}))
                 for (i, j), e in ids.items() if j != i + 1]
    return LBInstance(g, "rational-weight", 1, n, witnesses, math.comb(n - 1, 2) + 1)


def _bipartite(n: int, weight: int) -> tuple[Graph, list[int], list[int], dict, int]:
    if n < 6:
        raise ParameterError(f"n must be at least 6, got {n}")
    a = n // 2 - 1
    b = n - n // 2 - 1
    A = list(range(1, a + 1))
    B = list(range(a + 1, a + b + 1))
    t = n - 1
    triples, ids = [], {}
    for u in A:
        ids[(0, u)] = len(triples)
        triples.append((0, u, weight))
    for u in A:
        for v in B:
            ids[(u, v)] = len(triples)
            triples.append((u, v, weight))
    for v in B:
        ids[(v, t)] = len(triples)
        triples.append((v, t, weight))
    return Graph.from_edges(n, triples, 0), A, B, ids, t


def gen_rational_increment_lb(n: int, rescale: bool = False) -> LBInstance:
    """Layers s -> A -> B -> t, complete between consecutive layers, all
    weights 1. The witness for path (s, u, v, t) spreads 1/(|A|-1) over the
    other source edges and 1/(|B|-1) over the other sink edges.

    As written those two groups add up to 2. ``rescale`` halves every
    amount so each witness totals exactly 1.
    """
    g, A, B, ids, t = _bipartite(n, 1)
    fa = Fraction(1, len(A) - 1)
    fb = Fraction(1, len(B) - 1)
    if rescale:
        fa, fb = fa / 2, fb / 2
    witnesses = []
    for u in A:
        for v in B:
            amounts = {ids[(0, x)]: fa for x in A if x != u}
            amounts.update({ids[(y, t)]: fb for y in B if y != v})
            spec = f"path:{ids[(0, u)]},{ids[(u, v)]},{ids[(v, t)]}"
            witnesses.append((spec, IncrementFunction(amounts)))
    inst = LBInstance(g, "rational-increment", 1, n, witnesses,
                      len(A) + len(A) * len(B) + len(B),
                      params={"A": len(A), "B": len(B), "rescaled": rescale})
    if not rescale:
        inst.notes.append(
            "each witness puts total 1 on the source edges and total 1 on the sink "
            "edges, 2 overall, which exceeds the stated budget of 1; rescale=True "
            "halves the amounts")
    return inst


def gen_decrement_lb(n: int) -> LBInstance:
    """Same layered topology with all weights 2; the witness for edge e
    lowers e by one, making the paths through e strictly shortest."""
    g, A, B, ids, t = _bipartite(n, 2)
    witnesses = [(f"edge:{e}", IncrementFunction({e: -1})) for e in range(g.m)]
    return LBInstance(g, "decrement", 1, n, witnesses,
                      len(A) + len(A) * len(B) + len(B),
                      params={"A": len(A), "B": len(B)})


FAMILIES = {
    "tree": lambda k, size: gen_tree_lb(k, size),
    "rational-weight": lambda k, size: gen_rational_weight_lb(size),
    "rational-increment": lambda k, size: gen_rational_increment_lb(size),
    "decrement": lambda k, size: gen_decrement_lb(size),
}


def generate(family: str, k: int, size: int) -> LBInstance:
    try:
        make = FAMILIES[family]
    except KeyError:
        raise ParameterError(f"unknown family {family!r}") from None
    return make(k, size)


def dump_witnesses(inst: LBInstance) -> str:
    lines = [f"# {note}" for note in inst.notes]
    for spec, inc in inst.witnesses:
        body = " ".join(f"{e}={format_weight(Fraction(a))}" for e, a in sorted(inc.amounts.items()))
        lines.append(f"wit {spec} {body}".rstrip())
    return "\n".join(lines) + "\n"


def load_witnesses(text: str) -> list[tuple[str, IncrementFunction]]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] != "wit" or len(parts) < 2:
            raise ValueError(f"malformed witness line {line!r}")
        amounts = {}
        for tok in parts[2:]:
            e, _, a = tok.partition("=")
            amounts[int(e)] = Fraction(a)
        out.append((parts[1], IncrementFunction(amounts)))
    return out
