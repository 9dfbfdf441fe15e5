import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from wtss import kernels
from wtss.errors import NegativeCycleError
from wtss.graph import Graph, has_negative_cycle


def diamond(w=(1, 1, 1, 1)):
    """s=0 -> a=1, s -> b=2, a -> t=3, b -> t."""
    return Graph.from_edges(4, [(0, 1, w[0]), (0, 2, w[1]), (1, 3, w[2]), (2, 3, w[3])], 0)


def chain(*weights):
    return Graph.from_edges(len(weights) + 1, [(i, i + 1, w) for i, w in enumerate(weights)], 0)


def no_negative_cycle(g: Graph) -> bool:
    return not any(has_negative_cycle(g.full(), v) for v in range(g.n))


def random_graph(rng: random.Random, n_max=7, m_max=12, lo=-2, hi=5, n_min=2,
                 self_loops=False) -> Graph:
    """Random multigraph with integer weights and no negative cycle anywhere."""
    while True:
        n = rng.randint(n_min, n_max)
        m = rng.randint(0, m_max)
        triples = []
        for _ in range(m):
            u, v = rng.randrange(n), rng.randrange(n)
            if u == v and not self_loops:
                continue
            triples.append((u, v, rng.randint(lo, hi)))
        try:
            g = Graph.from_edges(n, triples, 0)
        except NegativeCycleError:
            continue
        if no_negative_cycle(g):
            return g


def random_suite(seed: int, count: int, **kw) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, **kw) for _ in range(count)]


@st.composite
def graphs(draw, n_max=6, m_max=10, lo=-2, hi=5, rational=False):
    n = draw(st.integers(2, n_max))
    weight = st.integers(lo, hi)
    if rational:
        weight = st.builds(Fraction, st.integers(lo * 4, hi * 4), st.integers(1, 4))
    triples = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), weight),
                            max_size=m_max))
    try:
        g = Graph.from_edges(n, triples, 0)
    except NegativeCycleError:
        g = None
    if g is None or not no_negative_cycle(g):
        # drop negative weights rather than discard the example
        g = Graph.from_edges(n, [(u, v, abs(w)) for u, v, w in triples], 0)
    return g


# --- brute-force oracles ---------------------------------------------------

def simple_paths(g, s, t, included=None):
    """All simple s-t paths as edge-id lists (s == t yields the empty path)."""
    ids = sorted(included) if included is not None else range(g.m)
    out_by = {}
    for e in ids:
        out_by.setdefault(g.edges[e].tail, []).append(e)
    found = []

    def walk(v, seen, path):
        if v == t:
            found.append(list(path))
            return
        for e in out_by.get(v, []):
            h = g.edges[e].head
            if h not in seen:
                seen.add(h)
                path.append(e)
                walk(h, seen, path)
                path.pop()
                seen.discard(h)

    walk(s, {s}, [])
    return found


def path_weight(g, path):
    return sum((g.edges[e].weight for e in path), Fraction(0))


def walk_distances(g, s, included=None):
    """Shortest walk of at most n-1 edges to every vertex, by dynamic
    programming over walk length (independent of Bellman-Ford rounds)."""
    ids = sorted(included) if included is not None else range(g.m)
    best = {s: Fraction(0)}
    layer = {s: Fraction(0)}
    for _ in range(g.n - 1):
        nxt = {}
        for e in ids:
            u, v, w = g.edges[e].tail, g.edges[e].head, g.edges[e].weight
            if u in layer:
                c = layer[u] + w
                if v not in nxt or c < nxt[v]:
                    nxt[v] = c
        for v, c in nxt.items():
            if v not in best or c < best[v]:
                best[v] = c
        layer = nxt
    return [best.get(v) for v in range(g.n)]


def reach_set(g, sources, included):
    adj = {}
    for e in included:
        adj.setdefault(g.edges[e].tail, []).append(g.edges[e].head)
    seen = set(sources)
    stack = list(sources)
    while stack:
        u = stack.pop()
        for v in adj.get(u, []):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def all_min_cuts(g, included, sources, t):
    """Every minimum (S, t)-cut as (edge set, A-side), by enumerating edge
    subsets in increasing size. Only inclusion-minimal cuts are returned."""
    included = sorted(included)
    for size in range(len(included) + 1):
        cuts = []
        for c in itertools.combinations(included, size):
            rest = set(included) - set(c)
            a = reach_set(g, sources, rest)
            if t not in a:
                cuts.append((frozenset(c), frozenset(a)))
        if cuts:
            return size, cuts
    raise AssertionError("no cut found")


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    old = kernels.BACKEND
    kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(old)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            label = dict(getattr(rep, "user_properties", [])).get("criterion")
            if label and rep.when == "call":
                lines.append((label, outcome.upper()[:4]))
    if lines:
        terminalreporter.section("acceptance criteria")
        for label, verdict in sorted(lines, key=lambda x: (int(x[0].split()[0]), x[0])):
            terminalreporter.write_line(f"{verdict:<4}  criterion {label}")
