"""Backend selection for the hot graph kernels.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python ``_kernels_py`` module takes over. Both produce identical
results, so the choice only affects speed. :func:`set_backend` switches
explicitly (benchmarks and equivalence tests use it).
"""

from __future__ import annotations

import numpy as np

from wtss import _kernels_py

try:
    from wtss import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_INT64_SAFE = 2**62

BACKEND = "cython" if _compiled is not None else "python"


def available_backends() -> list[str]:
    return ["cython", "python"] if _compiled is not None else ["python"]


def set_backend(name: str) -> None:
    global BACKEND
    if name not in available_backends():
        raise ValueError(f"backend {name!r} is not available")
    BACKEND = name


class Topology:
    """Array form of a graph's edge structure, built once per graph."""

    __slots__ = ("n", "m", "tails", "heads", "inc_ptr", "inc_edges",
                 "tails_l", "heads_l", "inc_ptr_l", "inc_edges_l",
                 "weights", "weights_l")

    def __init__(self, n: int, tails: list[int], heads: list[int], weights: list[int]):
        self.n = n
        self.m = len(tails)
        incident: list[list[int]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(zip(tails, heads)):
            if u == v:
                continue
            incident[u].append(e)
            incident[v].append(e)
        ptr = [0]
        flat: list[int] = []
        for lst in incident:
            flat.extend(lst)
            ptr.append(len(flat))
        self.tails_l, self.heads_l = list(tails), list(heads)
        self.inc_ptr_l, self.inc_edges_l = ptr, flat
        self.weights_l = list(weights)
        self.tails = np.asarray(tails, dtype=np.int32)
        self.heads = np.asarray(heads, dtype=np.int32)
        self.inc_ptr = np.asarray(ptr, dtype=np.int32)
        self.inc_edges = np.asarray(flat, dtype=np.int32)
        bound = max((abs(w) for w in weights), default=0) * max(n, 1)
        self.weights = np.asarray(weights, dtype=np.int64) if bound < _INT64_SAFE else None


def _as_u8(flags) -> np.ndarray:
    return np.asarray(flags, dtype=np.uint8)


def bellman_ford(topo: Topology, mask: np.ndarray, src: int, weights=None):
    """Returns ``(dist, reached, ok)`` over the masked edges.

    ``weights`` overrides the topology's scaled integer weights.
    """
    if weights is None:
        w_arr, w_list = topo.weights, topo.weights_l
    else:
        w_list = list(weights)
        bound = max((abs(w) for w in w_list), default=0) * max(topo.n, 1)
        w_arr = np.asarray(w_list, dtype=np.int64) if bound < _INT64_SAFE else None
    if BACKEND == "cython" and w_arr is not None:
        return _compiled.bellman_ford(topo.n, topo.tails, topo.heads, w_arr, mask, src)
    return _kernels_py.bellman_ford(topo.n, topo.tails_l, topo.heads_l, w_list,
                                    mask.tolist(), src)


def reach(topo: Topology, mask: np.ndarray, seeds, reverse: bool = False) -> list[bool]:
    if BACKEND == "cython":
        return _compiled.reach(topo.n, topo.tails, topo.heads, mask, topo.inc_ptr,
                               topo.inc_edges, _as_u8(seeds), reverse)
    return _kernels_py.reach(topo.n, topo.tails_l, topo.heads_l, mask.tolist(),
                             topo.inc_ptr_l, topo.inc_edges_l, list(seeds), reverse)


def unit_max_flow(topo: Topology, mask: np.ndarray, is_source, t: int):
    if BACKEND == "cython":
        return _compiled.unit_max_flow(topo.n, topo.tails, topo.heads, mask,
                                       topo.inc_ptr, topo.inc_edges,
                                       _as_u8(is_source), t)
    return _kernels_py.unit_max_flow(topo.n, topo.tails_l, topo.heads_l, mask.tolist(),
                                     topo.inc_ptr_l, topo.inc_edges_l,
                                     list(is_source), t)


def residual_sink_side(topo: Topology, mask: np.ndarray, flow, t: int) -> list[bool]:
    if BACKEND == "cython":
        return _compiled.residual_sink_side(topo.n, topo.tails, topo.heads, mask,
                                            topo.inc_ptr, topo.inc_edges,
                                            _as_u8(flow), t)
    return _kernels_py.residual_sink_side(topo.n, topo.tails_l, topo.heads_l,
                                          mask.tolist(), topo.inc_ptr_l,
                                          topo.inc_edges_l, list(flow), t)
