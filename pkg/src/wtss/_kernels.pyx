# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_kernels_py`` for the reference semantics."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t, uint8_t

cnp.import_array()


def bellman_ford(Py_ssize_t n, const int32_t[:] tails, const int32_t[:] heads,
                 const int64_t[:] weights, const uint8_t[:] mask, Py_ssize_t src):
    cdef Py_ssize_t m = mask.shape[0]
    cdef Py_ssize_t e, r, u, v
    cdef int64_t nd
    cdef bint changed = True
    dist_arr = np.zeros(n, dtype=np.int64)
    reached_arr = np.zeros(n, dtype=np.uint8)
    cdef int64_t[:] dist = dist_arr
    cdef uint8_t[:] reached = reached_arr
    reached[src] = 1
    for r in range(n - 1):
        changed = False
        for e in range(m):
            if not mask[e]:
                continue
            u = tails[e]
            if not reached[u]:
                continue
            v = heads[e]
            nd = dist[u] + weights[e]
            if not reached[v] or nd < dist[v]:
                dist[v] = nd
                reached[v] = 1
                changed = True
        if not changed:
            break
    if changed:
        for e in range(m):
            if not mask[e]:
                continue
            u = tails[e]
            v = heads[e]
            if reached[u] and (not reached[v] or dist[u] + weights[e] < dist[v]):
                return dist_arr.tolist(), reached_arr.astype(bool).tolist(), False
    return dist_arr.tolist(), reached_arr.astype(bool).tolist(), True


def reach(Py_ssize_t n, const int32_t[:] tails, const int32_t[:] heads,
          const uint8_t[:] mask, const int32_t[:] inc_ptr, const int32_t[:] inc_edges,
          const uint8_t[:] seeds, bint reverse):
    seen_arr = np.zeros(n, dtype=np.uint8)
    cdef uint8_t[:] seen = seen_arr
    queue_arr = np.empty(n, dtype=np.int32)
    cdef int32_t[:] queue = queue_arr
    cdef Py_ssize_t qh = 0, qt = 0, v, u, i, e, x
    for v in range(n):
        if seeds[v]:
            seen[v] = 1
            queue[qt] = v
            qt += 1
    while qh < qt:
        u = queue[qh]
        qh += 1
        for i in range(inc_ptr[u], inc_ptr[u + 1]):
            e = inc_edges[i]
            if not mask[e]:
                continue
            if reverse:
                if heads[e] != u:
                    continue
                x = tails[e]
            else:
                if tails[e] != u:
                    continue
                x = heads[e]
            if not seen[x]:
                seen[x] = 1
                queue[qt] = x
                qt += 1
    return seen_arr.astype(bool).tolist()


def unit_max_flow(Py_ssize_t n, const int32_t[:] tails, const int32_t[:] heads,
                  const uint8_t[:] mask, const int32_t[:] inc_ptr,
                  const int32_t[:] inc_edges, const uint8_t[:] is_source,
                  Py_ssize_t t):
    cdef Py_ssize_t m = mask.shape[0]
    flow_arr = np.zeros(m, dtype=np.uint8)
    cdef uint8_t[:] flow = flow_arr
    parent_arr = np.empty(n, dtype=np.int32)
    cdef int32_t[:] parent = parent_arr
    seen_arr = np.empty(n, dtype=np.uint8)
    cdef uint8_t[:] seen = seen_arr
    queue_arr = np.empty(n, dtype=np.int32)
    cdef int32_t[:] queue = queue_arr
    cdef Py_ssize_t value = 0, qh, qt, u, v, i, e, x
    cdef bint found
    while True:
        qh = 0
        qt = 0
        for v in range(n):
            parent[v] = -1
            seen[v] = is_source[v]
            if is_source[v]:
                queue[qt] = v
                qt += 1
        found = False
        while qh < qt and not found:
            u = queue[qh]
            qh += 1
            for i in range(inc_ptr[u], inc_ptr[u + 1]):
                e = inc_edges[i]
                if not mask[e]:
                    continue
                if tails[e] == u and flow[e] == 0:
                    x = heads[e]
                elif heads[e] == u and flow[e] == 1:
                    x = tails[e]
                else:
                    continue
                if seen[x]:
                    continue
                seen[x] = 1
                parent[x] = e
                if x == t:
                    found = True
                    break
                queue[qt] = x
                qt += 1
        if not found:
            return flow_arr.tolist(), value
        x = t
        while not is_source[x]:
            e = parent[x]
            if heads[e] == x and flow[e] == 0:
                flow[e] = 1
                x = tails[e]
            else:
                flow[e] = 0
                x = heads[e]
        value += 1


def residual_sink_side(Py_ssize_t n, const int32_t[:] tails, const int32_t[:] heads,
                       const uint8_t[:] mask, const int32_t[:] inc_ptr,
                       const int32_t[:] inc_edges, const uint8_t[:] flow,
                       Py_ssize_t t):
    seen_arr = np.zeros(n, dtype=np.uint8)
    cdef uint8_t[:] seen = seen_arr
    queue_arr = np.empty(n, dtype=np.int32)
    cdef int32_t[:] queue = queue_arr
    cdef Py_ssize_t qh = 0, qt = 1, v, u, i, e
    seen[t] = 1
    queue[0] = t
    while qh < qt:
        v = queue[qh]
        qh += 1
        for i in range(inc_ptr[v], inc_ptr[v + 1]):
            e = inc_edges[i]
            if not mask[e]:
                continue
            if heads[e] == v and flow[e] == 0:
                u = tails[e]
            elif tails[e] == v and flow[e] == 1:
                u = heads[e]
            else:
                continue
            if not seen[u]:
                seen[u] = 1
                queue[qt] = u
                qt += 1
    return seen_arr.astype(bool).tolist()
