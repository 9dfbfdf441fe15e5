"""Pure-Python kernels. Same signatures as the compiled ``_kernels`` module.

Arrays may be numpy arrays or plain sequences. Incident-edge CSR
(``inc_ptr``/``inc_edges``) lists, for each vertex, every non-loop edge
touching it in ascending edge-id order.
"""

from collections import deque


def bellman_ford(n, tails, heads, weights, mask, src):
    """Round-based relaxation from ``src`` over masked edges.

    Returns ``(dist, reached, ok)``; ``ok`` is False when round ``n`` still
    relaxes an edge (negative cycle reachable from ``src``).
    """
    active = [(int(tails[e]), int(heads[e]), int(weights[e]))
              for e in range(len(mask)) if mask[e]]
    dist = [0] * n
    reached = [False] * n
    reached[src] = True
    for _ in range(max(n - 1, 0)):
        changed = False
        for u, v, w in active:
            if reached[u]:
                nd = dist[u] + w
                if not reached[v] or nd < dist[v]:
                    dist[v] = nd
                    reached[v] = True
                    changed = True
        if not changed:
            return dist, reached, True
    for u, v, w in active:
        if reached[u] and (not reached[v] or dist[u] + w < dist[v]):
            return dist, reached, False
    return dist, reached, True


def reach(n, tails, heads, mask, inc_ptr, inc_edges, seeds, reverse):
    """Vertices reachable from ``seeds`` (or reaching them when ``reverse``)."""
    seen = [False] * n
    queue = deque()
    for v in range(n):
        if seeds[v]:
            seen[v] = True
            queue.append(v)
    while queue:
        u = queue.popleft()
        for i in range(inc_ptr[u], inc_ptr[u + 1]):
            e = inc_edges[i]
            if not mask[e]:
                continue
            if reverse:
                if heads[e] == u:
                    x = tails[e]
                else:
                    continue
            elif tails[e] == u:
                x = heads[e]
            else:
                continue
            if not seen[x]:
                seen[x] = True
                queue.append(x)
    return seen


def unit_max_flow(n, tails, heads, mask, inc_ptr, inc_edges, is_source, t):
    """Unit-capacity max-flow from all sources to ``t`` by BFS augmentation.

    Residual arcs are scanned in ascending edge id, so the result depends
    only on the canonical edge order. Returns ``(flow, value)``.
    """
    m = len(mask)
    tails = [int(x) for x in tails]
    heads = [int(x) for x in heads]
    flow = [0] * m
    value = 0
    sources = [v for v in range(n) if is_source[v]]
    while True:
        parent = [-1] * n
        seen = [False] * n
        queue = deque()
        for v in sources:
            seen[v] = True
            queue.append(v)
        found = False
        while queue and not found:
            u = queue.popleft()
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
                seen[x] = True
                parent[x] = e
                if x == t:
                    found = True
                    break
                queue.append(x)
        if not found:
            return flow, value
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


def residual_sink_side(n, tails, heads, mask, inc_ptr, inc_edges, flow, t):
    """Vertices with a path to ``t`` in the residual graph of ``flow``."""
    seen = [False] * n
    seen[t] = True
    queue = deque([t])
    while queue:
        v = queue.popleft()
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
                seen[u] = True
                queue.append(u)
    return seen
