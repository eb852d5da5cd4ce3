"""Pure-Python flow kernels.

posetlab._kernels (the compiled extension) mirrors this module function for
function; posetlab.kernels picks one at import time. Both work on parallel
arc lists (us[i] -> vs[i]) and exact integers throughout.
"""

from heapq import heappop, heappush

INF = 1 << 62


def dinic(n, us, vs, caps, s, t):
    """Maximum flow. Returns (value, source_side) where source_side lists the
    nodes reachable from s in the final residual graph: a minimum cut
    certificate."""
    m = len(us)
    to = [0] * (2 * m)
    cap = [0] * (2 * m)
    head = [[] for _ in range(n)]
    for i in range(m):
        to[2 * i] = vs[i]
        cap[2 * i] = caps[i]
        to[2 * i + 1] = us[i]
        head[us[i]].append(2 * i)
        head[vs[i]].append(2 * i + 1)
    flow = 0
    while True:
        level = [-1] * n
        level[s] = 0
        queue = [s]
        for v in queue:
            for e in head[v]:
                w = to[e]
                if cap[e] > 0 and level[w] < 0:
                    level[w] = level[v] + 1
                    queue.append(w)
        if level[t] < 0:
            break
        it = [0] * n
        while True:
            # One augmenting path in the level graph per round, iteratively.
            path = []
            v = s
            aug = 0
            while True:
                if v == t:
                    aug = min(cap[e] for e in path)
                    break
                advanced = False
                while it[v] < len(head[v]):
                    e = head[v][it[v]]
                    w = to[e]
                    if cap[e] > 0 and level[w] == level[v] + 1:
                        path.append(e)
                        v = w
                        advanced = True
                        break
                    it[v] += 1
                if advanced:
                    continue
                if v == s:
                    break
                e = path.pop()
                v = to[e ^ 1]
                it[v] += 1
            if aug == 0:
                break
            for e in path:
                cap[e] -= aug
                cap[e ^ 1] += aug
            flow += aug
    seen = [False] * n
    seen[s] = True
    stack = [s]
    while stack:
        v = stack.pop()
        for e in head[v]:
            w = to[e]
            if cap[e] > 0 and not seen[w]:
                seen[w] = True
                stack.append(w)
    return flow, [v for v in range(n) if seen[v]]


def ssp(n, us, vs, caps, costs, s, t, max_units, stop_geq, use_stop):
    """Successive shortest paths with Dijkstra over reduced costs.

    Returns (marginals, flow) where marginals is a list of (cost, units)
    batches, one batch per augmenting path, merged when equal and
    nondecreasing in cost; prefix sums of the expansion are the optimal
    costs at every flow value. Stops at max_units (ignored when negative),
    when the sink becomes unreachable, or before applying a path whose cost
    would be >= stop_geq (only when use_stop is true).

    Negative arc costs are allowed only on acyclic networks: initial
    potentials come from a topological-order relaxation.
    """
    m = len(us)
    to = [0] * (2 * m)
    cap = [0] * (2 * m)
    cost = [0] * (2 * m)
    head = [[] for _ in range(n)]
    for i in range(m):
        to[2 * i] = vs[i]
        cap[2 * i] = caps[i]
        cost[2 * i] = costs[i]
        to[2 * i + 1] = us[i]
        cost[2 * i + 1] = -costs[i]
        head[us[i]].append(2 * i)
        head[vs[i]].append(2 * i + 1)

    pot = [0] * n
    if any(c < 0 for c in costs):
        order = _toposort_arcs(n, us, vs, caps)
        dist0 = [INF] * n
        dist0[s] = 0
        succ = [[] for _ in range(n)]
        for i in range(m):
            if caps[i] > 0:
                succ[us[i]].append(i)
        for v in order:
            dv = dist0[v]
            if dv == INF:
                continue
            for i in succ[v]:
                nd = dv + costs[i]
                if nd < dist0[vs[i]]:
                    dist0[vs[i]] = nd
        pot = [d if d < INF else 0 for d in dist0]

    marginals = []
    flow = 0
    while max_units < 0 or flow < max_units:
        dist = [INF] * n
        dist[s] = 0
        prev_edge = [-1] * n
        heap = [(0, s)]
        while heap:
            d, v = heappop(heap)
            if d > dist[v]:
                continue
            pv = pot[v]
            for e in head[v]:
                if cap[e] <= 0:
                    continue
                w = to[e]
                nd = d + cost[e] + pv - pot[w]
                if nd < dist[w]:
                    dist[w] = nd
                    prev_edge[w] = e
                    heappush(heap, (nd, w))
        if dist[t] == INF:
            break
        marginal = dist[t] + pot[t]
        if use_stop and marginal >= stop_geq:
            break
        bottleneck = INF if max_units < 0 else max_units - flow
        v = t
        while v != s:
            e = prev_edge[v]
            if cap[e] < bottleneck:
                bottleneck = cap[e]
            v = to[e ^ 1]
        v = t
        while v != s:
            e = prev_edge[v]
            cap[e] -= bottleneck
            cap[e ^ 1] += bottleneck
            v = to[e ^ 1]
        flow += bottleneck
        if marginals and marginals[-1][0] == marginal:
            marginals[-1] = (marginal, marginals[-1][1] + bottleneck)
        else:
            marginals.append((marginal, bottleneck))
        for v in range(n):
            if dist[v] < INF:
                pot[v] += dist[v]
    return marginals, flow


def _toposort_arcs(n, us, vs, caps):
    indeg = [0] * n
    succ = [[] for _ in range(n)]
    for u, v, c in zip(us, vs, caps):
        if c > 0:
            succ[u].append(v)
            indeg[v] += 1
    order = [v for v in range(n) if indeg[v] == 0]
    for v in order:
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
    if len(order) != n:
        raise ValueError("negative-cost arcs require an acyclic network")
    return order
