# cython: language_level=3
"""Compiled flow kernels; mirrors posetlab._kernels_py function for function.

Capacities/costs must fit 64-bit arithmetic (the dispatch layer in
posetlab.kernels guarantees this); results are identical to the pure backend.
"""

from cpython cimport array

import array as _array

cdef long long INF = <long long> 1 << 62
cdef array.array _INT = _array.array("i", [])
cdef array.array _LL = _array.array("q", [])


def dinic(n, us, vs, caps, s, t):
    """Maximum flow. Returns (value, source_side) where source_side lists the
    nodes reachable from s in the final residual graph."""
    cdef Py_ssize_t m = len(us)
    cdef int nn = n, si = s, ti = t
    cdef array.array to_a = array.clone(_INT, 2 * m + 1, False)
    cdef array.array cap_a = array.clone(_LL, 2 * m + 1, True)
    cdef array.array off_a = array.clone(_INT, nn + 1, True)
    cdef array.array adj_a = array.clone(_INT, 2 * m + 1, False)
    cdef array.array fill_a = array.clone(_INT, nn, True)
    cdef array.array level_a = array.clone(_INT, nn, False)
    cdef array.array queue_a = array.clone(_INT, nn, False)
    cdef array.array it_a = array.clone(_INT, nn, False)
    cdef array.array path_a = array.clone(_INT, nn + 1, False)
    cdef int[::1] to = to_a
    cdef long long[::1] cap = cap_a
    cdef int[::1] off = off_a
    cdef int[::1] adj = adj_a
    cdef int[::1] fill = fill_a
    cdef int[::1] level = level_a
    cdef int[::1] queue = queue_a
    cdef int[::1] it = it_a
    cdef int[::1] path = path_a

    cdef Py_ssize_t i
    cdef int u, v, w, e, qh, qt, plen, advanced
    cdef long long aug, flow = 0

    for i in range(m):
        u = us[i]
        v = vs[i]
        to[2 * i] = v
        cap[2 * i] = caps[i]
        to[2 * i + 1] = u
        off[u + 1] += 1
        off[v + 1] += 1
    for i in range(nn):
        off[i + 1] += off[i]
    for i in range(m):
        u = us[i]
        v = vs[i]
        adj[off[u] + fill[u]] = 2 * i
        fill[u] += 1
        adj[off[v] + fill[v]] = 2 * i + 1
        fill[v] += 1

    while True:
        for i in range(nn):
            level[i] = -1
        level[si] = 0
        queue[0] = si
        qh = 0
        qt = 1
        while qh < qt:
            v = queue[qh]
            qh += 1
            for i in range(off[v], off[v + 1]):
                e = adj[i]
                w = to[e]
                if cap[e] > 0 and level[w] < 0:
                    level[w] = level[v] + 1
                    queue[qt] = w
                    qt += 1
        if level[ti] < 0:
            break
        for i in range(nn):
            it[i] = off[i]
        while True:
            plen = 0
            v = si
            aug = 0
            while True:
                if v == ti:
                    aug = INF
                    for i in range(plen):
                        e = path[i]
                        if cap[e] < aug:
                            aug = cap[e]
                    break
                advanced = 0
                while it[v] < off[v + 1]:
                    e = adj[it[v]]
                    w = to[e]
                    if cap[e] > 0 and level[w] == level[v] + 1:
                        path[plen] = e
                        plen += 1
                        v = w
                        advanced = 1
                        break
                    it[v] += 1
                if advanced:
                    continue
                if v == si:
                    break
                plen -= 1
                e = path[plen]
                v = to[e ^ 1]
                it[v] += 1
            if aug == 0:
                break
            for i in range(plen):
                e = path[i]
                cap[e] -= aug
                cap[e ^ 1] += aug
            flow += aug

    # Final reachability = min-cut source side.
    for i in range(nn):
        level[i] = 0
    level[si] = 1
    queue[0] = si
    qh = 0
    qt = 1
    while qh < qt:
        v = queue[qh]
        qh += 1
        for i in range(off[v], off[v + 1]):
            e = adj[i]
            w = to[e]
            if cap[e] > 0 and level[w] == 0:
                level[w] = 1
                queue[qt] = w
                qt += 1
    side = [i for i in range(nn) if level[i]]
    return flow, side


def ssp(n, us, vs, caps, costs, s, t, max_units, stop_geq, use_stop):
    """Successive shortest paths with Dijkstra over reduced costs; see the
    pure backend for the full contract."""
    cdef Py_ssize_t m = len(us)
    cdef int nn = n, si = s, ti = t
    cdef long long mu = max_units
    cdef long long stop = stop_geq
    cdef int ustop = 1 if use_stop else 0

    cdef array.array to_a = array.clone(_INT, 2 * m + 1, False)
    cdef array.array cap_a = array.clone(_LL, 2 * m + 1, True)
    cdef array.array cost_a = array.clone(_LL, 2 * m + 1, True)
    cdef array.array off_a = array.clone(_INT, nn + 1, True)
    cdef array.array adj_a = array.clone(_INT, 2 * m + 1, False)
    cdef array.array fill_a = array.clone(_INT, nn, True)
    cdef array.array pot_a = array.clone(_LL, nn, True)
    cdef array.array dist_a = array.clone(_LL, nn, False)
    cdef array.array prev_a = array.clone(_INT, nn, False)
    cdef array.array heap_a = array.clone(_LL, 2 * m + 16, False)
    cdef array.array work_a = array.clone(_INT, nn, True)
    cdef int[::1] to = to_a
    cdef long long[::1] cap = cap_a
    cdef long long[::1] cost = cost_a
    cdef int[::1] off = off_a
    cdef int[::1] adj = adj_a
    cdef int[::1] fill = fill_a
    cdef long long[::1] pot = pot_a
    cdef long long[::1] dist = dist_a
    cdef int[::1] prev_edge = prev_a
    cdef long long[::1] heap = heap_a
    cdef int[::1] work = work_a

    cdef Py_ssize_t i, hn, child, parent, pos
    cdef int u, v, w, e, qh, qt, has_negative = 0
    cdef long long c, d, nd, key, marginal, bottleneck, flow = 0

    for i in range(m):
        u = us[i]
        v = vs[i]
        c = costs[i]
        if c < 0:
            has_negative = 1
        to[2 * i] = v
        cap[2 * i] = caps[i]
        cost[2 * i] = c
        to[2 * i + 1] = u
        cost[2 * i + 1] = -c
        off[u + 1] += 1
        off[v + 1] += 1
    for i in range(nn):
        off[i + 1] += off[i]
    for i in range(m):
        u = us[i]
        v = vs[i]
        adj[off[u] + fill[u]] = 2 * i
        fill[u] += 1
        adj[off[v] + fill[v]] = 2 * i + 1
        fill[v] += 1

    if has_negative:
        # Topological-order relaxation from s gives valid initial potentials
        # on acyclic networks (work = in-degree over cap>0 arcs).
        for i in range(m):
            if caps[i] > 0:
                work[vs[i]] += 1
        qt = 0
        for i in range(nn):
            if work[i] == 0:
                fill[qt] = i
                qt += 1
        qh = 0
        while qh < qt:
            v = fill[qh]
            qh += 1
            for i in range(off[v], off[v + 1]):
                e = adj[i]
                if e & 1 or cap[e] <= 0:
                    continue
                w = to[e]
                work[w] -= 1
                if work[w] == 0:
                    fill[qt] = w
                    qt += 1
        if qt != nn:
            raise ValueError("negative-cost arcs require an acyclic network")
        for i in range(nn):
            dist[i] = INF
        dist[si] = 0
        for pos in range(nn):
            v = fill[pos]
            d = dist[v]
            if d == INF:
                continue
            for i in range(off[v], off[v + 1]):
                e = adj[i]
                if e & 1 or cap[e] <= 0:
                    continue
                w = to[e]
                nd = d + cost[e]
                if nd < dist[w]:
                    dist[w] = nd
        for i in range(nn):
            pot[i] = dist[i] if dist[i] < INF else 0

    marginals = []
    while mu < 0 or flow < mu:
        for i in range(nn):
            dist[i] = INF
            prev_edge[i] = -1
        dist[si] = 0
        heap[0] = <long long> si
        hn = 1
        while hn:
            key = heap[0]
            hn -= 1
            heap[0] = heap[hn]
            pos = 0
            while True:
                child = 2 * pos + 1
                if child >= hn:
                    break
                if child + 1 < hn and heap[child + 1] < heap[child]:
                    child += 1
                if heap[child] < heap[pos]:
                    heap[pos], heap[child] = heap[child], heap[pos]
                    pos = child
                else:
                    break
            d = key >> 21
            v = <int> (key & 0x1FFFFF)
            if d > dist[v]:
                continue
            for i in range(off[v], off[v + 1]):
                e = adj[i]
                if cap[e] <= 0:
                    continue
                w = to[e]
                nd = d + cost[e] + pot[v] - pot[w]
                if nd < dist[w]:
                    dist[w] = nd
                    prev_edge[w] = e
                    heap[hn] = (nd << 21) | w
                    pos = hn
                    hn += 1
                    while pos > 0:
                        parent = (pos - 1) >> 1
                        if heap[pos] < heap[parent]:
                            heap[pos], heap[parent] = heap[parent], heap[pos]
                            pos = parent
                        else:
                            break
        if dist[ti] == INF:
            break
        marginal = dist[ti] + pot[ti]
        if ustop and marginal >= stop:
            break
        bottleneck = INF if mu < 0 else mu - flow
        v = ti
        while v != si:
            e = prev_edge[v]
            if cap[e] < bottleneck:
                bottleneck = cap[e]
            v = to[e ^ 1]
        v = ti
        while v != si:
            e = prev_edge[v]
            cap[e] -= bottleneck
            cap[e ^ 1] += bottleneck
            v = to[e ^ 1]
        flow += bottleneck
        if marginals and marginals[-1][0] == marginal:
            marginals[-1] = (marginal, marginals[-1][1] + bottleneck)
        else:
            marginals.append((marginal, bottleneck))
        for i in range(nn):
            if dist[i] < INF:
                pot[i] += dist[i]
    return marginals, flow
