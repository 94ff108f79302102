"""Hot inner loops over dense uint8 adjacency matrices.

Every kernel is a plain-loop function compiled with numba's @njit by
default. Setting EQUIPART_PURE=1 (or running without numba installed)
selects the identical pure-Python/numpy path instead; benchmarks/ compares
the two. Desk-scale graphs (n <= 62) make dense matrices the simplest
representation that both paths share.
"""

from __future__ import annotations

import os

import numpy as np


def _want_pure() -> bool:
    return os.environ.get("EQUIPART_PURE", "").strip() not in ("", "0")


if _want_pure():
    USE_NUMBA = False
else:
    try:
        from numba import njit as _njit

        USE_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USE_NUMBA = False


def _jit(fn):
    if USE_NUMBA:
        return _njit(cache=True)(fn)
    return fn


@_jit
def degeneracy_peel(adj):
    """Min-degree peeling. Returns (degeneracy, removal order).

    Ties break toward the lowest vertex id, so the order is canonical.
    """
    n = adj.shape[0]
    deg = np.zeros(n, dtype=np.int64)
    for i in range(n):
        s = 0
        for j in range(n):
            s += adj[i, j]
        deg[i] = s
    alive = np.ones(n, dtype=np.uint8)
    order = np.empty(n, dtype=np.int64)
    d = 0
    for t in range(n):
        best = -1
        for v in range(n):
            if alive[v] and (best == -1 or deg[v] < deg[best]):
                best = v
        if deg[best] > d:
            d = deg[best]
        order[t] = best
        alive[best] = 0
        for u in range(n):
            if alive[u] and adj[best, u]:
                deg[u] -= 1
    return d, order


@_jit
def peel_above(adj, d):
    """Repeatedly delete vertices of current degree <= d.

    Returns the alive mask of the remainder: non-empty iff the graph is not
    d-degenerate, and the remainder then induces minimum degree > d.
    """
    n = adj.shape[0]
    deg = np.zeros(n, dtype=np.int64)
    for i in range(n):
        s = 0
        for j in range(n):
            s += adj[i, j]
        deg[i] = s
    alive = np.ones(n, dtype=np.uint8)
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if alive[v] and deg[v] <= d:
                alive[v] = 0
                changed = True
                for u in range(n):
                    if alive[u] and adj[v, u]:
                        deg[u] -= 1
    return alive


@_jit
def find_triangle(adj):
    """Lexicographically first triangle (i, j, k), or (-1, -1, -1)."""
    n = adj.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            if adj[i, j]:
                for k in range(j + 1, n):
                    if adj[i, k] and adj[j, k]:
                        return i, j, k
    return -1, -1, -1


@_jit
def edge_elimination(adj):
    """Remove edges one at a time from a low-degree endpoint.

    Each step picks the lowest-id vertex of minimum positive degree; that
    degree must be <= 5 (guaranteed on planar inputs). Returns
    (steps[m, 2], ok) where each row is (v, v1) and ok is 0 if the
    degree bound failed.
    """
    n = adj.shape[0]
    work = adj.copy()
    deg = np.zeros(n, dtype=np.int64)
    m = 0
    for i in range(n):
        s = 0
        for j in range(n):
            s += work[i, j]
        deg[i] = s
        m += s
    m //= 2
    steps = np.empty((m, 2), dtype=np.int64)
    for t in range(m):
        v = -1
        for u in range(n):
            if deg[u] > 0 and (v == -1 or deg[u] < deg[v]):
                v = u
        if deg[v] > 5:
            return steps, 0
        v1 = -1
        for u in range(n):
            if work[v, u]:
                v1 = u
                break
        steps[t, 0] = v
        steps[t, 1] = v1
        work[v, v1] = 0
        work[v1, v] = 0
        deg[v] -= 1
        deg[v1] -= 1
    return steps, 1


@_jit
def replay_parts(n, steps, assign0, nparts, cap):
    """Rebuild the graph edge by edge, keeping every part ``cap``-degenerate.

    steps is an edge-elimination log; it is replayed in reverse from the
    edgeless graph with the initial assignment assign0. When re-adding an
    edge whose low endpoint v lands with more than ``cap`` neighbors inside
    its own part, v is swapped with the lowest-id vertex w of another part
    (parts scanned in ascending index) that has at most ``cap`` neighbors
    in v's part minus v. Returns (assign, trace[:, 4], ntrace, ok); trace
    rows are (step_index, v, w, w_part) and ok is 0 if no swap partner
    existed (non-planar input).
    """
    m = steps.shape[0]
    cur = np.zeros((n, n), dtype=np.uint8)
    assign = assign0.copy()
    trace = np.empty((m, 4), dtype=np.int64)
    ntrace = 0
    for t in range(m - 1, -1, -1):
        v = steps[t, 0]
        v1 = steps[t, 1]
        cur[v, v1] = 1
        cur[v1, v] = 1
        p = assign[v]
        if assign[v1] != p:
            continue
        inside = 0
        for u in range(n):
            if u != v and assign[u] == p and cur[v, u]:
                inside += 1
        if inside <= cap:
            continue
        found = False
        for q in range(nparts):
            if q == p:
                continue
            for w in range(n):
                if assign[w] != q:
                    continue
                cnt = 0
                for u in range(n):
                    if u != v and assign[u] == p and cur[w, u]:
                        cnt += 1
                if cnt <= cap:
                    assign[v] = q
                    assign[w] = p
                    trace[ntrace, 0] = t
                    trace[ntrace, 1] = v
                    trace[ntrace, 2] = w
                    trace[ntrace, 3] = q
                    ntrace += 1
                    found = True
                    break
            if found:
                break
        if not found:
            return assign, trace, ntrace, 0
    return assign, trace, ntrace, 1


@_jit
def trifree_elimination(adj):
    """Peel a triangle-free planar graph down to nothing.

    Prefers the lowest-id vertex of degree <= 2; otherwise removes the
    lexicographically first edge (u, v) with deg(u) = 3 and deg(v) <= 6
    together with both endpoints. Returns (steps[:, 3], nsteps, ok) where a
    row is (kind, a, b): kind 0 removes vertex a, kind 1 removes edge (a, b)
    with both endpoints. ok is 0 when neither move exists, which cannot
    happen on triangle-free planar inputs.
    """
    n = adj.shape[0]
    work = adj.copy()
    deg = np.zeros(n, dtype=np.int64)
    for i in range(n):
        s = 0
        for j in range(n):
            s += work[i, j]
        deg[i] = s
    alive = np.ones(n, dtype=np.uint8)
    steps = np.empty((n, 3), dtype=np.int64)
    nsteps = 0
    remaining = n
    while remaining > 0:
        v = -1
        for u in range(n):
            if alive[u] and deg[u] <= 2:
                v = u
                break
        if v >= 0:
            steps[nsteps, 0] = 0
            steps[nsteps, 1] = v
            steps[nsteps, 2] = -1
            nsteps += 1
            alive[v] = 0
            remaining -= 1
            for u in range(n):
                if alive[u] and work[v, u]:
                    deg[u] -= 1
                work[v, u] = 0
                work[u, v] = 0
            continue
        pu = -1
        pv = -1
        for u in range(n):
            if alive[u] and deg[u] == 3:
                for w in range(n):
                    if work[u, w] and deg[w] <= 6:
                        pu = u
                        pv = w
                        break
                if pu >= 0:
                    break
        if pu < 0:
            return steps, nsteps, 0
        steps[nsteps, 0] = 1
        steps[nsteps, 1] = pu
        steps[nsteps, 2] = pv
        nsteps += 1
        for x in (pu, pv):
            alive[x] = 0
            remaining -= 1
            for u in range(n):
                if alive[u] and work[x, u]:
                    deg[u] -= 1
                work[x, u] = 0
                work[u, x] = 0
    return steps, nsteps, 1


@_jit
def trifree_replay(adj, steps, nsteps):
    """Re-insert vertices in reverse peel order, keeping both parts small.

    A degree-<=2 vertex goes to the smaller part (ties to part 0). For an
    edge step (u, v), v goes to the lowest-index part holding at most two of
    its already-present neighbors and u to the other part. Returns the part
    assignment array.
    """
    n = adj.shape[0]
    present = np.zeros(n, dtype=np.uint8)
    assign = np.full(n, -1, dtype=np.int64)
    size = np.zeros(2, dtype=np.int64)
    for t in range(nsteps - 1, -1, -1):
        kind = steps[t, 0]
        if kind == 0:
            v = steps[t, 1]
            p = 0 if size[0] <= size[1] else 1
            assign[v] = p
            size[p] += 1
            present[v] = 1
        else:
            u = steps[t, 1]
            v = steps[t, 2]
            cnt0 = 0
            cnt1 = 0
            for w in range(n):
                if present[w] and adj[v, w]:
                    if assign[w] == 0:
                        cnt0 += 1
                    else:
                        cnt1 += 1
            pv = 0 if cnt0 <= 2 else 1
            assign[v] = pv
            assign[u] = 1 - pv
            size[pv] += 1
            size[1 - pv] += 1
            present[v] = 1
            present[u] = 1
    return assign


@_jit
def count_edges_within(adj, assign, part):
    """Edges of the induced subgraph on {v : assign[v] == part}."""
    n = adj.shape[0]
    cnt = 0
    for i in range(n):
        if assign[i] != part:
            continue
        for j in range(i + 1, n):
            if assign[j] == part and adj[i, j]:
                cnt += 1
    return cnt


# Undecorated references for the benchmark harness: .py_func is the same
# source the jitted path compiles.
def pure_variant(fn):
    return getattr(fn, "py_func", fn)
