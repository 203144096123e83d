"""Compiled inner loops.

Everything here works on flat int64 arrays so the callers in
``counting``/``oracle`` can keep a plain Python surface.  Edge ids use the
colex convention of :mod:`edgeorder.graph`.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def edge_id(u, v):
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


@njit(cache=True)
def next_permutation(a):
    """Advance ``a`` to the next lexicographic permutation in place."""
    i = a.shape[0] - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = a.shape[0] - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    lo = i + 1
    hi = a.shape[0] - 1
    while lo < hi:
        a[lo], a[hi] = a[hi], a[lo]
        lo += 1
        hi -= 1
    return True


@njit(cache=True)
def count_paths_dp(n, eu, ev, skip, table):
    """Number of increasing directed Hamiltonian paths.

    ``eu[i], ev[i]`` are the endpoints of the edge of rank ``i + 1``;
    edges with ``skip[i]`` set are never used.  ``table`` is scratch space
    of shape ``(2**n, n)``; entry ``[mask, v]`` counts increasing paths on
    vertex set ``mask`` ending at ``v`` using only edges seen so far.
    """
    table[:, :] = 0
    for v in range(n):
        table[1 << v, v] = 1
    full = (1 << n) - 1
    for i in range(eu.shape[0]):
        if skip[i]:
            continue
        u = eu[i]
        v = ev[i]
        bu = 1 << u
        bv = 1 << v
        # reads (mask, u) with v not in mask and (mask, v) with u not in mask;
        # writes land on masks containing both, so one pass is snapshot-safe
        for mask in range(full + 1):
            if mask & bu and not mask & bv:
                t = table[mask, u]
                if t:
                    table[mask | bv, v] += t
            elif mask & bv and not mask & bu:
                t = table[mask, v]
                if t:
                    table[mask | bu, u] += t
    total = 0
    for v in range(n):
        total += table[full, v]
    return total


@njit(cache=True)
def _fill_endpoints(order, pair_u, pair_v, eu, ev):
    for i in range(order.shape[0]):
        eu[i] = pair_u[order[i]]
        ev[i] = pair_v[order[i]]


@njit(cache=True)
def exhaustive_xy(n, pair_u, pair_v, p0_edges, max_k):
    """Histograms of X and Y over every edge ordering of K_n.

    Y is X evaluated on the ordering where the ranks held by ``p0_edges``
    are re-sorted along the path.
    """
    m = pair_u.shape[0]
    hist_x = np.zeros(max_k + 1, dtype=np.int64)
    hist_y = np.zeros(max_k + 1, dtype=np.int64)
    order = np.arange(m)
    mod = np.empty(m, dtype=np.int64)
    eu = np.empty(m, dtype=np.int64)
    ev = np.empty(m, dtype=np.int64)
    skip = np.zeros(m, dtype=np.bool_)
    table = np.zeros((1 << n, n), dtype=np.int64)
    L = p0_edges.shape[0]
    is_p0 = np.zeros(m, dtype=np.bool_)
    for e in p0_edges:
        is_p0[e] = True
    pos = np.empty(L, dtype=np.int64)
    while True:
        _fill_endpoints(order, pair_u, pair_v, eu, ev)
        hist_x[count_paths_dp(n, eu, ev, skip, table)] += 1
        c = 0
        for i in range(m):
            mod[i] = order[i]
            if is_p0[order[i]]:
                pos[c] = i
                c += 1
        # pos is already increasing: assign P0 edges to those slots in path order
        for t in range(L):
            mod[pos[t]] = p0_edges[t]
        _fill_endpoints(mod, pair_u, pair_v, eu, ev)
        hist_y[count_paths_dp(n, eu, ev, skip, table)] += 1
        if not next_permutation(order):
            break
    return hist_x, hist_y


@njit(cache=True)
def chain_extensions(A, B, C, posA, posB, posC, dp):
    """Linear extensions of the union of up to three chains.

    ``pos*[e]`` is the index of element ``e`` in that chain or -1.  A shared
    element is emitted once, from the first chain (A before B before C)
    that contains it, and only when every chain containing it is at it.
    """
    LA = A.shape[0]
    LB = B.shape[0]
    LC = C.shape[0]
    for i in range(LA + 1):
        for j in range(LB + 1):
            for k in range(LC + 1):
                dp[i, j, k] = 0
    dp[0, 0, 0] = 1
    for i in range(LA + 1):
        for j in range(LB + 1):
            for k in range(LC + 1):
                val = dp[i, j, k]
                if val == 0:
                    continue
                if i < LA:
                    x = A[i]
                    nj = j
                    nk = k
                    ok = True
                    if posB[x] >= 0:
                        if posB[x] == j:
                            nj = j + 1
                        else:
                            ok = False
                    if ok and posC[x] >= 0:
                        if posC[x] == k:
                            nk = k + 1
                        else:
                            ok = False
                    if ok:
                        dp[i + 1, nj, nk] += val
                if j < LB:
                    y = B[j]
                    if posA[y] < 0:
                        if posC[y] < 0:
                            dp[i, j + 1, k] += val
                        elif posC[y] == k:
                            dp[i, j + 1, k + 1] += val
                if k < LC:
                    z = C[k]
                    if posA[z] < 0 and posB[z] < 0:
                        dp[i, j, k + 1] += val
    return dp[LA, LB, LC]


@njit(cache=True)
def _path_to_edges(perm, out, pos):
    L = perm.shape[0] - 1
    for i in range(L):
        e = edge_id(perm[i], perm[i + 1])
        out[i] = e
        pos[e] = i


@njit(cache=True)
def _clear(pos, edges):
    for e in edges:
        pos[e] = -1


@njit(cache=True)
def tuple_extension_totals(n, k, restriction):
    """Sum of linear-extension counts over partner path tuples, by union size.

    A is the identity path; B (and C when ``k == 3``) range over all n!
    directed Hamiltonian paths.  ``restriction``: 0 none, 1 C edge-disjoint
    from A, 2 both B and C edge-disjoint from A.  Returns ``totals`` with
    ``totals[u]`` the summed extension count over tuples whose edge union
    has ``u`` edges.
    """
    L = n - 1
    m = n * (n - 1) // 2
    A = np.empty(L, dtype=np.int64)
    posA = -np.ones(m, dtype=np.int64)
    ident = np.arange(n)
    _path_to_edges(ident, A, posA)
    B = np.empty(L, dtype=np.int64)
    C = np.empty(L if k == 3 else 0, dtype=np.int64)
    posB = -np.ones(m, dtype=np.int64)
    posC = -np.ones(m, dtype=np.int64)
    dp = np.zeros((L + 1, L + 1, L + 1), dtype=np.int64)
    totals = np.zeros(3 * L + 1, dtype=np.int64)
    pb = np.arange(n)
    while True:
        _path_to_edges(pb, B, posB)
        ab = 0
        for e in B:
            if posA[e] >= 0:
                ab += 1
        if not (restriction == 2 and ab > 0):
            if k == 2:
                totals[2 * L - ab] += chain_extensions(A, B, C, posA, posB, posC, dp)
            else:
                pc = np.arange(n)
                while True:
                    _path_to_edges(pc, C, posC)
                    ac = 0
                    bc = 0
                    abc = 0
                    for e in C:
                        if posA[e] >= 0:
                            ac += 1
                            if posB[e] >= 0:
                                abc += 1
                        if posB[e] >= 0:
                            bc += 1
                    if not (restriction >= 1 and ac > 0):
                        u = 3 * L - ab - ac - bc + abc
                        totals[u] += chain_extensions(A, B, C, posA, posB, posC, dp)
                    _clear(posC, C)
                    if not next_permutation(pc):
                        break
        _clear(posB, B)
        if not next_permutation(pb):
            break
    return totals


@njit(cache=True)
def count_adjacency_free(n):
    """Permutations of range(n) with no two consecutive values adjacent."""
    p = np.arange(n)
    count = 0
    while True:
        ok = True
        for i in range(n - 1):
            d = p[i] - p[i + 1]
            if d == 1 or d == -1:
                ok = False
                break
        if ok:
            count += 1
        if not next_permutation(p):
            break
    return count
