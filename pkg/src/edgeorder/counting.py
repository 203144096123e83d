"""Exact counting of increasing Hamiltonian paths, altitude and trails."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from . import _kernels
from .graph import EdgeOrdering, HamPath, edge_pair, num_edges

# int64 tables are exact while n! < 2**63, i.e. up to n = 20
MAX_COUNT_N = 20
MAX_SEARCH_N = 12


class CapacityError(ValueError):
    """Raised when n exceeds what an exact routine supports."""


@dataclass(frozen=True)
class CountResult:
    value: int
    n: int

    def __int__(self):
        return self.value


@dataclass(frozen=True)
class AltitudeResult:
    length: int
    witness: Optional[HamPath] = None


@lru_cache(maxsize=None)
def _pair_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    pairs = np.array([edge_pair(e) for e in range(num_edges(n))], dtype=np.int64)
    return pairs[:, 0].copy(), pairs[:, 1].copy()


@lru_cache(maxsize=4)
def _scratch(n: int) -> np.ndarray:
    return np.zeros((1 << n, n), dtype=np.int64)


def _count(o: EdgeOrdering, forbidden: Iterable[int] = ()) -> int:
    n = o.n
    if n > MAX_COUNT_N:
        raise CapacityError(f"exact counting supports n <= {MAX_COUNT_N}, got n={n}")
    pu, pv = _pair_arrays(n)
    order = np.asarray(o.order)
    skip = np.zeros(o.m, dtype=np.bool_)
    forbidden = list(forbidden)
    if forbidden:
        skip[np.asarray(o.rank)[forbidden] - 1] = True
    return int(_kernels.count_paths_dp(n, pu[order], pv[order], skip, _scratch(n)))


def count_increasing_ham_paths(o: EdgeOrdering) -> CountResult:
    """X: the number of directed Hamiltonian paths with increasing edge ranks.

    Subset DP over ``(vertex set, endpoint)`` with edges fed in rank order,
    so the "last edge is lower" condition is enforced by processing order.
    """
    return CountResult(_count(o), o.n)


def count_increasing_avoiding(o: EdgeOrdering, forbidden: Iterable[int]) -> CountResult:
    """Increasing Hamiltonian paths that use none of the ``forbidden`` edge ids."""
    return CountResult(_count(o, forbidden), o.n)


def _adjacency_by_rank(o: EdgeOrdering) -> list[list[tuple[int, int]]]:
    """Per vertex, ``(rank, neighbour)`` pairs sorted by rank."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(o.n)]
    for e in range(o.m):
        u, v = edge_pair(e)
        r = int(o.rank[e])
        adj[u].append((r, v))
        adj[v].append((r, u))
    for lst in adj:
        lst.sort()
    return adj


def exact_altitude(o: EdgeOrdering) -> AltitudeResult:
    """Length of the longest increasing self-avoiding path, with a witness.

    Depth-first search over increasing extensions; a branch is cut when the
    unvisited vertices cannot lift it past the incumbent.
    """
    n = o.n
    if n > MAX_SEARCH_N:
        raise CapacityError(f"exact altitude supports n <= {MAX_SEARCH_N}, got n={n}")
    adj = _adjacency_by_rank(o)
    best_len = 0
    best_path: list[int] = []
    path: list[int] = []
    visited = [False] * n

    def dfs(v: int, last: int, length: int) -> bool:
        nonlocal best_len, best_path
        if length > best_len:
            best_len = length
            best_path = path.copy()
            if best_len == n - 1:
                return True
        if length + (n - len(path)) <= best_len:
            return False
        for r, w in adj[v]:
            if r <= last or visited[w]:
                continue
            visited[w] = True
            path.append(w)
            done = dfs(w, r, length + 1)
            path.pop()
            visited[w] = False
            if done:
                return True
        return False

    for s in range(n):
        visited[s] = True
        path.append(s)
        done = dfs(s, 0, 0)
        path.pop()
        visited[s] = False
        if done:
            break
    return AltitudeResult(best_len, tuple(best_path))


def longest_increasing_trail(o: EdgeOrdering) -> int:
    """Longest increasing trail via the vertex-label sweep over ranks."""
    f = [0] * o.n
    for e in o.order:
        u, v = edge_pair(int(e))
        fu, fv = f[u], f[v]
        f[u] = max(fu, fv + 1)
        f[v] = max(fv, fu + 1)
    return max(f)


def enumerate_increasing_ham_paths(o: EdgeOrdering, cap: Optional[int] = None) -> list[HamPath]:
    """All increasing directed Hamiltonian paths (up to ``cap``).

    Paths come out in lexicographic order of their vertex sequences.
    """
    n = o.n
    if n > MAX_SEARCH_N:
        raise CapacityError(f"path enumeration supports n <= {MAX_SEARCH_N}, got n={n}")
    if cap is not None and cap <= 0:
        return []
    rank = o.rank
    out: list[HamPath] = []
    path: list[int] = []
    visited = [False] * n

    def extend(v: int, last: int) -> bool:
        if len(path) == n:
            out.append(tuple(path))
            return cap is not None and len(out) >= cap
        for w in range(n):
            if visited[w]:
                continue
            r = rank[(max(v, w) * (max(v, w) - 1)) // 2 + min(v, w)]
            if r <= last:
                continue
            visited[w] = True
            path.append(w)
            stop = extend(w, r)
            path.pop()
            visited[w] = False
            if stop:
                return True
        return False

    for s in range(n):
        visited[s] = True
        path.append(s)
        stop = extend(s, 0)
        path.pop()
        visited[s] = False
        if stop:
            break
    return out
