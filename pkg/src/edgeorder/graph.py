"""Vertex/edge indexing of K_n, edge orderings and Hamiltonian paths.

Edges of K_n are identified by a dense colexicographic index: the pair
``{u, v}`` with ``u < v`` maps to ``v * (v - 1) // 2 + u``.  An
:class:`EdgeOrdering` stores the rank (1-based) of every edge together with
its inverse.  Paths are plain tuples of vertex ids, read as directed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

HamPath = tuple[int, ...]


def num_edges(n: int) -> int:
    return n * (n - 1) // 2


def edge_index(u: int, v: int, n: int) -> int:
    """Colex index of the unordered pair ``{u, v}`` in K_n."""
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"vertex out of range for n={n}: ({u}, {v})")
    if u == v:
        raise ValueError(f"loop edge ({u}, {v}) is not an edge of K_n")
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def edge_pair(e: int) -> tuple[int, int]:
    """Inverse of :func:`edge_index`; returns ``(u, v)`` with ``u < v``."""
    if e < 0:
        raise ValueError(f"negative edge id {e}")
    v = (1 + math.isqrt(8 * e + 1)) // 2
    # isqrt rounding can overshoot by one at triangular boundaries
    while v * (v - 1) // 2 > e:
        v -= 1
    return e - v * (v - 1) // 2, v


def check_path(p: Sequence[int], n: int) -> HamPath:
    """Validate a directed Hamiltonian path of K_n and return it as a tuple."""
    path = tuple(int(v) for v in p)
    if len(path) != n:
        raise ValueError(f"path has {len(path)} vertices, expected {n}")
    if sorted(path) != list(range(n)):
        raise ValueError(f"path {path} is not a permutation of range({n})")
    return path


def path_edges(p: Sequence[int]) -> list[int]:
    """Edge ids of a path (or any vertex walk) in traversal order."""
    n = max(p, default=0) + 1
    return [edge_index(p[i], p[i + 1], n) for i in range(len(p) - 1)]


def identity_path(n: int) -> HamPath:
    return tuple(range(n))


@dataclass(frozen=True)
class EdgeOrdering:
    """A bijection from the edges of K_n to ranks ``1..n(n-1)/2``.

    ``rank[e]`` is the rank of edge ``e``; ``order[r - 1]`` is the edge of
    rank ``r``.  Both arrays are read-only.
    """

    n: int
    rank: np.ndarray = field(repr=False)
    order: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        m = num_edges(self.n)
        rank = np.asarray(self.rank, dtype=np.int64)
        order = np.asarray(self.order, dtype=np.int64)
        if rank.shape != (m,) or order.shape != (m,):
            raise ValueError(f"expected {m} edges for n={self.n}")
        if not np.array_equal(np.sort(order), np.arange(m)):
            raise ValueError("order is not a permutation of the edge ids")
        if not np.array_equal(rank[order], np.arange(1, m + 1)):
            raise ValueError("rank and order are not mutually inverse")
        rank.setflags(write=False)
        order.setflags(write=False)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "order", order)

    @classmethod
    def from_order(cls, n: int, order: Iterable[int]) -> "EdgeOrdering":
        """Build from the list of edge ids sorted by increasing rank."""
        order = np.asarray(list(order), dtype=np.int64)
        rank = np.empty_like(order)
        rank[order] = np.arange(1, len(order) + 1)
        return cls(n, rank, order)

    @classmethod
    def from_ranks(cls, n: int, rank: Iterable[int]) -> "EdgeOrdering":
        """Build from ``rank[e]`` for every edge id ``e``."""
        rank = np.asarray(list(rank), dtype=np.int64)
        order = np.empty_like(rank)
        order[rank - 1] = np.arange(len(rank))
        return cls(n, rank, order)

    @property
    def m(self) -> int:
        return num_edges(self.n)

    def rank_of(self, u: int, v: int) -> int:
        return int(self.rank[edge_index(u, v, self.n)])

    def is_increasing(self, p: Sequence[int]) -> bool:
        r = [self.rank[e] for e in path_edges(p)]
        return all(a < b for a, b in zip(r, r[1:]))

    def ordered_pairs(self) -> np.ndarray:
        """``(m, 2)`` array of edge endpoints in increasing rank."""
        return np.array([edge_pair(int(e)) for e in self.order], dtype=np.int64).reshape(-1, 2)

    def __eq__(self, other):
        if not isinstance(other, EdgeOrdering):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.order, other.order)

    def __hash__(self):
        return hash((self.n, self.order.tobytes()))


@dataclass(frozen=True)
class Rng:
    """Seed plus substream index for a reproducible numpy generator.

    The generator is PCG64 seeded from ``SeedSequence(seed,
    spawn_key=(stream,))``, so every ``(seed, stream)`` pair yields an
    independent, bitwise-reproducible stream of draws.
    """

    seed: int
    stream: int = 0

    def __post_init__(self):
        if not (0 <= self.seed < 2**64):
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.stream < 0:
            raise ValueError(f"stream must be non-negative, got {self.stream}")

    def generator(self) -> np.random.Generator:
        ss = np.random.SeedSequence(self.seed, spawn_key=(self.stream,))
        return np.random.Generator(np.random.PCG64(ss))


def _as_generator(rng) -> np.random.Generator:
    if isinstance(rng, Rng):
        return rng.generator()
    if isinstance(rng, np.random.Generator):
        return rng
    return Rng(int(rng)).generator()


def sample_uniform_ordering(n: int, rng) -> EdgeOrdering:
    """Uniformly random edge ordering of K_n (Fisher-Yates via numpy)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    gen = _as_generator(rng)
    return EdgeOrdering.from_order(n, gen.permutation(num_edges(n)))


def sample_uniform_path(n: int, rng) -> HamPath:
    gen = _as_generator(rng)
    return tuple(int(v) for v in gen.permutation(n))


def ccs_ordering(d: int) -> EdgeOrdering:
    """XOR edge ordering of K_{2^d}.

    Edges are sorted by the XOR of their endpoints; ties inside an XOR class
    follow the canonical ``(min, max)`` pair order.
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    n = 1 << d
    pairs = [(u ^ v, u, v) for v in range(n) for u in range(v)]
    pairs.sort()
    return EdgeOrdering.from_order(n, [edge_index(u, v, n) for _, u, v in pairs])
