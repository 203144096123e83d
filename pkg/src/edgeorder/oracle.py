"""Exact ground truth by enumeration.

Moments of X are sums over tuples of directed Hamiltonian paths of the
probability that all of them are increasing.  That probability is the
number of linear extensions of the union of the paths' edge chains,
divided by the factorial of the union size.  By symmetry the first path is
fixed to the identity and the sum is multiplied by n!.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .ceg import CegStats, ceg_from_ranks, reduce, stats, stats_record
from .counting import CapacityError, _pair_arrays
from .graph import check_path, identity_path, num_edges, path_edges

MAX_EXHAUSTIVE_N = 5
MAX_SECOND_MOMENT_N = 10
MAX_THIRD_MOMENT_N = 6
MAX_ADJACENCY_N = 11


@dataclass(frozen=True)
class ExtensionCount:
    extensions: int
    union_size: int
    consistent: bool

    @property
    def probability(self) -> Fraction:
        return Fraction(self.extensions, math.factorial(self.union_size))


@dataclass(frozen=True)
class ExactMoment:
    k: int
    n: int
    value: Fraction

    def record(self) -> dict:
        return {"n": self.n, "k": self.k, "numerator": self.value.numerator,
                "denominator": self.value.denominator, "float": float(self.value)}


def _interleavings(chains: Sequence[Sequence[int]], track: Optional[set] = None) -> dict:
    """Linear extensions of a union of chains, optionally split by the order of ``track``.

    Returns a map from the emitted sequence of tracked elements to the
    number of extensions inducing it.  State is the tuple of chain
    positions; a shared element is emitted from the first chain holding it
    and only when every chain holding it is positioned at it.
    """
    pos = [{x: i for i, x in enumerate(ch)} for ch in chains]
    holders = defaultdict(list)
    for c, ch in enumerate(chains):
        for x in ch:
            holders[x].append(c)
    lengths = [len(ch) for ch in chains]
    states = {tuple([0] * len(chains)): Counter({(): 1})}
    # positions only grow, so lexicographic order is a topological order
    for state in itertools.product(*(range(L + 1) for L in lengths)):
        here = states.pop(state, None)
        if here is None:
            continue
        if list(state) == lengths:
            return dict(here)
        for c, ch in enumerate(chains):
            if state[c] == lengths[c]:
                continue
            x = ch[state[c]]
            who = holders[x]
            if who[0] != c or any(pos[d][x] != state[d] for d in who):
                continue
            nxt = list(state)
            for d in who:
                nxt[d] += 1
            bucket = states.setdefault(tuple(nxt), Counter())
            tracked = track is not None and x in track
            for seq, cnt in here.items():
                bucket[seq + (x,) if tracked else seq] += cnt
    return {}


def linear_extensions(*paths: Sequence[int]) -> ExtensionCount:
    """Total orders of the paths' edge union under which every path is increasing."""
    if not 1 <= len(paths) <= 3:
        raise ValueError(f"expected 1 to 3 paths, got {len(paths)}")
    n = len(paths[0])
    chains = [path_edges(check_path(p, n)) for p in paths]
    union = set().union(*chains)
    total = sum(_interleavings(chains).values())
    return ExtensionCount(total, len(union), total > 0)


def increasing_probability(*paths: Sequence[int]) -> Fraction:
    return linear_extensions(*paths).probability


def _weighted_sum(totals: np.ndarray, n: int) -> Fraction:
    s = sum(Fraction(int(t), math.factorial(u)) for u, t in enumerate(totals) if t)
    return s * math.factorial(n)


_RESTRICTIONS = {None: 0, "c_disjoint_a": 1, "bc_disjoint_a": 2}


def exact_moment(n: int, k: int, restriction: Optional[str] = None,
                 allow_n7: bool = False) -> ExactMoment:
    """E X^k as an exact rational, for k in 1..3.

    ``restriction`` (k=3 only) keeps just the triples where C is edge-disjoint
    from A (``"c_disjoint_a"``) or both B and C are (``"bc_disjoint_a"``).
    These give n E[YZ] and n E[Z^2] for the size-bias coupling.
    """
    if k not in (1, 2, 3):
        raise ValueError(f"k must be 1, 2 or 3, got {k}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if restriction not in _RESTRICTIONS:
        raise ValueError(f"unknown restriction {restriction!r}")
    if restriction is not None and k != 3:
        raise ValueError("restrictions apply to k=3 only")
    if k == 1:
        return ExactMoment(1, n, Fraction(n))
    limit = MAX_SECOND_MOMENT_N if k == 2 else MAX_THIRD_MOMENT_N + (1 if allow_n7 else 0)
    if n > limit:
        raise CapacityError(f"exact E X^{k} supports n <= {limit}, got n={n}")
    totals = _kernels.tuple_extension_totals(n, k, _RESTRICTIONS[restriction])
    return ExactMoment(k, n, _weighted_sum(totals, n))


def _exhaustive(n: int, p0: Optional[Sequence[int]]):
    if n > MAX_EXHAUSTIVE_N:
        raise CapacityError(f"exhaustive enumeration supports n <= {MAX_EXHAUSTIVE_N}, got n={n}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    p0 = identity_path(n) if p0 is None else check_path(p0, n)
    pu, pv = _pair_arrays(n)
    hx, hy = _kernels.exhaustive_xy(n, pu, pv, np.array(path_edges(p0), dtype=np.int64),
                                    math.factorial(n))
    as_map = lambda h: {i: int(c) for i, c in enumerate(h) if c}
    return as_map(hx), as_map(hy)


def exhaustive_distribution(n: int) -> dict[int, int]:
    """Histogram of X over all C(n,2)! edge orderings (n <= 5)."""
    return _exhaustive(n, None)[0]


def exhaustive_size_bias(n: int, p0: Optional[Sequence[int]] = None) -> tuple[dict, dict]:
    """Histograms of X and of Y over all orderings, Y built by forcing ``p0`` increasing."""
    return _exhaustive(n, p0)


def histogram_moment(hist: dict[int, int], k: int) -> Fraction:
    total = sum(hist.values())
    return Fraction(sum(c * x**k for x, c in hist.items()), total)


def adjacency_free_fraction(n: int) -> Fraction:
    """E Z / n: the chance a uniform path shares no edge with a fixed one.

    Brute-force filter over all permutations of range(n).
    """
    if n > MAX_ADJACENCY_N:
        raise CapacityError(f"adjacency filter supports n <= {MAX_ADJACENCY_N}, got n={n}")
    return Fraction(int(_kernels.count_adjacency_free(n)), math.factorial(n))


def union_size(n: int, cbar: Sequence[int]) -> int:
    c_ab, c_ac, c_bc, c_abc = cbar
    return 3 * n - 3 - c_ab - c_ac - c_bc - 2 * c_abc


@dataclass
class TnEntry:
    key: tuple
    cbar: tuple[int, int, int, int]
    T: int
    stats: CegStats

    def t(self, n: int) -> Fraction:
        return Fraction(self.T, math.factorial(union_size(n, self.cbar)))


def brute_force_Tn(n: int) -> dict[tuple, TnEntry]:
    """Edge-ordered triple counts per (reduced common edge graph, run totals).

    Every (B, C) is paired with A = identity; extensions are grouped by the
    order they induce on the common edges, which fixes the reduced graph.
    Counts are multiplied by n! for the choice of A.
    """
    if n > MAX_EXHAUSTIVE_N:
        raise CapacityError(f"brute-force T_n supports n <= {MAX_EXHAUSTIVE_N}, got n={n}")
    a = identity_path(n)
    ea = path_edges(a)
    fact = math.factorial(n)
    table: dict[tuple, TnEntry] = {}
    perms = list(itertools.permutations(range(n)))
    for b in perms:
        eb = path_edges(b)
        for c in perms:
            ec = path_edges(c)
            sa, sb, sc = set(ea), set(eb), set(ec)
            common = (sa & sb) | (sa & sc) | (sb & sc)
            for seq, cnt in _interleavings([ea, eb, ec], common).items():
                rank = {e: i + 1 for i, e in enumerate(seq)}
                rg = reduce(ceg_from_ranks((a, b, c), rank))
                st = stats(rg)
                slot = (rg.key(), st.cbar)
                entry = table.get(slot)
                if entry is None:
                    table[slot] = TnEntry(slot[0], st.cbar, cnt * fact, st)
                else:
                    entry.T += cnt * fact
    return table


def tn_total(n: int, table: dict[tuple, TnEntry]) -> Fraction:
    return sum((e.t(n) for e in table.values()), Fraction(0))


def tn_records(n: int, table: dict[tuple, TnEntry]) -> list[dict]:
    out = []
    for e in sorted(table.values(), key=lambda e: (e.cbar, repr(e.key))):
        t = e.t(n)
        out.append({"key": [list(x[:1]) + [list(x[1])] + list(x[2:]) for x in e.key],
                    "cbar": list(e.cbar), "T": e.T, "union_size": union_size(n, e.cbar),
                    "numerator": t.numerator, "denominator": t.denominator, "float": float(t),
                    "stats": stats_record(e.stats)})
    return out
