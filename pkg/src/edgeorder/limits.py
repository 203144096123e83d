"""Closed forms and series: good-graph counts, termwise limits, the bound on
edge-ordered triple counts, succession-free permutations, log-normal
moments and moments of measures built from 1-periodic measures.

Combinatorial quantities are exact integers or Fractions; floats appear
only where the value involves e.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from scipy import integrate

PAIR_LABELS = ("AB", "AC", "BC")


@dataclass(frozen=True)
class GoodClassKey:
    k_AB: int = 0
    k_AC: int = 0
    k_BC: int = 0
    r_AB: int = 0
    r_AC: int = 0
    r_BC: int = 0

    def __post_init__(self):
        for a in PAIR_LABELS:
            k, r = self.k(a), self.r(a)
            if k < 0 or not 0 <= r <= k:
                raise ValueError(f"need 0 <= r_{a} <= k_{a}, got r={r}, k={k}")

    def k(self, label: str) -> int:
        return getattr(self, f"k_{label}")

    def r(self, label: str) -> int:
        return getattr(self, f"r_{label}")

    @property
    def total(self) -> int:
        return self.k_AB + self.k_AC + self.k_BC


def balls(c: int, l: int) -> int:
    """Ways to put c identical balls in l bins, none empty: C(c-1, l-1) with C(-1,-1)=1."""
    if c < 0 or l < 0:
        raise ValueError(f"negative argument: c={c}, l={l}")
    if l == 0:
        return 1 if c == 0 else 0
    if c < l:
        return 0
    return math.comb(c - 1, l - 1)


def multinomial(*parts: int) -> int:
    if any(p < 0 for p in parts):
        raise ValueError(f"negative multinomial part in {parts}")
    out, acc = 1, 0
    for p in parts:
        acc += p
        out *= math.comb(acc, p)
    return out


def good_rceg_count(key: GoodClassKey) -> int:
    """Good reduced graphs with the given per-label edge and reversal counts."""
    out = multinomial(key.k_AB, key.k_AC, key.k_BC)
    for a in PAIR_LABELS:
        out *= math.comb(key.k(a), key.r(a))
    return out


def termwise_limit(key: GoodClassKey, cbar: Sequence[int]) -> float:
    """Limit of n^-3 t_n for a good reduced graph with pair run totals ``cbar``."""
    return math.exp(-6) * float(_termwise_weight(key, cbar))


def _termwise_weight(key: GoodClassKey, cbar: Sequence[int]) -> Fraction:
    if len(cbar) != 3 or any(c < 0 for c in cbar):
        raise ValueError(f"cbar must be three non-negative integers, got {cbar}")
    w = Fraction(1, math.factorial(key.total))
    for a, c in zip(PAIR_LABELS, cbar):
        k, r = key.k(a), key.r(a)
        if c < r:
            return Fraction(0)
        w *= balls(c - r, k - r) * Fraction(2) ** (k - c)
    return w


def good_keys(total: int) -> Iterable[GoodClassKey]:
    """Every GoodClassKey whose edge counts sum to ``total``."""
    for ks in itertools.product(range(total + 1), repeat=3):
        if sum(ks) != total:
            continue
        for rs in itertools.product(*(range(k + 1) for k in ks)):
            yield GoodClassKey(*ks, *rs)


def good_class_mass(total: int, zero: Sequence[str] = ()) -> Fraction:
    """e^6 times the summed limits of all good classes with ``total`` edges.

    Summation over c is done in closed form (a geometric series gives
    2^(k-r) per label), then over reduced graphs via their count.
    """
    s = Fraction(0)
    for key in good_keys(total):
        if any(key.k(a) for a in zero):
            continue
        term = Fraction(good_rceg_count(key), math.factorial(total))
        for a in PAIR_LABELS:
            term *= 2 ** (key.k(a) - key.r(a))
        s += term
    return s


def good_series_coefficient(total: int, zero: Sequence[str] = ()) -> Fraction:
    """Degree-``total`` part of the product of exponential series in 3."""
    s = Fraction(0)
    for ks in itertools.product(range(total + 1), repeat=3):
        if sum(ks) != total or any(k and a in zero for a, k in zip(PAIR_LABELS, ks)):
            continue
        term = Fraction(1)
        for k in ks:
            term *= Fraction(3**k, math.factorial(k))
        s += term
    return s


def sum_good_limits(zero: Sequence[str] = (), k_max: int = 30) -> float:
    """e^-6 times the product over free labels of sum_{k<=k_max} 3^k/k!.

    ``zero`` lists labels whose segment count is forced to 0: nothing gives
    e^3, ``("AC",)`` gives 1, ``("AB", "AC")`` gives e^-3.
    """
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    bad = set(zero) - set(PAIR_LABELS)
    if bad:
        raise ValueError(f"unknown labels {sorted(bad)}")
    partial = sum(Fraction(3**k, math.factorial(k)) for k in range(k_max + 1))
    free = sum(1 for a in PAIR_LABELS if a not in zero)
    return math.exp(-6) * float(partial ** free)


def trip_upper_bound(st, cbar: Sequence[int], n: int) -> int:
    """Upper bound on the number of edge-ordered triples with reduced graph
    statistics ``st`` (k1..k4 and l per label) and run totals ``cbar``."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    c_ab, c_ac, c_bc, c_abc = cbar
    ls = (st.l_AB, st.l_AC, st.l_BC, st.l_ABC)
    out = 1
    for c, l in zip(cbar, ls):
        out *= balls(c, l)
    ab_free = n - 1 - c_ab - c_abc
    c_free = n - 1 - c_ac - c_bc - c_abc
    args = {
        "n-1-c_AB-c_ABC": ab_free,
        "n-1-c_AC-c_BC-c_ABC": c_free,
        "n-c_AB-c_ABC-k1-k4": n - c_ab - c_abc - st.k1 - st.k4,
        "n-c_AC-c_BC-c_ABC-k2": n - c_ac - c_bc - c_abc - st.k2,
    }
    neg = {k: v for k, v in args.items() if v < 0}
    if neg:
        raise ValueError(f"negative arguments in bound: {neg}")
    out *= multinomial(ab_free, ab_free, st.k1)
    out *= math.comb(2 * ab_free, st.k3)
    out *= math.comb(3 * n - 3 - c_ab - 2 * c_ac - 2 * c_bc - 3 * c_abc + st.k2, c_free)
    out *= math.factorial(n)
    out *= math.factorial(args["n-c_AB-c_ABC-k1-k4"])
    out *= math.factorial(args["n-c_AC-c_BC-c_ABC-k2"])
    return out


def kaplansky_count(n: int) -> int:
    """Permutations of 1..n with no two neighbours differing by 1.

    Inclusion-exclusion over sets of k forced adjacencies {i, i+1}: such a
    set splits into j runs, in C(k-1, j-1) C(n-k, j) ways, each run glues
    into a block with two orientations, leaving (n-k)! arrangements.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = math.factorial(n)
    for k in range(1, n):
        s = sum(math.comb(k - 1, j - 1) * math.comb(n - k, j) * 2**j for j in range(1, k + 1))
        total += (-1) ** k * s * math.factorial(n - k)
    return total


def kaplansky_ratio(n: int) -> float:
    return float(Fraction(kaplansky_count(n), math.factorial(n)))


def lognormal_moment(k: int) -> float:
    """k-th moment of the log-normal law with parameters (-1/2, 1)."""
    return math.exp(k * (k - 1) / 2)


def tail_bound(k: int, M: float, side: str) -> float:
    """Markov-type tail constants for the truncated moments.

    ``lower``: e^{k(k+1)/2} / M^k; ``upper``: e^{k(k-1)/2} / M^k.
    """
    if M <= 0:
        raise ValueError(f"M must be positive, got {M}")
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if side == "lower":
        return math.exp(k * (k + 1) / 2) / M**k
    if side == "upper":
        return math.exp(k * (k - 1) / 2) / M**k
    raise ValueError(f"side must be 'lower' or 'upper', got {side!r}")


@dataclass(frozen=True)
class PeriodicMeasureSpec:
    """A 1-periodic positive measure.

    ``lattice``: mass ``weights[i]`` at every point ``theta + i/L + j``.
    ``density``: density ``weights[i]`` on ``[theta + i/L, theta + (i+1)/L) + j``.
    ``window`` is the number of periods summed on each side of the centre.
    """

    kind: str
    weights: tuple[float, ...] = (1.0,)
    theta: float = 0.0
    window: int = 12

    def __post_init__(self):
        if self.kind not in ("lattice", "density"):
            raise ValueError(f"kind must be 'lattice' or 'density', got {self.kind!r}")
        w = np.asarray(self.weights, dtype=float)
        if w.ndim != 1 or len(w) == 0 or np.any(w < 0):
            raise ValueError("weights must be a non-empty sequence of non-negative numbers")
        if not w.sum() > 0:
            raise ValueError("measure has zero total mass")
        if not 0 <= self.theta < 1:
            raise ValueError(f"theta must lie in [0, 1), got {self.theta}")
        if self.window < 1:
            raise ValueError(f"window must be >= 1, got {self.window}")
        object.__setattr__(self, "weights", tuple(float(x) for x in w))


def _gaussian_integral(spec: PeriodicMeasureSpec, k: float) -> float:
    """Integral of e^{kt} e^{-(t+1/2)^2/2} against the measure."""
    L = len(spec.weights)
    centre = int(math.floor(k - 0.5))
    f = lambda t: math.exp(k * t - (t + 0.5) ** 2 / 2)
    total = 0.0
    for j in range(centre - spec.window, centre + spec.window + 1):
        for i, w in enumerate(spec.weights):
            if w == 0:
                continue
            a = spec.theta + j + i / L
            if spec.kind == "lattice":
                total += w * f(a)
            else:
                val, _ = integrate.quad(f, a, a + 1 / L, epsabs=0, epsrel=1e-13)
                total += w * val
    return total


def periodic_measure_moment(spec: PeriodicMeasureSpec, k: int) -> float:
    """k-th moment of the law with density proportional to e^{-(t+1/2)^2/2} dnu(t)
    pushed forward by t -> e^t; equals e^{k(k-1)/2} for every 1-periodic nu."""
    den = _gaussian_integral(spec, 0)
    if den <= 0:
        raise ValueError("measure has zero total mass")
    return _gaussian_integral(spec, k) / den
