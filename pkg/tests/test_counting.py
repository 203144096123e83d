import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import all_orderings, naive_count
from edgeorder.counting import (CapacityError, MAX_COUNT_N, count_increasing_avoiding,
                                count_increasing_ham_paths, enumerate_increasing_ham_paths,
                                exact_altitude, longest_increasing_trail)
from edgeorder.graph import EdgeOrdering, Rng, edge_index, edge_pair, path_edges, sample_uniform_ordering
from edgeorder.limits import kaplansky_ratio


def brute_altitude(o):
    """Longest increasing self-avoiding path by exhaustive extension."""
    n = o.n
    best = 0
    stack = [((v,), 0, 0) for v in range(n)]
    while stack:
        path, last, length = stack.pop()
        best = max(best, length)
        for w in range(n):
            if w in path:
                continue
            r = o.rank[edge_index(path[-1], w, n)]
            if r > last:
                stack.append((path + (w,), r, length + 1))
    return best


def brute_trail(o):
    """Longest increasing trail by search over (vertex, last rank) walks."""
    n = o.n
    best = 0
    stack = [(v, 0, 0) for v in range(n)]
    while stack:
        v, last, length = stack.pop()
        best = max(best, length)
        for w in range(n):
            if w != v and o.rank[edge_index(v, w, n)] > last:
                stack.append((w, o.rank[edge_index(v, w, n)], length + 1))
    return best


def test_small_n_counts():
    assert count_increasing_ham_paths(sample_uniform_ordering(2, Rng(0))).value == 2
    for o in all_orderings(3):
        assert count_increasing_ham_paths(o).value == 3
        assert naive_count(o) == 3


def test_k4_exhaustive_mean(orderings4):
    total = sum(count_increasing_ham_paths(o).value for o in orderings4)
    assert total == 4 * 720


@given(st.integers(2, 6), st.integers(0, 2**32))
def test_count_matches_naive(n, seed):
    o = sample_uniform_ordering(n, Rng(seed))
    assert count_increasing_ham_paths(o).value == naive_count(o)


@given(st.integers(3, 6), st.integers(0, 2**32))
def test_avoiding_matches_naive(n, seed):
    gen = Rng(seed).generator()
    o = sample_uniform_ordering(n, gen)
    p0 = tuple(int(v) for v in gen.permutation(n))
    forb = path_edges(p0)
    z = count_increasing_avoiding(o, forb).value
    assert z == naive_count(o, forb)
    assert z <= count_increasing_ham_paths(o).value


def test_avoiding_examples():
    o = sample_uniform_ordering(5, Rng(1))
    assert count_increasing_avoiding(o, []).value == count_increasing_ham_paths(o).value
    for o in all_orderings(3):
        assert count_increasing_avoiding(o, path_edges((0, 1, 2))).value == 0


def test_z_mean_at_n12_matches_kaplansky():
    n, N = 12, 2000
    vals = np.array([count_increasing_avoiding(sample_uniform_ordering(n, Rng(4, i)),
                                               path_edges(tuple(range(n)))).value / n for i in range(N)])
    se = vals.std(ddof=1) / np.sqrt(N)
    assert abs(vals.mean() - kaplansky_ratio(n)) < 3 * se


def test_capacity_errors():
    big = sample_uniform_ordering(MAX_COUNT_N + 1, Rng(0))
    with pytest.raises(CapacityError):
        count_increasing_ham_paths(big)
    with pytest.raises(CapacityError):
        exact_altitude(sample_uniform_ordering(13, Rng(0)))
    with pytest.raises(CapacityError):
        enumerate_increasing_ham_paths(sample_uniform_ordering(13, Rng(0)))


def test_large_n_count_is_exact_integer():
    # n = 16 is the required floor; the result must be a Python int
    o = sample_uniform_ordering(16, Rng(2))
    r = count_increasing_ham_paths(o)
    assert isinstance(r.value, int) and 0 <= r.value


def test_altitude_small():
    assert exact_altitude(sample_uniform_ordering(2, Rng(0))).length == 1
    for o in all_orderings(3):
        assert exact_altitude(o).length == 2


def test_altitude_and_trail_on_k4(orderings4):
    for o in orderings4:
        alt = exact_altitude(o)
        assert alt.length >= 2
        assert alt.length == brute_altitude(o)
        tr = longest_increasing_trail(o)
        assert tr == brute_trail(o)
        assert tr >= alt.length


def test_trail_on_k3():
    # rank 1 and rank 2 edges meet at a vertex, and the rank 3 edge always
    # leaves the far end of the rank 2 edge, so every triangle has a full trail
    for o in all_orderings(3):
        assert longest_increasing_trail(o) == brute_trail(o) == 3


def _check_witness(o, w, length):
    assert len(w) == length + 1 and len(set(w)) == len(w)
    r = [o.rank[e] for e in path_edges(w)]
    assert all(a < b for a, b in zip(r, r[1:]))


@given(st.integers(4, 10), st.integers(0, 2**32))
def test_altitude_properties(n, seed):
    o = sample_uniform_ordering(n, Rng(seed))
    alt = exact_altitude(o)
    _check_witness(o, alt.witness, alt.length)
    assert (alt.length == n - 1) == (count_increasing_ham_paths(o).value > 0)
    assert longest_increasing_trail(o) >= alt.length
    if n <= 7:
        assert alt.length == brute_altitude(o)


def test_enumerate_small():
    o = sample_uniform_ordering(2, Rng(0))
    assert enumerate_increasing_ham_paths(o) == [(0, 1), (1, 0)]
    for o in all_orderings(3):
        assert len(enumerate_increasing_ham_paths(o)) == 3


@given(st.integers(2, 8), st.integers(0, 2**32), st.integers(1, 50))
def test_enumerate_properties(n, seed, cap):
    o = sample_uniform_ordering(n, Rng(seed))
    x = count_increasing_ham_paths(o).value
    full = enumerate_increasing_ham_paths(o)
    assert len(full) == x and full == sorted(full)
    for p in full:
        assert sorted(p) == list(range(n)) and o.is_increasing(p)
    assert enumerate_increasing_ham_paths(o, cap) == full[:cap]
