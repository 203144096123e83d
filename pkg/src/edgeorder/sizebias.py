"""Size-bias coupling: force a fixed path P0 to be increasing.

Sorting the ranks held by P0's edges along P0 turns a uniform ordering
into a uniform ordering conditioned on P0 being increasing.  Counting
increasing paths there gives Y, which has the size-biased law of X.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .counting import count_increasing_avoiding, count_increasing_ham_paths
from .graph import EdgeOrdering, Rng, check_path, identity_path, path_edges, sample_uniform_ordering


@dataclass(frozen=True)
class CoupledSample:
    n: int
    seed: int
    stream: int
    x: int
    y: int
    z: int


def build_size_biased_ordering(o: EdgeOrdering, p0: Sequence[int]) -> EdgeOrdering:
    """Reassign the ranks of P0's edges in sorted order along P0.

    All other edges keep their rank, so the multiset of ranks is unchanged.
    """
    p0 = check_path(p0, o.n)
    edges = path_edges(p0)
    rank = np.array(o.rank)
    rank[edges] = np.sort(rank[edges])
    return EdgeOrdering.from_ranks(o.n, rank)


def sample_xyz(n: int, rng: Rng, p0: Optional[Sequence[int]] = None) -> CoupledSample:
    """One draw of (X, Y, Z) from the coupling.

    Z counts increasing paths edge-disjoint from P0; it ignores P0's ranks
    so it is the same on the original and the modified ordering.
    """
    if p0 is None:
        p0 = identity_path(n)
    o = sample_uniform_ordering(n, rng)
    x = count_increasing_ham_paths(o).value
    y = count_increasing_ham_paths(build_size_biased_ordering(o, p0)).value
    z = count_increasing_avoiding(o, path_edges(p0)).value
    return CoupledSample(n, rng.seed, rng.stream, x, y, z)
