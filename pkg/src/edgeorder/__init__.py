"""Increasing Hamiltonian paths in uniformly random edge orderings of K_n.

Exact counting, the size-bias coupling, enumeration oracles for moments,
common edge graph analysis of path triples, limiting constants and a
seeded Monte Carlo harness.
"""
from .graph import (EdgeOrdering, HamPath, Rng, ccs_ordering, edge_index, edge_pair, identity_path,
                    num_edges, path_edges, sample_uniform_ordering, sample_uniform_path)
from .counting import (AltitudeResult, CapacityError, CountResult, count_increasing_avoiding,
                       count_increasing_ham_paths, enumerate_increasing_ham_paths, exact_altitude,
                       longest_increasing_trail)
from .sizebias import CoupledSample, build_size_biased_ordering, sample_xyz

__version__ = "0.1.0"
