import itertools

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from edgeorder.graph import EdgeOrdering, edge_index, num_edges

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def all_orderings(n):
    """Every edge ordering of K_n, in lexicographic order of the rank-order list."""
    for perm in itertools.permutations(range(num_edges(n))):
        yield EdgeOrdering.from_order(n, perm)


def naive_count(o, forbidden=()):
    """X by brute force over all n! directed vertex sequences."""
    forbidden = set(forbidden)
    n = o.n
    total = 0
    for p in itertools.permutations(range(n)):
        es = [edge_index(p[i], p[i + 1], n) for i in range(n - 1)]
        if forbidden & set(es):
            continue
        r = [o.rank[e] for e in es]
        total += all(a < b for a, b in zip(r, r[1:]))
    return total


@pytest.fixture(scope="session")
def orderings4():
    return list(all_orderings(4))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for i in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[i])
