"""Common edge graphs of edge-ordered path triples.

A triple (A, B, C) of directed Hamiltonian paths, together with an
ordering of their edge union under which all three are increasing, has a
common edge graph: the edges lying in at least two of the paths, labelled
by membership and by the direction each member walks them, ordered by rank.
Collapsing every maximal same-membership run gives the reduced graph, from
which the segment statistics k1..k4, l, r and c are read off.

Labels are the strings ``"AB"``, ``"AC"``, ``"BC"`` and ``"ABC"``.  Each
edge is stored oriented the way its first member (A, else B) walks it, and
``signs`` holds +1/-1 per member relative to that orientation.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field, replace
from typing import Mapping, Optional, Sequence

from .graph import EdgeOrdering, edge_index

NAMES = "ABC"
PAIR_LABELS = ("AB", "AC", "BC")
LABELS = ("AB", "AC", "BC", "ABC")


class IntegrityError(ValueError):
    """A common edge graph violates a structural property genuine triples have."""


@dataclass(frozen=True)
class CegEdge:
    tail: int
    head: int
    membership: str
    signs: tuple[int, ...]
    rank: int
    edge: int = -1
    run: int = 1

    @property
    def label(self) -> tuple[str, tuple[int, ...]]:
        return self.membership, self.signs

    @property
    def weight(self) -> int:
        return len(self.membership)


@dataclass(frozen=True)
class CommonEdgeGraph:
    vertices: frozenset
    edges: tuple[CegEdge, ...]  # sorted by rank

    def key(self) -> tuple:
        return canonical_key(self.edges)


@dataclass(frozen=True)
class ReducedCEG(CommonEdgeGraph):
    def key_with_runs(self) -> tuple:
        return canonical_key(self.edges, with_runs=True)


@dataclass(frozen=True)
class CegStats:
    k1: int
    k2: int
    k3: int
    k4: int
    l_AB: int
    l_AC: int
    l_BC: int
    l_ABC: int
    r_AB: int
    r_AC: int
    r_BC: int
    c_AB: int
    c_AC: int
    c_BC: int
    c_ABC: int
    good: bool
    m_AB: Optional[int] = None
    m_AC: Optional[int] = None
    m_BC: Optional[int] = None

    @property
    def cbar(self) -> tuple[int, int, int, int]:
        return self.c_AB, self.c_AC, self.c_BC, self.c_ABC

    def l(self, label: str) -> int:
        return getattr(self, f"l_{label}")

    def c(self, label: str) -> int:
        return getattr(self, f"c_{label}")


def canonical_key(edges: Sequence[CegEdge], with_runs: bool = False) -> tuple:
    """Isomorphism-invariant key of a rank-ordered, oriented, labelled graph.

    Edges are listed by rank; vertices are renumbered by first appearance
    (tail before head).  Ranks are distinct and orientations are fixed by
    the reference member, so equal keys mean isomorphic labelled graphs.
    """
    ids: dict[int, int] = {}
    out = []
    for e in sorted(edges, key=lambda e: e.rank):
        for v in (e.tail, e.head):
            if v not in ids:
                ids[v] = len(ids)
        item = (e.membership, e.signs, ids[e.tail], ids[e.head])
        out.append(item + (e.run,) if with_runs else item)
    return tuple(out)


def _oriented_edges(p: Sequence[int]) -> dict[int, tuple[int, int]]:
    n = len(p)
    return {edge_index(p[i], p[i + 1], n): (p[i], p[i + 1]) for i in range(n - 1)}


def ceg_from_ranks(paths: Sequence[Sequence[int]], rank: Mapping[int, int]) -> CommonEdgeGraph:
    """Common edge graph of three paths, given ranks of (at least) their common edges."""
    walks = [_oriented_edges(p) for p in paths]
    members: dict[int, list[int]] = defaultdict(list)
    for idx, w in enumerate(walks):
        for e in w:
            members[e].append(idx)
    edges = []
    vertices = set()
    for e, who in members.items():
        if len(who) < 2:
            continue
        tail, head = walks[who[0]][e]
        signs = tuple(1 if walks[i][e] == (tail, head) else -1 for i in who)
        edges.append(CegEdge(tail, head, "".join(NAMES[i] for i in who), signs, int(rank[e]), e))
        vertices.update((tail, head))
    edges.sort(key=lambda x: x.rank)
    return CommonEdgeGraph(frozenset(vertices), tuple(edges))


def _check_increasing(paths: Sequence[Sequence[int]], o: EdgeOrdering):
    for name, p in zip(NAMES, paths):
        if len(p) != o.n:
            raise ValueError(f"path {name} has {len(p)} vertices, ordering has n={o.n}")
        if not o.is_increasing(p):
            raise ValueError(f"path {name} is not increasing under the ordering")


def common_edge_graph(a, b, c, o: EdgeOrdering) -> CommonEdgeGraph:
    """Common edge graph of the edge-ordered triple ``(a, b, c)`` under ``o``."""
    _check_increasing((a, b, c), o)
    return ceg_from_ranks((a, b, c), o.rank)


class _DSU:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)


def _components(edges: Sequence[CegEdge]) -> list[list[CegEdge]]:
    dsu = _DSU()
    for e in edges:
        dsu.union(e.tail, e.head)
    groups: dict[int, list[CegEdge]] = defaultdict(list)
    for e in edges:
        groups[dsu.find(e.tail)].append(e)
    return list(groups.values())


def run_violations(g: CommonEdgeGraph) -> list[str]:
    """Breaches of the same-label run structure (empty for genuine triples).

    Every component of a single-membership subgraph must be a path whose
    edges are adjacent in the rank order, whose members walk it one way,
    and whose interior vertices touch nothing else in ``g``.
    """
    problems = []
    position = {id(e): i for i, e in enumerate(g.edges)}
    degree: dict[int, int] = defaultdict(int)
    for e in g.edges:
        degree[e.tail] += 1
        degree[e.head] += 1
    for label in LABELS:
        sub = [e for e in g.edges if e.membership == label]
        for comp in _components(sub):
            local: dict[int, int] = defaultdict(int)
            for e in comp:
                local[e.tail] += 1
                local[e.head] += 1
            if len(local) != len(comp) + 1 or max(local.values()) > 2:
                problems.append(f"{label} run through {sorted(local)} is not a path")
                continue
            pos = sorted(position[id(e)] for e in comp)
            if pos[-1] - pos[0] != len(pos) - 1:
                problems.append(f"{label} run through {sorted(local)} is not rank-consecutive")
            if len(comp) > 1 and len({e.signs for e in comp}) > 1:
                problems.append(f"{label} run through {sorted(local)} mixes directions")
            for v, d in local.items():
                if d == 2 and degree[v] != 2:
                    problems.append(f"interior vertex {v} of {label} run has degree {degree[v]}")
    return problems


def reduce(g: CommonEdgeGraph) -> ReducedCEG:
    """Collapse each maximal same-membership run into one edge with its length."""
    problems = run_violations(g)
    if problems:
        raise IntegrityError("; ".join(problems))
    out = []
    for label in LABELS:
        sub = [e for e in g.edges if e.membership == label]
        for comp in _components(sub):
            comp.sort(key=lambda e: e.rank)
            first, last = comp[0], comp[-1]
            # the reference member walks the run in rank order
            out.append(CegEdge(first.tail, last.head, label, first.signs, first.rank,
                               first.edge if len(comp) == 1 else -1, sum(e.run for e in comp)))
    out.sort(key=lambda e: e.rank)
    vertices = frozenset(v for e in out for v in (e.tail, e.head))
    return ReducedCEG(vertices, tuple(out))


def expand(rg: CommonEdgeGraph) -> CommonEdgeGraph:
    """Re-expand run lengths into paths on fresh interior vertices."""
    fresh = max(rg.vertices, default=-1) + 1
    edges = []
    rank = 0
    for e in rg.edges:
        chain = [e.tail] + list(range(fresh, fresh + e.run - 1)) + [e.head]
        fresh += e.run - 1
        for u, v in zip(chain, chain[1:]):
            rank += 1
            edges.append(CegEdge(u, v, e.membership, e.signs, rank))
    vertices = frozenset(v for e in edges for v in (e.tail, e.head))
    return CommonEdgeGraph(vertices, tuple(edges))


def _has(e: CegEdge, *names: str) -> bool:
    return all(x in e.membership for x in names)


def stats(g: CommonEdgeGraph) -> CegStats:
    """Segment statistics of a (reduced) common edge graph.

    The k's are the same on G and on its reduction; l counts edges of the
    graph passed in, c sums their run lengths.
    """
    ab_edges = [e for e in g.edges if _has(e, "A", "B")]
    c_edges = [e for e in g.edges if "C" in e.membership]
    k1 = len(_components(ab_edges))
    k2 = len(_components(c_edges))
    k3 = sum(1 for comp in _components(g.edges) if not any(_has(e, "A", "B") for e in comp))
    incident: dict[int, set[str]] = defaultdict(set)
    for e in g.edges:
        incident[e.tail].add(e.membership)
        incident[e.head].add(e.membership)
    k4 = 0
    for labels in incident.values():
        has_ac = any("A" in x and "C" in x for x in labels)
        has_bc = any("B" in x and "C" in x for x in labels)
        has_ab = any("A" in x and "B" in x for x in labels)
        if has_ac and has_bc and not has_ab:
            k4 += 1
    l = {x: 0 for x in LABELS}
    r = {x: 0 for x in PAIR_LABELS}
    c = {x: 0 for x in LABELS}
    for e in g.edges:
        l[e.membership] += 1
        c[e.membership] += e.run
        if e.membership in r and e.signs[1] == -1:
            r[e.membership] += 1
    good = all(len(comp) == 1 and comp[0].weight == 2 for comp in _components(g.edges))
    return CegStats(k1, k2, k3, k4,
                    l["AB"], l["AC"], l["BC"], l["ABC"],
                    r["AB"], r["AC"], r["BC"],
                    c["AB"], c["AC"], c["BC"], c["ABC"], good)


def vertex_weights(g: CommonEdgeGraph) -> dict[int, int]:
    """Sum over incident edges of the number of paths sharing the edge."""
    w: dict[int, int] = defaultdict(int)
    for e in g.edges:
        w[e.tail] += e.weight
        w[e.head] += e.weight
    return dict(w)


def m_counts(a, b, c, o: EdgeOrdering) -> tuple[int, int, int]:
    """Edges unique to the third path that fall inside a common segment of a pair.

    Returns ``(m_AB, m_AC, m_BC)``; ``m_AB`` counts C-only edges whose rank
    lies strictly between two edges of one common segment of A and B.
    """
    paths = (a, b, c)
    _check_increasing(paths, o)
    sets = [set(_oriented_edges(p)) for p in paths]
    rank = o.rank
    out = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        k = 3 - i - j
        shared = sets[i] & sets[j]
        segs = _components([CegEdge(*_endpoints(e, paths[i]), "", (), int(rank[e])) for e in shared])
        spans = [(min(e.rank for e in s), max(e.rank for e in s)) for s in segs]
        unique = sets[k] - sets[i] - sets[j]
        out.append(sum(1 for e in unique if any(lo < rank[e] < hi for lo, hi in spans)))
    return tuple(out)


def _endpoints(e: int, p: Sequence[int]) -> tuple[int, int]:
    return _oriented_edges(p)[e]


def triple_stats(a, b, c, o: EdgeOrdering) -> CegStats:
    """Stats of the reduced common edge graph, with the m-counts filled in."""
    rg = reduce(common_edge_graph(a, b, c, o))
    m = m_counts(a, b, c, o)
    return replace(stats(rg), m_AB=m[0], m_AC=m[1], m_BC=m[2])


@dataclass
class ClaimReport:
    consecutive: bool
    s2_bound: bool
    abc_bound: bool
    weights: bool
    dichotomy: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_claims(a, b, c, o: EdgeOrdering, eps: float = 0.1) -> ClaimReport:
    """Validate the structural claims on one edge-ordered triple.

    Checks run consecutiveness, ``k1 + k2 >= l_AB``, ``k1 + k2 >= l_ABC``,
    vertex weight at most 6, and the together-or-apart dichotomy at ``eps``
    over all three choices of the distinguished path.
    """
    if not 0 < eps < 1:
        raise ValueError(f"eps must lie in (0, 1), got {eps}")
    g = common_edge_graph(a, b, c, o)
    failures = run_violations(g)
    consecutive = not failures
    s2 = abc = True
    if consecutive:
        st = stats(reduce(g))
        s2 = st.k1 + st.k2 >= st.l_AB
        abc = st.k1 + st.k2 >= st.l_ABC
        if not s2:
            failures.append(f"k1+k2={st.k1 + st.k2} < l_AB={st.l_AB}")
        if not abc:
            failures.append(f"k1+k2={st.k1 + st.k2} < l_ABC={st.l_ABC}")
    w = vertex_weights(g)
    heavy = {v: x for v, x in w.items() if x > 6}
    if heavy:
        failures.append(f"vertex weights above 6: {heavy}")
    n = o.n
    sets = [set(_oriented_edges(p)) for p in (a, b, c)]
    overlaps = [len((sets[(i + 1) % 3] | sets[(i + 2) % 3]) & sets[i]) for i in range(3)]
    triple = len(sets[0] & sets[1] & sets[2])
    dichotomy = min(overlaps) <= (1 - eps) * n or triple >= (1 - 18 * eps) * n
    if not dichotomy:
        failures.append(f"dichotomy fails: overlaps {overlaps}, |A∩B∩C|={triple}")
    return ClaimReport(consecutive, s2, abc, not heavy, dichotomy, failures)


def stats_record(st: CegStats) -> dict:
    return {k: getattr(st, k) for k in st.__dataclass_fields__}
