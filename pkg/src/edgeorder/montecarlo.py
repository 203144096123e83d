"""Seeded Monte Carlo experiments and their CSV/JSON reports.

Sample ``i`` of a run always draws from substream ``stream + i`` of the
run's seed, so every report is a pure function of its configuration.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy import stats as sps

from .counting import CapacityError, count_increasing_ham_paths
from .graph import Rng, sample_uniform_ordering
from .sizebias import sample_xyz

SCHEMA_VERSION = 1
MAX_MC_N = 16
EXPERIMENTS = ("xyz", "pr-positive", "disjoint-triple", "truncated", "dist-compare")
XYZ_HEADER = ("n", "seed", "stream", "sample", "x", "y", "z")


@dataclass(frozen=True)
class SimConfig:
    n: int
    samples: int
    seed: int
    experiment: str = "xyz"
    M: Optional[float] = None
    stream: int = 0

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise ValueError(f"unknown experiment {self.experiment!r}; choose from {EXPERIMENTS}")
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")
        if self.experiment == "truncated" and self.M is None:
            raise ValueError("the truncated experiment needs M")
        if self.M is not None and not self.M > 0:
            raise ValueError(f"M must be positive, got {self.M}")
        Rng(self.seed, self.stream)  # validates seed and stream


@dataclass(frozen=True)
class Estimate:
    mean: float
    stderr: float
    samples: int

    @classmethod
    def of(cls, values) -> "Estimate":
        v = np.asarray(values, dtype=float)
        N = len(v)
        mean = math.fsum(v) / N
        if N < 2:
            return cls(mean, 0.0, N)
        var = math.fsum((v - mean) ** 2) / (N - 1)
        return cls(mean, math.sqrt(var / N), N)

    def within(self, target: float, k: float) -> bool:
        return abs(self.mean - target) <= k * self.stderr


@dataclass
class MomentReport:
    config: SimConfig
    estimates: dict[str, Estimate] = field(default_factory=dict)
    references: dict[str, float] = field(default_factory=dict)
    oracle: dict[str, float] = field(default_factory=dict)
    observations: dict[str, float] = field(default_factory=dict)
    rows: list[tuple] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "config": asdict(self.config),
            "estimates": {k: asdict(v) for k, v in self.estimates.items()},
            "references": dict(self.references),
            "oracle": dict(self.oracle),
            "observations": dict(self.observations),
        }


def _check_counting_n(n: int):
    if n > MAX_MC_N:
        raise CapacityError(f"counting experiments support n <= {MAX_MC_N}, got n={n}")


def _sample_x(cfg: SimConfig) -> np.ndarray:
    _check_counting_n(cfg.n)
    return np.array([count_increasing_ham_paths(
        sample_uniform_ordering(cfg.n, Rng(cfg.seed, cfg.stream + i))).value
        for i in range(cfg.samples)], dtype=np.int64)


def _oracle_refs(n: int) -> dict[str, float]:
    from .oracle import (MAX_ADJACENCY_N, MAX_SECOND_MOMENT_N, MAX_THIRD_MOMENT_N,
                         adjacency_free_fraction, exact_moment)
    out = {}
    if n <= MAX_SECOND_MOMENT_N:
        out["EX2/n^2"] = float(exact_moment(n, 2).value / n**2)
    if n <= MAX_THIRD_MOMENT_N:
        out["EX3/n^3"] = float(exact_moment(n, 3).value / n**3)
    if n <= MAX_ADJACENCY_N:
        out["EZ/n"] = float(adjacency_free_fraction(n))
    return out


def truncated_moment(x_over_n: Sequence[float], M: float, k: int) -> float:
    """Mean of min(x/n, M)^k."""
    if M <= 0:
        raise ValueError(f"M must be positive, got {M}")
    v = np.minimum(np.asarray(x_over_n, dtype=float), M) ** k
    return math.fsum(v) / len(v)


def _truncated_estimates(xn: np.ndarray, M: float) -> dict[str, Estimate]:
    return {f"E min(X/n,M)^{k}": Estimate.of(np.minimum(xn, M) ** k) for k in (1, 2, 3)}


def _run_xyz(cfg: SimConfig, rep: MomentReport):
    _check_counting_n(cfg.n)
    n = cfg.n
    draws = [sample_xyz(n, Rng(cfg.seed, cfg.stream + i)) for i in range(cfg.samples)]
    x = np.array([d.x for d in draws], dtype=float)
    y = np.array([d.y for d in draws], dtype=float)
    z = np.array([d.z for d in draws], dtype=float)
    rep.rows = [(n, cfg.seed, d.stream, i, d.x, d.y, d.z) for i, d in enumerate(draws)]
    rep.estimates = {
        "EX/n": Estimate.of(x / n),
        "EX2/n^2": Estimate.of(y / n),
        "EX3/n^3": Estimate.of(y**2 / n**2),
        "EZ/n": Estimate.of(z / n),
        "E(Y-eX)^2/n^2": Estimate.of((y - math.e * x) ** 2 / n**2),
        "Pr(X>0)": Estimate.of(x > 0),
    }
    if cfg.M is not None:
        rep.estimates.update(_truncated_estimates(x / n, cfg.M))
    rep.references = {"EX/n": 1.0, "EX2/n^2": math.e, "EX3/n^3": math.e**3, "EZ/n": math.exp(-2)}
    rep.oracle = _oracle_refs(n)


def _run_pr_positive(cfg: SimConfig, rep: MomentReport):
    x = _sample_x(cfg)
    rep.estimates = {"Pr(X>0)": Estimate.of(x > 0)}
    rep.references = {"1/e": math.exp(-1)}


def _run_truncated(cfg: SimConfig, rep: MomentReport):
    xn = _sample_x(cfg) / cfg.n
    rep.estimates = {f"E(X/n)^{k}": Estimate.of(xn**k) for k in (1, 2, 3)}
    rep.estimates.update(_truncated_estimates(xn, cfg.M))
    rep.references = {f"E(X/n)^{k}": math.exp(k * (k - 1) / 2) for k in (1, 2, 3)}


def _run_disjoint(cfg: SimConfig, rep: MomentReport):
    res = disjoint_triple_frequency(cfg.n, cfg.samples, cfg.seed)
    rep.estimates = res
    rep.references = {"triple": math.exp(-6), "pair AB": math.exp(-2),
                      "pair AC": math.exp(-2), "pair BC": math.exp(-2)}


def _run_dist_compare(cfg: SimConfig, rep: MomentReport):
    out = dist_compare(cfg.n, cfg.samples, cfg.seed, cfg.stream)
    rep.estimates = out.estimates
    rep.references = out.references
    rep.observations = out.observations


_RUNNERS = {"xyz": _run_xyz, "pr-positive": _run_pr_positive, "truncated": _run_truncated,
            "disjoint-triple": _run_disjoint, "dist-compare": _run_dist_compare}


def run_experiment(cfg: SimConfig) -> MomentReport:
    rep = MomentReport(cfg)
    _RUNNERS[cfg.experiment](cfg, rep)
    return rep


def disjoint_triple_frequency(n: int, samples: int, seed: int,
                              batch: int = 20000) -> dict[str, Estimate]:
    """How often (identity, B, C) with B, C uniform are pairwise edge-disjoint.

    Also returns each pairwise disjointness frequency.  Batch ``b`` draws
    from substream ``b`` of ``seed``.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    hits = {"triple": 0, "pair AB": 0, "pair AC": 0, "pair BC": 0}
    done = 0
    b = 0
    while done < samples:
        size = min(batch, samples - done)
        gen = Rng(seed, b).generator()
        base = np.broadcast_to(np.arange(n), (size, n))
        B = gen.permuted(base, axis=1)
        C = gen.permuted(base, axis=1)
        ab = np.any(np.abs(np.diff(B, axis=1)) == 1, axis=1)
        ac = np.any(np.abs(np.diff(C, axis=1)) == 1, axis=1)
        posC = np.argsort(C, axis=1)
        bc = np.any(np.abs(np.diff(np.take_along_axis(posC, B, axis=1), axis=1)) == 1, axis=1)
        hits["triple"] += int(np.sum(~(ab | ac | bc)))
        hits["pair AB"] += int(np.sum(~ab))
        hits["pair AC"] += int(np.sum(~ac))
        hits["pair BC"] += int(np.sum(~bc))
        done += size
        b += 1
    out = {}
    for k, h in hits.items():
        p = h / samples
        se = math.sqrt(p * (1 - p) / (samples - 1)) if samples > 1 else 0.0
        out[k] = Estimate(p, se, samples)
    return out


@dataclass
class DistComparison:
    estimates: dict[str, Estimate]
    references: dict[str, float]
    observations: dict[str, float]


def dist_compare(n: int, samples: int, seed: int, stream: int = 0) -> DistComparison:
    """Empirical moments of X/n and the sup-distance of ln(X/n), given X > 0,
    to Normal(-1/2, 1).  Nothing here is a pass/fail test."""
    x = _sample_x(SimConfig(n, samples, seed, "dist-compare", stream=stream))
    xn = x / n
    est = {f"E(X/n)^{k}": Estimate.of(xn**k) for k in (1, 2, 3)}
    est["Pr(X>0)"] = Estimate.of(x > 0)
    pos = np.log(xn[x > 0])
    obs = {"positive": float(len(pos))}
    if len(pos):
        obs["ks_sup_distance"] = float(sps.kstest(pos, sps.norm(loc=-0.5, scale=1).cdf).statistic)
        obs["mean_log"] = float(np.mean(pos))
        obs["std_log"] = float(np.std(pos, ddof=1)) if len(pos) > 1 else 0.0
    refs = {f"E(X/n)^{k}": math.exp(k * (k - 1) / 2) for k in (1, 2, 3)}
    return DistComparison(est, refs, obs)


def render_json(report) -> str:
    d = report.to_dict() if isinstance(report, MomentReport) else report
    return json.dumps(d, sort_keys=True, indent=2) + "\n"


def render_csv(report: MomentReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if report.config.experiment == "xyz":
        w.writerow(XYZ_HEADER)
        w.writerows(report.rows)
    else:
        w.writerow(("quantity", "mean", "stderr", "samples", "reference"))
        for k in sorted(report.estimates):
            e = report.estimates[k]
            w.writerow((k, repr(e.mean), repr(e.stderr), e.samples, report.references.get(k, "")))
    return buf.getvalue()


def emit(report, fmt: str, path) -> None:
    """Write ``report`` as ``csv`` or ``json`` to ``path``."""
    if fmt == "json":
        text = render_json(report)
    elif fmt == "csv":
        if not isinstance(report, MomentReport):
            raise ValueError("csv output needs a MomentReport")
        text = render_csv(report)
    else:
        raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc


def harvest_triples(n: int, triples: int, seed: int, per_ordering: int = 10,
                    cap: int = 5000) -> list[tuple]:
    """Edge-ordered triples ``(a, b, c, o)`` from random orderings.

    Each ordering (substream ``i``) contributes up to ``per_ordering``
    triples drawn uniformly with replacement from its increasing paths
    (at most ``cap`` of them are enumerated); orderings with X = 0 are
    skipped.
    """
    from .counting import enumerate_increasing_ham_paths

    out = []
    i = 0
    while len(out) < triples:
        rng = Rng(seed, i)
        gen = rng.generator()
        o = sample_uniform_ordering(n, gen)
        paths = enumerate_increasing_ham_paths(o, cap)
        i += 1
        if not paths:
            continue
        for _ in range(min(per_ordering, triples - len(out))):
            a, b, c = (paths[j] for j in gen.integers(len(paths), size=3))
            out.append((a, b, c, o))
    return out
