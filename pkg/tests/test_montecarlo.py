import json
import math
from fractions import Fraction

import numpy as np
import pytest

from edgeorder.counting import CapacityError
from edgeorder.montecarlo import (Estimate, SimConfig, XYZ_HEADER, dist_compare, disjoint_triple_frequency,
                                  emit, harvest_triples, render_json, run_experiment, truncated_moment)
from edgeorder.oracle import exhaustive_distribution


def test_config_validation():
    with pytest.raises(ValueError):
        SimConfig(1, 10, 0)
    with pytest.raises(ValueError):
        SimConfig(5, 0, 0)
    with pytest.raises(ValueError):
        SimConfig(5, 10, 0, "truncated")
    with pytest.raises(ValueError):
        SimConfig(5, 10, 0, "nope")
    with pytest.raises(ValueError):
        SimConfig(5, 10, 0, M=-1.0)


def test_xyz_n3_exact():
    r = run_experiment(SimConfig(3, 25, 11))
    e = r.estimates["EX/n"]
    assert e.mean == 1.0 and e.stderr == 0.0
    assert r.estimates["EZ/n"].mean == 0.0


def test_determinism_and_streams():
    a = run_experiment(SimConfig(6, 40, 5))
    b = run_experiment(SimConfig(6, 40, 5))
    assert render_json(a) == render_json(b) and a.rows == b.rows
    c = run_experiment(SimConfig(6, 40, 5, stream=1))
    assert c.rows[0][4:] == a.rows[1][4:]


def test_emit_csv_and_json(tmp_path):
    r = run_experiment(SimConfig(5, 10, 1, M=2.0))
    p = tmp_path / "x.csv"
    emit(r, "csv", p)
    lines = p.read_text().splitlines()
    assert lines[0] == ",".join(XYZ_HEADER) and len(lines) == 11
    emit(r, "csv", tmp_path / "y.csv")
    assert p.read_bytes() == (tmp_path / "y.csv").read_bytes()
    j = tmp_path / "r.json"
    emit(r, "json", j)
    text = j.read_text()
    d = json.loads(text)
    assert d["schema_version"] == 1 and d["config"]["n"] == 5
    assert render_json(d) == text
    emit(d, "json", tmp_path / "again.json")
    assert (tmp_path / "again.json").read_text() == text
    with pytest.raises(OSError, match="nonexistent"):
        emit(r, "json", tmp_path / "nonexistent" / "r.json")
    with pytest.raises(ValueError):
        emit(r, "xml", j)


def test_summary_csv(tmp_path):
    r = run_experiment(SimConfig(6, 30, 2, "pr-positive"))
    emit(r, "csv", tmp_path / "p.csv")
    assert (tmp_path / "p.csv").read_text().startswith("quantity,mean,stderr,samples,reference\n")


def test_capacity():
    with pytest.raises(CapacityError):
        run_experiment(SimConfig(17, 1, 0))


def test_truncated_moment():
    xs = [0.5, 1.0, 3.0]
    assert truncated_moment(xs, 100, 2) == pytest.approx(np.mean(np.square(xs)))
    h = exhaustive_distribution(4)
    exact = sum(Fraction(c, 720) * min(Fraction(x, 4), 1) for x, c in h.items())
    samples = [x / 4 for x, c in h.items() for _ in range(c)]
    assert truncated_moment(samples, 1, 1) == pytest.approx(float(exact), rel=1e-12)
    with pytest.raises(ValueError):
        truncated_moment(xs, 0, 1)


def test_truncation_rarely_binds():
    r = run_experiment(SimConfig(12, 5000, 3, "truncated", M=20.0))
    raw, cut = r.estimates["E(X/n)^2"], r.estimates["E min(X/n,M)^2"]
    assert abs(raw.mean - cut.mean) <= 3 * raw.stderr


def test_stderr_scaling():
    """Averaged over repeated runs, doubling samples divides stderr by sqrt(2)."""
    small, large = [], []
    for rep in range(4):
        small.append(run_experiment(SimConfig(6, 3000, 50 + rep)).estimates["EX/n"].stderr)
        large.append(run_experiment(SimConfig(6, 6000, 90 + rep)).estimates["EX/n"].stderr)
    ratio = np.mean(small) / np.mean(large)
    assert abs(ratio / math.sqrt(2) - 1) < 0.05


def test_disjoint_small():
    d = disjoint_triple_frequency(3, 500, 1)
    assert d["triple"].mean == 0
    d = disjoint_triple_frequency(30, 20000, 2)
    for k in ("pair AB", "pair AC", "pair BC"):
        assert d["triple"].mean <= d[k].mean
    assert disjoint_triple_frequency(30, 5000, 9) == disjoint_triple_frequency(30, 5000, 9)


def test_dist_compare():
    out = dist_compare(8, 300, 4)
    assert out.references["E(X/n)^3"] == pytest.approx(math.exp(3))
    assert 0 <= out.observations["ks_sup_distance"] <= 1


def test_dist_compare_mean_at_14():
    r = run_experiment(SimConfig(14, 2000, 0, "dist-compare"))
    assert r.estimates["E(X/n)^1"].within(1.0, 3)
    assert "ks_sup_distance" in r.observations


def test_harvest_triples():
    tr = harvest_triples(7, 30, 3)
    assert len(tr) == 30
    for a, b, c, o in tr:
        assert all(o.is_increasing(p) for p in (a, b, c))
