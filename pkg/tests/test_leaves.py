"""Leaf classification, sampling, CSV export, the fibration counterexample."""

import csv
import math
from fractions import Fraction

import numpy as np
import pytest

from ohopf.algebra import AlgebraElement, from_array
from ohopf.leaves import (
    INFINITY,
    LeafId,
    ORIGIN,
    PointD2,
    classify,
    export_csv,
    on_leaf,
    right_mult_counterexample,
    same_leaf,
    sample_leaf,
    verify_leaves,
)


def E(i, dim=8):
    return AlgebraElement.basis(dim, i)


def test_classify_origin_and_infinity():
    z = AlgebraElement.zero(8)
    assert classify(PointD2(z, z)).is_origin
    leaf = classify(PointD2(z, E(1).scale(2.0)))
    assert leaf.is_infinite_slope and leaf.radius_sq == 4.0


def test_classify_basis_point():
    leaf = classify(PointD2(E(0), E(1)))
    assert leaf.slope == E(1)
    assert leaf.radius_sq == 2


def test_classify_slope_through_table():
    s = 1.0 / math.sqrt(2.0)
    leaf = classify(PointD2(E(1).scale(s), E(2).scale(s)))
    # y x^-1 = e2 (-e1) = e3 after the inverse flips the sign
    assert np.allclose(leaf.slope.as_floats(), E(3).as_floats())
    assert abs(leaf.radius_sq - 1.0) < 1e-15


def test_same_leaf_exact_rationals():
    x = AlgebraElement((Fraction(3, 5), Fraction(4, 5)) + (Fraction(0),) * 6)
    m = AlgebraElement((Fraction(1, 2), Fraction(1, 3)) + (Fraction(0),) * 6)
    p = PointD2(x, m * x)
    q = PointD2(E(0), m * E(0))  # same slope, same norm: |x| = 1
    assert same_leaf(p, q, tol=0)
    m2 = m + E(4)
    assert not same_leaf(p, PointD2(x, m2 * x), tol=0)


def test_same_leaf_float_scaling():
    rng = np.random.default_rng(0)
    x = from_array(rng.normal(size=8))
    m = from_array(rng.normal(size=8))
    p = PointD2(x, m * x)
    u = from_array(rng.normal(size=8))
    norm = math.sqrt(float(x.norm_sq()) / float(u.norm_sq()))
    q = PointD2(u.scale(norm), (m * u).scale(norm))
    assert same_leaf(p, q, tol=1e-9)


def test_sample_leaf_origin_and_determinism():
    pts = sample_leaf(LeafId(ORIGIN, 0), 3, seed=5)
    assert len(pts) == 3 and all(p.x.is_zero() and p.y.is_zero() for p in pts)
    a = sample_leaf(LeafId(E(1), 1.0), 10, seed=42)
    b = sample_leaf(LeafId(E(1), 1.0), 10, seed=42)
    assert all(p.x == q.x and p.y == q.y for p, q in zip(a, b))
    with pytest.raises(ValueError):
        sample_leaf(LeafId(ORIGIN, 0), 0, seed=1)


def test_sample_leaf_infinity():
    pts = sample_leaf(LeafId(INFINITY, 1.0), 10, seed=3)
    for p in pts:
        assert p.x.is_zero()
        assert abs(float(p.y.norm_sq()) - 1.0) < 1e-12


def test_sample_leaf_finite_slope():
    leaf = LeafId(E(1), 1.0)
    for p in sample_leaf(leaf, 100, seed=9):
        assert abs(float(p.x.norm_sq() + p.y.norm_sq()) - 1.0) < 1e-12
        assert on_leaf(p, leaf, tol=1e-9)
        # y = e1 * x exactly by construction
        assert float(((E(1) * p.x) - p.y).norm_sq()) < 1e-24


def test_export_csv(tmp_path):
    path = tmp_path / "leaf.csv"
    pts = sample_leaf(LeafId(E(2), 2.25), 7, seed=1)
    export_csv(pts, path)
    with open(path) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["x%d" % i for i in range(8)] + ["y%d" % i for i in range(8)]
    assert len(rows) == 8
    floats = [float(v) for v in rows[1]]
    assert abs(sum(f * f for f in floats) - 2.25) < 1e-12


def test_counterexample_values():
    report = right_mult_counterexample()
    assert report.passed
    by_name = {c.name: c for c in report.checks}
    assert by_name["first_equation"].info["u3"] == ["0", "-1", "0", "0", "0", "0", "0", "0"]
    assert by_name["second_equation"].info["u3"] == ["0", "1", "0", "0", "0", "0", "0", "0"]


@pytest.mark.parametrize("dim", (1, 2, 4, 8))
def test_leaf_suite(dim):
    report = verify_leaves(dim, 32, seed=2, tol=1e-9)
    assert report.passed, [c.name for c in report.checks if not c.passed]
