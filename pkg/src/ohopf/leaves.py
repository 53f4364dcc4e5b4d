"""Octonionic lines and the singular Hopf leaf decomposition of D^2.

A line of slope m is {(x, m*x)}; the line of slope infinity is {(0, y)}.
Leaves are intersections of lines with spheres |x|^2 + |y|^2 = r^2, plus the
origin.  This module classifies points into leaves, compares leaves robustly
near the infinity line, samples leaf point clouds, and reproduces the failure
of right multiplication by unit octonions to fibrate the 15-sphere.

Slope comparison is projective: a point (x, y) lies on the leaf of slope m
iff |y*conj(x) - m*|x|^2| <= tol*|x|^2, which avoids dividing by small |x|.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .algebra import AlgebraElement, from_array, random_rational_element, structure_tensor
from .report import VerificationReport, derived_rng, timed_report


class PointD2(NamedTuple):
    x: AlgebraElement
    y: AlgebraElement


ORIGIN = "origin"
INFINITY = "infinity"


@dataclass(frozen=True)
class LeafId:
    """Leaf label: slope (element, INFINITY, or ORIGIN) plus squared radius."""

    slope: object
    radius_sq: object

    @property
    def is_origin(self):
        return self.slope == ORIGIN

    @property
    def is_infinite_slope(self):
        return self.slope == INFINITY


def classify(p: PointD2, tol: float = 0.0) -> LeafId:
    """Leaf through a point: origin, (infinity, |y|^2), or (y*x^-1, |p|^2)."""
    x, y = p
    nx, ny = x.norm_sq(), y.norm_sq()
    scale = nx + ny
    if scale <= tol * tol:
        return LeafId(ORIGIN, 0)
    if nx <= tol * tol * scale:
        return LeafId(INFINITY, scale)
    return LeafId(y * x.inverse(), scale)


def same_leaf(p: PointD2, q: PointD2, tol: float = 0.0) -> bool:
    """Whether two points lie on the same leaf, up to tolerance."""
    rp = p.x.norm_sq() + p.y.norm_sq()
    rq = q.x.norm_sq() + q.y.norm_sq()
    if abs(rp - rq) > tol * (1 + max(rp, rq)):
        return False
    leaf_q = classify(q, tol)
    return on_leaf(p, leaf_q, tol)


def on_leaf(p: PointD2, leaf: LeafId, tol: float = 0.0) -> bool:
    """Membership of a point in a leaf via the projective slope test."""
    x, y = p
    nx, ny = x.norm_sq(), y.norm_sq()
    scale = nx + ny
    if leaf.is_origin:
        return scale <= tol * tol
    if abs(scale - leaf.radius_sq) > tol * (1 + leaf.radius_sq):
        return False
    if leaf.is_infinite_slope:
        return nx <= tol * tol * scale
    residual = y * x.conjugate() - leaf.slope.scale(nx)
    bound = tol * nx if tol else 0
    if tol == 0:
        return residual.is_zero()
    return math.sqrt(float(residual.norm_sq())) <= bound


def sample_leaf(leaf: LeafId, n: int, seed: int, dim: int = None) -> list:
    """n points of the leaf, deterministic in the seed.

    Finite-slope leaves are parametrized as x = c*u with u a uniform unit
    octonion and c = r / sqrt(1 + |m|^2), y = m*x; infinite-slope leaves as
    (0, r*u).  The origin yields n copies of (0, 0).  The dimension is read
    off a finite slope; for origin/infinity leaves it defaults to 8 unless
    given.
    """
    if n < 1:
        raise ValueError("need n >= 1 points")
    if not leaf.is_origin and not leaf.is_infinite_slope:
        dim = leaf.slope.dim
    elif dim is None:
        dim = 8
    if leaf.is_origin:
        z = AlgebraElement.zero(dim)
        return [PointD2(z, z)] * n
    rng = np.random.default_rng(seed)
    r = math.sqrt(float(leaf.radius_sq))
    pts = []
    units = rng.normal(size=(n, dim))
    units /= np.linalg.norm(units, axis=1, keepdims=True)
    for row in units:
        u = from_array(row)
        if leaf.is_infinite_slope:
            pts.append(PointD2(AlgebraElement.zero(dim), u.scale(r)))
        else:
            m = leaf.slope
            c = r / math.sqrt(1.0 + float(m.norm_sq()))
            x = u.scale(c)
            pts.append(PointD2(x, m * x))
    return pts


def export_csv(points, path):
    """One row per point; float columns x0..x{d-1}, y0..y{d-1}, with header."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        dim = points[0].x.dim if points else 8
        writer.writerow(["x%d" % i for i in range(dim)] + ["y%d" % i for i in range(dim)])
        for p in points:
            writer.writerow(
                ["%.17g" % float(c) for c in p.x.coeffs]
                + ["%.17g" % float(c) for c in p.y.coeffs]
            )


def batch_multiply(slope: np.ndarray, xs: np.ndarray, dim: int) -> np.ndarray:
    """Row-wise products slope * xs[i] through the structure tensor."""
    M = structure_tensor(dim)
    return np.einsum("ijk,j,ni->nk", M, slope, xs)


# -- the right-multiplication counterexample -------------------------------


def right_mult_counterexample() -> VerificationReport:
    """Right multiplication by unit octonions does not fibrate the 15-sphere.

    With (x, y) proportional to (e1, e2) and u1 = e5, u2 = e4, the two
    equations (x*u1)*u2 = x*u3 and (y*u1)*u2 = y*u3 demand different u3:
    -e1 and +e1.  Solutions are computed exactly over the rationals; they do
    not depend on the positive scaling that puts (x, y) on the unit sphere.
    In the associative algebras the same construction always yields the
    single solution u3 = u1*u2.
    """
    with timed_report("counterexample", {}) as report:
        e = [AlgebraElement.basis(8, i) for i in range(8)]
        x, y = e[1], e[2]
        u1, u2 = e[5], e[4]
        u3_first = x.inverse() * ((x * u1) * u2)
        u3_second = y.inverse() * ((y * u1) * u2)
        report.add(
            "first_equation",
            "(x*u1)*u2 = x*u3 solved by u3 = -e1",
            u3_first == -e[1] and ((x * u1) * u2 == x * u3_first),
            u3=[str(c) for c in u3_first.coeffs],
        )
        report.add(
            "second_equation",
            "(y*u1)*u2 = y*u3 solved by u3 = +e1",
            u3_second == e[1] and ((y * u1) * u2 == y * u3_second),
            u3=[str(c) for c in u3_second.coeffs],
        )
        report.add(
            "no_common_unit",
            "the two solutions disagree, so the 7-spheres are not fibers",
            u3_first != u3_second,
        )
        # associative control: quaternions admit the common solution u1*u2
        import random as _random

        rng = _random.Random(7)
        ok = True
        for _ in range(20):
            qx = random_rational_element(rng, 4)
            qy = random_rational_element(rng, 4)
            q1 = random_rational_element(rng, 4)
            q2 = random_rational_element(rng, 4)
            if qx.is_zero() or qy.is_zero():
                continue
            s1 = qx.inverse() * ((qx * q1) * q2)
            s2 = qy.inverse() * ((qy * q1) * q2)
            if not (s1 == q1 * q2 and s2 == q1 * q2):
                ok = False
        report.add(
            "quaternion_control",
            "at dim 4 both equations give u3 = u1*u2 (associativity)",
            ok,
            samples=20,
        )
    return report


# -- leaf suite -------------------------------------------------------------


def leaf_dimension_at(x, y, dim: int, tol: float = 1e-8) -> int:
    """Dimension of the leaf through a numeric point, via the tangency system."""
    from .foliation import J_nullspace_at_point

    basis = J_nullspace_at_point(np.asarray(x, float), np.asarray(y, float), dim, tol)
    return basis.shape[1]


def verify_leaves(dim: int, samples: int, seed: int, tol: float) -> VerificationReport:
    """Randomized leaf-decomposition suite at the given algebra dimension."""
    with timed_report(
        "leaves", {"dim": dim, "samples": samples, "seed": seed, "tol": tol}
    ) as report:
        rng = derived_rng(seed, 0)

        # scale invariance of the slope
        ok = True
        worst = 0.0
        for _ in range(samples):
            x = from_array(rng.normal(size=dim))
            m = from_array(rng.normal(size=dim))
            lam = float(rng.uniform(0.3, 3.0))
            p = PointD2(x, m * x)
            q = PointD2(x.scale(lam), (m * x).scale(lam))
            cp, cq = classify(p), classify(q)
            res = float((cp.slope - cq.slope).norm_sq()) ** 0.5
            worst = max(worst, res)
            ok = ok and res <= tol
        report.add(
            "slope_scale_invariance",
            "classify((l*x, l*m*x)) has the slope of classify((x, m*x))",
            ok,
            max_residual=worst,
        )

        # sampled leaves live on their sphere and line
        rng = derived_rng(seed, 1)
        worst_sphere = worst_slope = 0.0
        for k in range(4):
            r2 = float(rng.uniform(0.25, 4.0))
            if k < 3:
                leaf = LeafId(from_array(rng.normal(size=dim)), r2)
            else:
                leaf = LeafId(INFINITY, r2)
            pts = sample_leaf(leaf, max(samples // 4, 8), seed + k, dim=dim)
            for p in pts:
                worst_sphere = max(
                    worst_sphere, abs(float(p.x.norm_sq() + p.y.norm_sq()) - r2)
                )
                if not on_leaf(p, leaf, tol):
                    worst_slope = float("inf")
        report.add(
            "sampled_points_on_leaf",
            "|p|^2 = r^2 and y = m*x for every sampled leaf point",
            worst_sphere <= tol and worst_slope <= tol,
            max_sphere_residual=worst_sphere,
        )

        # same_leaf distinguishes slopes
        rng = derived_rng(seed, 2)
        ok = True
        for _ in range(samples // 4 or 8):
            x = from_array(rng.normal(size=dim))
            m1 = from_array(rng.normal(size=dim))
            m2 = from_array(rng.normal(size=dim))
            nx = float(x.norm_sq()) ** 0.5
            xs = x.scale(1.0 / nx)
            p = PointD2(xs, m1 * xs)
            q = PointD2(xs, m2 * xs)
            if not same_leaf(p, p, tol):
                ok = False
            if float((m1 - m2).norm_sq()) > 1e-6 and same_leaf(p, q, tol):
                ok = False
        report.add(
            "same_leaf_separates_slopes",
            "same_leaf(p, p) and not same_leaf((x, m*x), (x, m'*x)) for m != m'",
            ok,
        )

        # unit-sphere leaf dimension per algebra (0, 1, 3, 7 along the tower)
        expected = {1: 0, 2: 1, 4: 3, 8: 7}[dim]
        rng = derived_rng(seed, 3)
        dims_seen = set()
        for _ in range(8):
            v = rng.normal(size=2 * dim)
            v /= np.linalg.norm(v)
            dims_seen.add(leaf_dimension_at(v[:dim], v[dim:], dim))
        report.add(
            "unit_sphere_leaf_dimension",
            "leaves through generic points of S(1) have dimension %d" % expected,
            dims_seen == {expected},
            observed=sorted(dims_seen),
        )
    return report
