"""Tangency to the Hopf leaves and the non-existence of linear tangent fields.

A vector field (u, v) on D^2 is tangent to the leaf decomposition iff

    <x, u> = 0,   u*conj(y) + x*conj(v) = 0,   <y, v> = 0,

which this module packages as the map J from fields to R + D + R valued
functions.  On top of J it provides:

  * symbolic tangency tests for polynomial fields,
  * fiberwise numeric nullspaces of J (leaf dimensions at a point),
  * the exact nullspace of J on fields linear in (x, y), assembled
    coefficient-wise over the rationals and solved by fraction-free
    elimination, cross-checked against a point-sampled system,
  * Lie derivatives of the flat metric and the planar rotation example
    separating geometric from module-compatible metrics.

The linear ansatz deliberately keeps the cross blocks: u = A x + B y and
v = C x + D y with 4 n^2 unknowns, so the solver has to rediscover that the
cross terms vanish rather than assume it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exactsolve
from .algebra import AlgebraElement, coordinate_elements
from .polyring import PolyRing, Polynomial
from .report import VerificationReport, derived_rng, timed_report

EXPECTED_NULLITY = {2: 1, 4: 3, 8: 0}


# -- the characterization map J --------------------------------------------


def J_map(u: AlgebraElement, v: AlgebraElement, ring: PolyRing):
    """(<x,u>, u*conj(y) + x*conj(v), <y,v>) with symbolic base point."""
    dim = ring.base_dim
    x, y = coordinate_elements(ring, dim)
    return x.inner(u), u * y.conjugate() + x * v.conjugate(), y.inner(v)


def J_components(u: AlgebraElement, v: AlgebraElement, ring: PolyRing):
    """J flattened to dim+2 polynomials."""
    first, middle, last = J_map(u, v, ring)
    return [first, *middle.coeffs, last]


def is_tangent_symbolic(u: AlgebraElement, v: AlgebraElement, ring: PolyRing) -> bool:
    """Exact tangency of a polynomial field: every J component vanishes."""
    return all(_aszero(c) for c in J_components(u, v, ring))


def is_tangent(
    u: AlgebraElement,
    v: AlgebraElement,
    ring: PolyRing,
    mode: str = "symbolic",
    samples: int = 25,
    seed: int = 0,
    tol: float = 1e-9,
) -> bool:
    """Tangency of a polynomial field, exact or spot-checked at random points."""
    if mode == "symbolic":
        return is_tangent_symbolic(u, v, ring)
    if mode != "sampled":
        raise ValueError("mode is 'symbolic' or 'sampled'")
    rng = random.Random(seed)
    comps = J_components(u, v, ring)
    names = [var.name for var in ring.variables]
    for _ in range(samples):
        at = {name: Fraction(rng.randint(-8, 8), 4) for name in names}
        for comp in comps:
            if abs(float(comp.evaluate(at))) > tol:
                return False
    return True


def _aszero(c) -> bool:
    return c.is_zero() if isinstance(c, Polynomial) else not c


def J_matrix_exact(x: AlgebraElement, y: AlgebraElement):
    """Matrix of J at a fixed point, columns ordered u_0..u_{n-1}, v_0..v_{n-1}.

    Entries stay in the scalar backend of the point, so integer points give
    integer matrices.
    """
    dim = x.dim
    cols = []
    ycj = y.conjugate()
    for p in range(dim):
        e = AlgebraElement.basis(dim, p)
        prod = e * ycj
        cols.append([x.inner(e), *prod.coeffs, 0])
    for p in range(dim):
        e = AlgebraElement.basis(dim, p)
        prod = x * e.conjugate()
        cols.append([0, *prod.coeffs, y.inner(e)])
    return [[cols[j][i] for j in range(2 * dim)] for i in range(dim + 2)]


def J_matrix_at(x, y, dim: int) -> np.ndarray:
    """Float matrix of J at a numeric point."""
    xe = AlgebraElement(tuple(float(v) for v in x), dim)
    ye = AlgebraElement(tuple(float(v) for v in y), dim)
    return np.array(J_matrix_exact(xe, ye), dtype=float)


def J_nullspace_at_point(x, y, dim: int, tol: float = 1e-8) -> np.ndarray:
    """Orthonormal basis (columns) of the tangent space to the leaf at a point."""
    M = J_matrix_at(x, y, dim)
    u, s, vt = np.linalg.svd(M)
    if s.size and s[0] > 0:
        rank = int(np.sum(s > tol * s[0]))
    else:
        rank = 0
    return vt[rank:].T


# -- linear tangent fields ---------------------------------------------------


@dataclass(frozen=True)
class LinearFieldAnsatz:
    """u = A x + B y, v = C x + D y with rational matrix entries."""

    a: tuple
    b: tuple
    c: tuple
    d: tuple

    @property
    def dim(self):
        return len(self.a)

    def field(self, ring: PolyRing):
        """The ansatz as a polynomial field over the given base ring."""
        dim = self.dim
        xs = [ring.x(i) for i in range(dim)]
        ys = [ring.y(i) for i in range(dim)]
        u = []
        v = []
        for p in range(dim):
            up = ring.zero
            vp = ring.zero
            for l in range(dim):
                up = up + xs[l] * self.a[p][l] + ys[l] * self.b[p][l]
                vp = vp + xs[l] * self.c[p][l] + ys[l] * self.d[p][l]
            u.append(up)
            v.append(vp)
        return AlgebraElement(tuple(u), dim), AlgebraElement(tuple(v), dim)


def _unknown_names(dim: int):
    return [
        "%s%d_%d" % (blk, p, l)
        for blk in ("A", "B", "C", "D")
        for p in range(dim)
        for l in range(dim)
    ]


def _ansatz_rows(dim: int):
    """Homogeneous system on the 4 n^2 unknowns, one row per (component,
    base monomial) pair of the symbolic expansion of J(ansatz)."""
    ring = PolyRing(dim, _unknown_names(dim))
    n2 = dim * dim
    xs = [ring.x(i) for i in range(dim)]
    ys = [ring.y(i) for i in range(dim)]

    def unk(block, p, l):
        return ring.poly("%s%d_%d" % (block, p, l))

    u = []
    v = []
    for p in range(dim):
        up = ring.zero
        vp = ring.zero
        for l in range(dim):
            up = up + unk("A", p, l) * xs[l] + unk("B", p, l) * ys[l]
            vp = vp + unk("C", p, l) * xs[l] + unk("D", p, l) * ys[l]
        u.append(up)
        v.append(vp)
    comps = J_components(
        AlgebraElement(tuple(u), dim), AlgebraElement(tuple(v), dim), ring
    )

    nbase = 2 * dim
    base_mask = (1 << (5 * nbase)) - 1
    grouped: dict = {}
    for ci, pol in enumerate(comps):
        for key, coeff in pol.terms.items():
            base_key = key & base_mask
            sec = key >> (5 * nbase)
            assert sec and sec & (sec - 1) == 0, "expected exactly one unknown per term"
            unknown = (sec.bit_length() - 1) // 5
            row = grouped.setdefault((ci, base_key), {})
            row[unknown] = row.get(unknown, 0) + coeff
    rows = [{c: v for c, v in row.items() if v} for row in grouped.values()]
    return [r for r in rows if r], 4 * n2


def linear_nullspace(dim: int):
    """Exact dimension and basis of the linear tangent fields.

    Returns (dimension, basis) with basis a list of LinearFieldAnsatz.  The
    answer is 0 at dimension 8: non-associativity kills every linear field.
    """
    if dim not in (2, 4, 8):
        raise ValueError("linear nullspace is computed for dims 2, 4, 8")
    rows, ncols = _ansatz_rows(dim)
    rank, basis = exactsolve.nullspace(rows, ncols)
    n2 = dim * dim
    out = []
    for vec in basis:
        mats = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(4)]
        for idx, val in vec.items():
            block, rest = divmod(idx, n2)
            p, l = divmod(rest, dim)
            mats[block][p][l] = Fraction(val)
        out.append(
            LinearFieldAnsatz(
                tuple(tuple(r) for r in mats[0]),
                tuple(tuple(r) for r in mats[1]),
                tuple(tuple(r) for r in mats[2]),
                tuple(tuple(r) for r in mats[3]),
            )
        )
    return ncols - rank, out


def sampled_nullspace_dimension(dim: int, seed: int, extra_points: int = 3):
    """Independent oracle: the same unknowns constrained at random points.

    Evaluates J on the ansatz at random integer points, giving at least
    4 n^2 equations, and computes the exact rank by fraction-free
    elimination.  J has rank n+1 at a generic point, so roughly
    4 n^2 / (n+1) points are needed before the sampled rank can saturate.
    Solutions of the symbolic system satisfy every sampled equation, so
    equal nullities certify the symbolic computation.
    """
    rng = random.Random(seed)
    n2 = dim * dim
    ncols = 4 * n2
    needed = -(-ncols // (dim + 1)) + extra_points
    rows = []
    for _ in range(needed):
        coords = [rng.randint(-3, 3) for _ in range(2 * dim)]
        if not any(coords):
            coords[0] = 1
        x = AlgebraElement(tuple(coords[:dim]), dim)
        y = AlgebraElement(tuple(coords[dim:]), dim)
        M = J_matrix_exact(x, y)
        for c in range(dim + 2):
            row = [0] * ncols
            for p in range(dim):
                mu = M[c][p]
                mv = M[c][dim + p]
                for l in range(dim):
                    xl, yl = x.coeffs[l], y.coeffs[l]
                    if mu:
                        if xl:
                            row[p * dim + l] += mu * xl
                        if yl:
                            row[n2 + p * dim + l] += mu * yl
                    if mv:
                        if xl:
                            row[2 * n2 + p * dim + l] += mv * xl
                        if yl:
                            row[3 * n2 + p * dim + l] += mv * yl
            rows.append(row)
    rank = exactsolve.rank_dense(rows, ncols)
    return ncols - rank, len(rows)


# -- metric compatibility -----------------------------------------------------


def lie_derivative_flat(components, ring: PolyRing):
    """(L_X g)_ij = d_i X_j + d_j X_i for the flat metric.

    components: one polynomial per base variable, in the ring's base
    variable order x0..x{d-1}, y0..y{d-1}.
    """
    names = [v.name for v in ring.variables[: 2 * ring.base_dim]]
    if len(components) != len(names):
        raise ValueError("field must have one component per base variable")
    n = len(names)
    return [
        [
            components[j].derive(names[i]) + components[i].derive(names[j])
            for j in range(n)
        ]
        for i in range(n)
    ]


def symmetrized_outer(alpha, beta, ring: PolyRing):
    """alpha_i beta_j + alpha_j beta_i (twice the symmetric product)."""
    n = len(alpha)
    return [[alpha[i] * beta[j] + alpha[j] * beta[i] for j in range(n)] for i in range(n)]


def planar_rotation_identity() -> bool:
    """Cleared-denominator identity of the planar example.

    For V = (x^2+y^2)(x d_y - y d_x) on R^2 the Lie derivative of the flat
    metric equals 4 (x dx + y dy)/(x^2+y^2) symmetrized with g_flat(V); after
    clearing (x^2+y^2) both sides are polynomial and must agree exactly.
    """
    ring = PolyRing(1)
    x, y = ring.x(0), ring.y(0)
    r2 = x * x + y * y
    field = [r2 * (-y), r2 * x]
    lie = lie_derivative_flat(field, ring)
    alpha = [x, y]
    cleared = symmetrized_outer(alpha, field, ring)
    residual = [
        [r2 * lie[i][j] - 2 * cleared[i][j] for j in range(2)] for i in range(2)
    ]
    return all(p.is_zero() for row in residual for p in row)


# -- suites -------------------------------------------------------------------


def linear_obstruction_report() -> VerificationReport:
    """The two computational pillars of the no-module-metric argument.

    (a) no nonzero linear field is tangent at dimension 8, and (b) every
    generator of the tangency module vanishes to second order at the origin,
    so nothing in the module can repair a first-order metric defect.
    """
    from .algebroid import anchor, constant_section

    with timed_report("linear_obstruction", {}) as report:
        nullity, _ = linear_nullspace(8)
        report.add(
            "no_linear_tangent_fields",
            "the space of linear fields tangent to the octonionic leaves is 0",
            nullity == 0,
            nullspace_dimension=nullity,
        )
        ring = PolyRing(8)
        min_deg = None
        for p in range(8):
            for slot in (0, 1):
                sec = constant_section(8, p, slot)
                X = anchor(sec, ring)
                for comp in (*X.u.coeffs, *X.v.coeffs):
                    d = comp.min_total_degree()
                    if d is not None:
                        min_deg = d if min_deg is None else min(min_deg, d)
        report.add(
            "generators_vanish_quadratically",
            "every component of every basis generator has total degree >= 2",
            min_deg == 2,
            min_total_degree=min_deg,
        )
        report.add(
            "planar_rotation_identity",
            "(x^2+y^2) L_V g = 4 (x dx + y dy) sym g_flat(V) for V = (x^2+y^2)(x d_y - y d_x)",
            planar_rotation_identity(),
        )
    return report


def verify_foliation(dim: int, samples: int, seed: int, tol: float) -> VerificationReport:
    """Tangency suite: symbolic kernel facts plus the exact nullspace ladder."""
    if dim not in (2, 4, 8):
        raise ValueError("foliation suite runs at dims 2, 4, 8")
    from . import algebroid, leaves

    with timed_report(
        "foliation", {"dim": dim, "samples": samples, "seed": seed, "tol": tol}
    ) as report:
        # anchor image sits inside ker J, symbolically in all 4n variables
        names = ["u%d" % i for i in range(dim)] + ["v%d" % i for i in range(dim)]
        ring = PolyRing(dim, names)
        from .algebra import vector_symbol

        u = vector_symbol(ring, "u", dim)
        v = vector_symbol(ring, "v", dim)
        X = algebroid.anchor(algebroid.E0Section(u, v), ring)
        report.add(
            "anchor_image_tangent",
            "J(rho(u, v)) = 0 for symbolic constant (u, v)",
            is_tangent_symbolic(X.u, X.v, ring),
        )

        # the Euler field is not tangent: J(x, y) = (|x|^2, 2 x conj(y), |y|^2)
        base = PolyRing(dim)
        x, y = coordinate_elements(base, dim)
        first, middle, last = J_map(x, y, base)
        euler_ok = (
            first == x.norm_sq()
            and last == y.norm_sq()
            and (middle - (x * y.conjugate()).scale(2)).is_zero()
            and not is_tangent_symbolic(x, y, base)
        )
        report.add(
            "euler_field_not_tangent",
            "J(x, y) = (|x|^2, 2 x*conj(y), |y|^2) != 0",
            euler_ok,
        )
        zero_field = AlgebraElement(tuple(base.zero for _ in range(dim)), dim)
        report.add(
            "zero_field_tangent",
            "J(0, 0) = 0",
            is_tangent_symbolic(zero_field, zero_field, base),
        )

        # exact linear nullspace and its sampled cross-check
        nullity, basis = linear_nullspace(dim)
        expected = EXPECTED_NULLITY[dim]
        report.add(
            "linear_nullspace_dimension",
            "dim of linear tangent fields is %d" % expected,
            nullity == expected,
            dimension=nullity,
        )
        sampled, neq = sampled_nullspace_dimension(dim, seed)
        report.add(
            "linear_nullspace_sampled_oracle",
            "point-sampled system of >= 4 n^2 equations has the same nullity",
            sampled == nullity,
            sampled_dimension=sampled,
            equations=neq,
        )
        basis_ok = True
        for ans in basis:
            fu, fv = ans.field(base)
            if not is_tangent_symbolic(fu, fv, base):
                basis_ok = False
        report.add(
            "nullspace_basis_tangent",
            "every basis ansatz satisfies J = 0 symbolically",
            basis_ok,
            basis_size=len(basis),
        )
        if dim in (2, 4):
            # the surviving fields are right multiplications by imaginaries
            ok = True
            for k in range(1, dim):
                c = AlgebraElement.basis(dim, k)
                xc = x * AlgebraElement(tuple(base.const(int(b)) for b in c.coeffs), dim)
                yc = y * AlgebraElement(tuple(base.const(int(b)) for b in c.coeffs), dim)
                if not is_tangent_symbolic(xc, yc, base):
                    ok = False
            report.add(
                "right_multiplication_generators",
                "u = x*c, v = y*c is tangent for every imaginary basis c",
                ok,
                count=dim - 1,
            )

        # flow of a tangent field stays on its leaf
        from scipy.integrate import solve_ivp

        rng = derived_rng(seed, 5)
        worst = 0.0
        ok = True
        for _ in range(3):
            cu = AlgebraElement(tuple(rng.normal(size=dim)), dim)
            cv = AlgebraElement(tuple(rng.normal(size=dim)), dim)
            p0 = rng.normal(size=2 * dim)
            p0 /= np.linalg.norm(p0)

            def rhs(_t, state):
                xs = AlgebraElement(tuple(state[:dim]), dim)
                ys = AlgebraElement(tuple(state[dim:]), dim)
                du, dv = algebroid.anchor_at(cu, cv, xs, ys)
                return [*du.coeffs, *dv.coeffs]

            sol = solve_ivp(rhs, (0.0, 0.5), p0, rtol=1e-11, atol=1e-12, dense_output=True)
            start = leaves.PointD2(
                AlgebraElement(tuple(p0[:dim]), dim), AlgebraElement(tuple(p0[dim:]), dim)
            )
            for t in (0.1, 0.3, 0.5):
                state = sol.sol(t)
                pt = leaves.PointD2(
                    AlgebraElement(tuple(state[:dim]), dim),
                    AlgebraElement(tuple(state[dim:]), dim),
                )
                if not leaves.same_leaf(start, pt, max(tol, 1e-6)):
                    ok = False
                worst = max(worst, abs(float(np.linalg.norm(state) - 1.0)))
        report.add(
            "tangent_flow_stays_on_leaf",
            "integral curves of anchor fields keep classify(.) constant",
            ok,
            max_norm_drift=worst,
        )

        if dim == 8:
            report.extend(linear_obstruction_report())
    return report
