"""Tangency map, exact nullspaces, metric checks, exact elimination."""

import numpy as np
import pytest

from ohopf import exactsolve
from ohopf.algebra import AlgebraElement, coordinate_elements
from ohopf.foliation import (
    J_map,
    J_matrix_exact,
    J_nullspace_at_point,
    lie_derivative_flat,
    linear_nullspace,
    linear_obstruction_report,
    planar_rotation_identity,
    sampled_nullspace_dimension,
    is_tangent_symbolic,
    verify_foliation,
)
from ohopf.polyring import PolyRing


def test_J_of_zero_field():
    ring = PolyRing(8)
    zero = AlgebraElement(tuple(ring.zero for _ in range(8)), 8)
    assert is_tangent_symbolic(zero, zero, ring)


def test_J_of_euler_field():
    ring = PolyRing(8)
    x, y = coordinate_elements(ring, 8)
    first, middle, last = J_map(x, y, ring)
    assert first == x.norm_sq()
    assert last == y.norm_sq()
    assert (middle - (x * y.conjugate()).scale(2)).is_zero()
    assert not is_tangent_symbolic(x, y, ring)


def test_J_matrix_exact_columns():
    x = AlgebraElement(tuple(range(1, 9)), 8)
    y = AlgebraElement(tuple(range(2, 10)), 8)
    M = J_matrix_exact(x, y)
    assert len(M) == 10 and len(M[0]) == 16
    # first row is (x, 0), last row (0, y)
    assert M[0] == list(range(1, 9)) + [0] * 8
    assert M[9] == [0] * 8 + list(range(2, 10))
    # column p of the middle block is e_p conj(y): check p = 0 gives conj(y)
    middle_col0 = [M[1 + k][0] for k in range(8)]
    assert middle_col0 == [2, -3, -4, -5, -6, -7, -8, -9]


def test_nullspace_at_point_dimension():
    rng = np.random.default_rng(4)
    for dim, expected in ((1, 0), (2, 1), (4, 3), (8, 7)):
        v = rng.normal(size=2 * dim)
        v /= np.linalg.norm(v)
        basis = J_nullspace_at_point(v[:dim], v[dim:], dim)
        assert basis.shape == (2 * dim, expected)


def test_linear_nullspace_dimensions():
    assert linear_nullspace(8)[0] == 0
    dim4, basis4 = linear_nullspace(4)
    assert dim4 == 3 and len(basis4) == 3
    dim2, basis2 = linear_nullspace(2)
    assert dim2 == 1 and len(basis2) == 1
    with pytest.raises(ValueError):
        linear_nullspace(16)


def test_linear_nullspace_basis_is_tangent():
    base = PolyRing(4)
    for ansatz in linear_nullspace(4)[1]:
        u, v = ansatz.field(base)
        assert is_tangent_symbolic(u, v, base)


def test_solver_rediscovers_vanishing_cross_blocks():
    # the ansatz allows u to depend on y and v on x; the elimination must
    # force those blocks to zero on its own
    for dim in (2, 4):
        for ansatz in linear_nullspace(dim)[1]:
            assert all(v == 0 for row in ansatz.b for v in row)
            assert all(v == 0 for row in ansatz.c for v in row)


def test_degree_mismatch_rejected():
    from ohopf.lie3 import Sec2, d1

    with pytest.raises(TypeError):
        d1(Sec2(1), PolyRing(8))


def test_sampled_oracle_agreement():
    for dim in (2, 4):
        sym = linear_nullspace(dim)[0]
        sampled, neq = sampled_nullspace_dimension(dim, seed=23)
        assert sampled == sym
        assert neq >= 4 * dim * dim


def test_right_multiplication_fields_span_quaternion_case():
    # u = x c, v = y c with c imaginary: tangent, and 3 = the nullity at dim 4
    base = PolyRing(4)
    x, y = coordinate_elements(base, 4)
    for k in (1, 2, 3):
        c = AlgebraElement.basis(4, k)
        lifted = AlgebraElement(tuple(base.const(int(v)) for v in c.coeffs), 4)
        assert is_tangent_symbolic(x * lifted, y * lifted, base)


def test_is_tangent_sampled_mode():
    from ohopf.foliation import is_tangent
    from ohopf.algebroid import anchor, constant_section

    ring = PolyRing(4)
    X = anchor(constant_section(4, 1, 0), ring)
    assert is_tangent(X.u, X.v, ring, mode="sampled", samples=10, seed=1)
    x, y = coordinate_elements(ring, 4)
    assert not is_tangent(x, y, ring, mode="sampled", samples=10, seed=1)
    with pytest.raises(ValueError):
        is_tangent(x, y, ring, mode="fuzzy")


def test_lie_derivative_rotation_and_euler():
    ring = PolyRing(1)
    x, y = ring.x(0), ring.y(0)
    rotation = [-y, x]
    lie = lie_derivative_flat(rotation, ring)
    assert all(p.is_zero() for row in lie for p in row)
    euler = [x, y]
    lie = lie_derivative_flat(euler, ring)
    assert lie[0][0] == 2 and lie[1][1] == 2 and lie[0][1].is_zero()


def test_planar_rotation_identity():
    assert planar_rotation_identity()


def test_obstruction_report():
    report = linear_obstruction_report()
    assert report.passed
    by_name = {c.name: c for c in report.checks}
    assert by_name["no_linear_tangent_fields"].info["nullspace_dimension"] == 0
    assert by_name["generators_vanish_quadratically"].info["min_total_degree"] == 2


@pytest.mark.parametrize("dim", (2, 4, 8))
def test_foliation_suite(dim):
    report = verify_foliation(dim, 20, seed=6, tol=1e-9)
    assert report.passed, [(c.name, c.info) for c in report.checks if not c.passed]


# -- exact elimination ---------------------------------------------------------


def test_exactsolve_known_nullspace():
    # x0 + x1 = 0, x1 + x2 = 0 over 3 unknowns: nullspace (1, -1, 1)
    rows = [{0: 1, 1: 1}, {1: 1, 2: 1}]
    rank, basis = exactsolve.nullspace(rows, 3)
    assert rank == 2 and len(basis) == 1
    vec = basis[0]
    for row in rows:
        assert exactsolve.dot(row, vec) == 0
    assert vec[0] == -vec[1] == vec[2]


def test_exactsolve_full_rank():
    rows = [{0: 2}, {1: -3}, {0: 1, 1: 1}]
    rank, basis = exactsolve.nullspace(rows, 2)
    assert rank == 2 and basis == []


def test_exactsolve_duplicate_rows_and_scaling():
    rows = [{0: 2, 1: 4}, {0: 1, 1: 2}, {0: -3, 1: -6}]
    rank, basis = exactsolve.nullspace(rows, 2)
    assert rank == 1 and len(basis) == 1
    assert exactsolve.dot(rows[0], basis[0]) == 0


def test_rank_dense_matches_sparse():
    rng = np.random.default_rng(5)
    M = rng.integers(-4, 5, size=(12, 7))
    M[5] = M[1] + 2 * M[2]  # force a dependence
    dense = exactsolve.rank_dense([list(map(int, row)) for row in M], 7)
    sparse, _ = exactsolve.nullspace(
        [{j: int(v) for j, v in enumerate(row) if v} for row in M], 7, want_basis=False
    )
    assert dense == sparse == int(np.linalg.matrix_rank(M))


def test_elimination_matches_numpy_rank_randomized():
    rng = np.random.default_rng(6)
    for _ in range(15):
        rows = int(rng.integers(1, 12))
        cols = int(rng.integers(1, 10))
        M = rng.integers(-3, 4, size=(rows, cols))
        if rng.random() < 0.5 and rows >= 2:
            M[-1] = M[0] - M[rows // 2]
        expected = int(np.linalg.matrix_rank(M))
        dense = exactsolve.rank_dense([list(map(int, r)) for r in M], cols)
        sparse, basis = exactsolve.nullspace(
            [{j: int(v) for j, v in enumerate(r) if v} for r in M], cols
        )
        assert dense == sparse == expected
        assert len(basis) == cols - expected
        for vec in basis:
            for r in M:
                assert sum(int(r[j]) * v for j, v in vec.items()) == 0
