"""Graded sections, differentials, brackets, matrices, ranks."""

import numpy as np
import pytest

from ohopf.algebra import AlgebraElement, vector_symbol, vector_names
from ohopf.algebroid import E0Section
from ohopf.lie3 import (
    Sec1,
    Sec2,
    TRANSCRIBED_TANGENCY_MATRIX,
    bracket,
    d1,
    d2,
    degree,
    generic_ranks,
    jacobiator,
    leibniz_residual,
    maps_at_point,
    resolution_matrices,
    verify_lie3,
    verify_matrix_vs_transcription,
)
from ohopf.polyring import PolyRing


def _ring_with_sections():
    names = vector_names("u", 8) + vector_names("v", 8) + vector_names("a", 8)
    names += ["mu", "nu", "t"]
    ring = PolyRing(8, names)
    X = E0Section(vector_symbol(ring, "u", 8), vector_symbol(ring, "v", 8))
    Z = Sec1(ring.poly("mu"), vector_symbol(ring, "a", 8), ring.poly("nu"))
    T = Sec2(ring.poly("t"))
    return ring, X, Z, T


def test_degrees():
    ring, X, Z, T = _ring_with_sections()
    assert degree(X) == 0 and degree(Z) == -1 and degree(T) == -2
    with pytest.raises(TypeError):
        degree("nope")


def test_d1_simple_payloads():
    ring = PolyRing(8)
    zero_elem = AlgebraElement(tuple(ring.zero for _ in range(8)), 8)
    # d1(1, 0, 0) = (x, 0)
    out = d1(Sec1(ring.one, zero_elem, ring.zero), ring)
    assert [str(p) for p in out.u.coeffs] == ["x%d" % i for i in range(8)]
    assert all(p.is_zero() for p in out.v.coeffs)
    # d1(0, 0, 1) = (0, y)
    out = d1(Sec1(ring.zero, zero_elem, ring.one), ring)
    assert all(p.is_zero() for p in out.u.coeffs)
    assert [str(p) for p in out.v.coeffs] == ["y%d" % i for i in range(8)]


def test_differentials_vanish_at_origin():
    ring, X, Z, T = _ring_with_sections()
    origin = {v.name: 0 for v in ring.variables[:16]}
    for comp in (*d1(Z, ring).u.coeffs, *d1(Z, ring).v.coeffs):
        assert comp.substitute(origin).is_zero()
    for comp in d2(T, ring).components():
        assert comp.substitute(origin).is_zero()


def test_complex_property():
    ring, X, Z, T = _ring_with_sections()
    assert d1(d2(T, ring), ring).is_zero()
    from ohopf.algebroid import anchor

    assert anchor(d1(Z, ring), ring).is_zero()


def test_self_bracket_of_degree_minus_one():
    # [(mu,a,nu), (mu,a,nu)] = 4|a|^2 - 4 mu nu
    ring, X, Z, T = _ring_with_sections()
    out = bracket(Z, Z, ring)
    expected = 4 * Z.a.inner(Z.a) - 4 * ring.poly("mu") * ring.poly("nu")
    assert (out.t - expected).is_zero()


def test_degree_zero_pairs_return_zero():
    ring, X, Z, T = _ring_with_sections()
    assert bracket(Z, T, ring) is None
    assert bracket(T, Z, ring) is None
    assert bracket(T, Sec2(ring.poly("t")), ring) is None


def test_bracket_with_t_at_origin():
    ring, X, Z, T = _ring_with_sections()
    out = bracket(X, T, ring)
    origin = {v.name: 0 for v in ring.variables[:16]}
    assert out.t.substitute(origin).is_zero()


def test_jacobiator_degree_reasons():
    ring, X, Z, T = _ring_with_sections()
    assert jacobiator(Z, Z, Z, ring) is None
    assert jacobiator(T, T, T, ring) is None
    out = jacobiator(X, Z, T, ring)
    assert out is None or out.is_zero()


def test_leibniz_residual_shapes():
    ring, X, Z, T = _ring_with_sections()
    res = leibniz_residual(X, Z, ring)
    assert res.is_zero()
    res = leibniz_residual(X, T, ring)
    assert res.is_zero()


def test_transcription_shape():
    assert len(TRANSCRIBED_TANGENCY_MATRIX) == 10
    assert all(len(row) == 16 for row in TRANSCRIBED_TANGENCY_MATRIX)


def test_matrix_report():
    report = verify_matrix_vs_transcription()
    assert report.passed, [c.info for c in report.checks if not c.passed]


def test_chain_complex_matrix_products_vanish():
    # composition of consecutive maps is the zero matrix over the
    # polynomial ring: J Rho = 0, Rho D1 = 0, D1 D2 = 0
    mats = resolution_matrices(8)

    def product_is_zero(A, B):
        rows, inner, cols = len(A), len(B), len(B[0])
        assert len(A[0]) == inner
        for i in range(rows):
            for j in range(cols):
                acc = None
                for k in range(inner):
                    term = A[i][k] * B[k][j]
                    acc = term if acc is None else acc + term
                if not acc.is_zero():
                    return False
        return True

    assert product_is_zero(mats.J, mats.Rho)
    assert product_is_zero(mats.Rho, mats.D1)
    assert product_is_zero(mats.D1, mats.D2)


def test_resolution_matrix_shapes_and_degrees():
    mats = resolution_matrices(8)
    assert (len(mats.J), len(mats.J[0])) == (10, 16)
    assert (len(mats.Rho), len(mats.Rho[0])) == (16, 16)
    assert (len(mats.D1), len(mats.D1[0])) == (16, 10)
    assert (len(mats.D2), len(mats.D2[0])) == (10, 1)
    degrees = {p.total_degree() for row in mats.Rho for p in row if not p.is_zero()}
    assert degrees == {2}


def test_maps_at_origin_are_zero():
    z = AlgebraElement.zero(8)
    Rho, D1, D2 = maps_at_point(z, z)
    assert not Rho.any() and not D1.any() and not D2.any()


def test_generic_rank_values():
    rng = np.random.default_rng(12)
    coords = rng.uniform(0.5, 2.0, 16)
    x = AlgebraElement(tuple(coords[:8]), 8)
    y = AlgebraElement(tuple(coords[8:]), 8)
    Rho, D1, D2 = maps_at_point(x, y)
    ranks = tuple(np.linalg.matrix_rank(M, tol=1e-8) for M in (Rho, D1, D2))
    assert ranks == (7, 9, 1)


def test_rank_suite():
    report = generic_ranks(20, seed=3)
    assert report.passed, [(c.name, c.info) for c in report.checks if not c.passed]


def test_symbolic_suite():
    report = verify_lie3("symbolic")
    assert report.passed, [c.name for c in report.checks if not c.passed]


def test_sampled_suite():
    report = verify_lie3("sampled", samples=3, seed=1)
    assert report.passed, [c.name for c in report.checks if not c.passed]


def test_mode_validation():
    with pytest.raises(ValueError):
        verify_lie3("numeric")


# -- detector sensitivity ---------------------------------------------------
# the suites must be able to fail: perturbed structure data may not slip
# through as identically zero


def test_broken_differential_is_detected():
    ring, X, Z, T = _ring_with_sections()
    from ohopf.algebra import coordinate_elements

    x, y = coordinate_elements(ring, 8)
    # d2 with the sign of the mu slot flipped no longer squares to zero
    broken = Sec1(y.norm_sq() * T.t, (x * y.conjugate()).scale(T.t), -(x.norm_sq() * T.t))
    assert not d1(broken, ring).is_zero()


def test_missing_leibniz_correction_is_detected(monkeypatch):
    # with the anchor action on coefficients disabled, the graded Jacobi
    # identity on degrees (0,0,-1) must fail: the correction carries weight
    import ohopf.algebroid as algebroid_mod
    import ohopf.lie3 as lie3_mod
    from ohopf.lie3 import _sym_sections

    def no_action(X, f, ring):
        return ring.zero

    monkeypatch.setattr(lie3_mod, "vf_apply", no_action)
    monkeypatch.setattr(algebroid_mod, "vf_apply", no_action)
    ring, X, Y, W, Z1, Z2, T1, T2 = _sym_sections(8)
    out = jacobiator(X, Y, Z1, ring)
    assert out is not None and not out.is_zero()


def test_perturbed_transcription_is_detected():
    import ohopf.lie3 as lie3_mod

    row = list(TRANSCRIBED_TANGENCY_MATRIX[2])
    row[0] = " y1"  # flip one sign
    perturbed = TRANSCRIBED_TANGENCY_MATRIX[:2] + (tuple(row),) + TRANSCRIBED_TANGENCY_MATRIX[3:]
    original = lie3_mod.TRANSCRIBED_TANGENCY_MATRIX
    lie3_mod.TRANSCRIBED_TANGENCY_MATRIX = perturbed
    try:
        report = verify_matrix_vs_transcription()
    finally:
        lie3_mod.TRANSCRIBED_TANGENCY_MATRIX = original
    assert not report.passed
