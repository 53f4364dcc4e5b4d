"""Cayley-Dickson tower: tables, products, identity suites."""

import random
from fractions import Fraction

import pytest

from ohopf.algebra import (
    AlgebraElement,
    DIMS,
    associator,
    doubling_table,
    mult_table,
    octonion_table,
    random_rational_element,
    structure_tensor,
    verify_algebra_identities,
)


def E(i, dim=8):
    return AlgebraElement.basis(dim, i)


def test_doubling_reproduces_octonion_table():
    assert doubling_table(8) == octonion_table()


def test_unit_and_diagonal():
    sign, index = mult_table(8)
    for i in range(8):
        assert sign[0][i] == sign[i][0] == 1
        assert index[0][i] == index[i][0] == i
    for i in range(1, 8):
        assert sign[i][i] == -1 and index[i][i] == 0


@pytest.mark.parametrize(
    "i,j,expected",
    [
        (1, 2, (1, 3)),
        (2, 1, (-1, 3)),
        (1, 4, (1, 5)),
        (5, 4, (-1, 1)),
        (1, 7, (1, 6)),
        (2, 5, (1, 7)),
        (3, 4, (1, 7)),
        (3, 6, (1, 5)),
        (6, 5, (1, 3)),
    ],
)
def test_octonion_products(i, j, expected):
    s, k = expected
    assert E(i) * E(j) == E(k).scale(s)


def test_epsilon_relations_fix_all_signs():
    # e_i e_j = -delta_ij + eps_ijk e_k must hold for every i, j >= 1
    sign, index = mult_table(8)
    for i in range(1, 8):
        for j in range(1, 8):
            prod = E(i) * E(j)
            if i == j:
                assert prod == -E(0)
            else:
                k = index[i][j]
                assert k != 0
                assert prod == E(k).scale(sign[i][j])
                # total antisymmetry
                assert E(j) * E(i) == -prod


def test_scalar_dimensions_and_errors():
    with pytest.raises(ValueError):
        AlgebraElement((1, 2, 3))
    with pytest.raises(ValueError):
        E(1, 4) * E(1, 8)


def test_conjugate_norm_inner():
    a = AlgebraElement((1, 2, 0, 0, 0, 0, 0, 3))
    assert a.conjugate() == AlgebraElement((1, -2, 0, 0, 0, 0, 0, -3))
    assert a.norm_sq() == 1 + 4 + 9
    assert (AlgebraElement.one(8) + E(1)).norm_sq() == 2
    for i in range(8):
        for j in range(8):
            assert E(i).inner(E(j)) == (1 if i == j else 0)


def test_inverse_exact():
    rng = random.Random(0)
    for dim in (2, 4, 8):
        a = random_rational_element(rng, dim)
        b = random_rational_element(rng, dim)
        assert (a * (a.inverse() * b) - b).is_zero()
        assert ((b * a.inverse()) * a - b).is_zero()
    assert E(1).inverse() == -E(1)
    two = AlgebraElement.from_scalar(8, 2)
    assert two.inverse() == AlgebraElement.from_scalar(8, Fraction(1, 2))


def test_inverse_rejections():
    with pytest.raises(ZeroDivisionError):
        AlgebraElement.zero(8).inverse()
    from ohopf.polyring import PolyRing
    from ohopf.algebra import vector_symbol

    ring = PolyRing(0, ["a%d" % i for i in range(8)])
    with pytest.raises(TypeError):
        vector_symbol(ring, "a", 8).inverse()


def test_associator_values():
    # alternative at dim 8, associative at dim 4, nonzero witness e1, e2, e4
    a = E(1) * 2 + E(3)
    b = E(2) - E(5)
    assert associator(a, a, b).is_zero()
    assert not associator(E(1), E(2), E(4)).is_zero()
    assert associator(E(1, 4), E(2, 4), E(3, 4)).is_zero()


def test_structure_tensor_matches_table():
    import numpy as np

    M = structure_tensor(8)
    a = np.arange(1.0, 9.0)
    b = np.arange(2.0, 10.0)
    via_tensor = np.einsum("ijk,i,j->k", M, a, b)
    via_elements = (AlgebraElement(tuple(a)) * AlgebraElement(tuple(b))).as_floats()
    assert np.allclose(via_tensor, via_elements)


@pytest.mark.parametrize("dim", DIMS)
def test_identity_suite_passes(dim):
    report = verify_algebra_identities(dim, seed=1)
    assert report.passed, [c.name for c in report.checks if not c.passed]


def test_sedenion_norm_witness_recorded():
    report = verify_algebra_identities(16, seed=1)
    by_name = {c.name: c for c in report.checks}
    witness = by_name["norm_multiplicativity_fails"]
    assert witness.passed and witness.info["witness_a"] is not None
