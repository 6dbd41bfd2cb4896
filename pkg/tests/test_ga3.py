import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nestcalc.errors import DomainError
from nestcalc.ga3 import (
    E1, E2, E3, E12, E13, E23, E123, ONE,
    Multivector, dot, geometric_product, grade_part, is_vector, max_abs_diff, norm, vector, vector_inverse,
)

coef = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
multivectors = st.tuples(*[coef] * 8).map(Multivector)
vectors = st.tuples(coef, coef, coef).map(lambda t: vector(*t))


def test_basis_squares_and_anticommutation():
    basis = (E1, E2, E3)
    for i, a in enumerate(basis):
        assert geometric_product(a, a) == ONE
        for b in basis[i + 1:]:
            assert geometric_product(a, b) == -geometric_product(b, a)


def test_blade_products():
    assert E1 * E2 == E12
    assert E1 * E3 == E13
    assert E2 * E3 == E23
    assert E12 * E3 == E123
    assert E12 * E12 == -ONE
    assert E123 * E123 == -ONE
    # the pseudoscalar commutes with everything in 3D
    for b in (E1, E2, E3, E12, E13, E23):
        assert E123 * b == b * E123


@settings(max_examples=100, deadline=None)
@given(multivectors, multivectors, multivectors)
def test_associativity(a, b, c):
    assert max_abs_diff((a * b) * c, a * (b * c)) <= 1e-10 * (1 + norm(a) * norm(b) * norm(c))


@settings(max_examples=100, deadline=None)
@given(vectors, vectors)
def test_symmetrized_product_is_twice_dot(a, b):
    s = a * b + b * a
    expected = 2 * float(np.dot(a.vector_part, b.vector_part))
    assert s.scalar_part == pytest.approx(expected, abs=1e-10)
    assert max(abs(c) for c in s.coeffs[1:]) <= 1e-10


@settings(max_examples=50, deadline=None)
@given(vectors)
def test_vector_square_is_length(v):
    vv = v * v
    assert vv.scalar_part == pytest.approx(sum(c * c for c in v.vector_part), abs=1e-10)
    assert max(abs(c) for c in vv.coeffs[1:]) <= 1e-10


def test_vector_inverse():
    v = vector(1.0, 2.0, 2.0)
    inv = vector_inverse(v)
    assert max_abs_diff(v * inv, ONE) < 1e-15
    assert inv.vector_part == pytest.approx((1 / 9, 2 / 9, 2 / 9))


def test_vector_inverse_errors():
    with pytest.raises(DomainError):
        vector_inverse(vector(0.0, 0.0, 0.0))
    with pytest.raises(ValueError):
        vector_inverse(E12)


def test_grade_part_and_errors():
    a = Multivector(tuple(float(i + 1) for i in range(8)))
    assert grade_part(a, 0) == Multivector.scalar(1.0)
    assert grade_part(a, 2).coeffs == (0, 0, 0, 0, 5.0, 6.0, 7.0, 0)
    total = grade_part(a, 0) + grade_part(a, 1) + grade_part(a, 2) + grade_part(a, 3)
    assert total == a
    with pytest.raises(ValueError):
        grade_part(a, 4)


def test_involutions():
    a = Multivector(tuple(float(i + 1) for i in range(8)))
    assert a.reverse().coeffs == (1, 2, 3, 4, -5, -6, -7, -8)
    assert a.grade_involution().coeffs == (1, -2, -3, -4, 5, 6, 7, -8)
    assert a.conjugate().coeffs == (1, -2, -3, -4, -5, -6, -7, 8)


def test_reverse_is_antiautomorphism():
    rng = np.random.default_rng(3)
    from nestcalc.ga3 import random_multivector

    for _ in range(20):
        a, b = random_multivector(rng), random_multivector(rng)
        assert max_abs_diff((a * b).reverse(), b.reverse() * a.reverse()) < 1e-12


def test_dot_and_vector_helpers():
    assert dot(vector(1, 2, 3), vector(4, 5, 6)) == 32
    assert is_vector(vector(1, 2))
    assert not is_vector(E12 + E1)
    assert vector(3.0, 4.0).is_planar()
    assert norm(vector(3.0, 4.0)) == 5.0


def test_json_round_trip():
    a = Multivector(tuple(float(i) / 3 for i in range(8)))
    assert Multivector.from_json(a.to_json()) == a


def test_rejects_wrong_length():
    with pytest.raises(ValueError):
        Multivector((1.0, 2.0))


def test_bivector_rotates_plane_vector():
    # x-hat e12 is x-hat turned by a right angle in the e1 e2 plane
    t = 0.7
    xhat = vector(math.cos(t), math.sin(t))
    turned = xhat * E12
    assert turned.vector_part == pytest.approx((-math.sin(t), math.cos(t), 0.0))
