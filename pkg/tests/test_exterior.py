import numpy as np
import pytest
from hypothesis import given, settings

from g2solitons.exterior import (
    PHI0, VOL0, DegreeZero, KForm, ScalarModeMismatch, basis_vector, compound, gl_act,
    interior, parse_form, random_form, signed_permutation_matrix,
)
from g2solitons.scalar import Scalar, diag, identity

from helpers import random_invertible, seeds

e = KForm.basis


def test_wedge_basics():
    assert e(1) ^ e(2) == e(1, 2)
    assert (e(1, 2) ^ e(1, 2)).is_zero()
    assert e(2) ^ e(1) == -e(1, 2)
    assert (e(1, 2, 3) ^ e(4, 5, 6, 7)) == VOL0


def test_wedge_past_top_degree_is_zero():
    w = e(1, 2, 3, 4) ^ e(5, 6, 7, 1)
    assert w.is_zero()


def test_wedge_mode_mismatch():
    with pytest.raises(ScalarModeMismatch):
        e(1) ^ e(2).to_float()


def test_interior_examples():
    e1, e3 = basis_vector(1), basis_vector(3)
    assert interior(e1, e(1, 2)) == e(2)
    assert interior(e3, e(1, 2)).is_zero()
    assert interior(e1, PHI0) == parse_form("e27 + e35 - e46")
    with pytest.raises(DegreeZero):
        interior(e1, KForm.constant(1))


def test_gram_expansion_of_phi0():
    a = interior(basis_vector(1), PHI0)
    assert a ^ a ^ PHI0 == VOL0 * 6


def test_parse_form():
    f = parse_form("1/2*sqrt2*e36 + e63")
    assert f == e(3, 6) * (Scalar(0, 1) / 2 - 1)
    g = parse_form("e21 + 3*e12")
    assert g == e(1, 2) * 2
    assert parse_form(str(PHI0)) == PHI0
    assert parse_form("0", 3).is_zero()


@given(seeds)
def test_graded_anticommutativity_and_associativity(seed):
    rng = np.random.default_rng(seed)
    k, l, m = rng.integers(0, 4, size=3)
    a, b, c = random_form(rng, k), random_form(rng, l), random_form(rng, m)
    assert a ^ b == (b ^ a) * ((-1) ** (k * l))
    assert (a ^ b) ^ c == a ^ (b ^ c)


def test_basis_pairs_anticommute():
    for i in range(1, 8):
        for j in range(1, 8):
            assert e(i) ^ e(j) == -(e(j) ^ e(i))


@given(seeds)
def test_interior_leibniz(seed):
    rng = np.random.default_rng(seed)
    k, l = rng.integers(1, 4, size=2)
    a, b = random_form(rng, k), random_form(rng, l)
    x = np.array([Scalar(int(v)) for v in rng.integers(-3, 4, size=7)], dtype=object)
    lhs = interior(x, a ^ b)
    rhs = (interior(x, a) ^ b) + (a ^ interior(x, b)) * ((-1) ** k)
    assert lhs == rhs
    assert interior(x, interior(x, a ^ b)).is_zero()


@given(seeds)
def test_gl_act_is_multiplicative(seed):
    rng = np.random.default_rng(seed)
    h = random_invertible(rng, irrational=True)
    a, b = random_form(rng, 2), random_form(rng, 3)
    assert gl_act(h, a ^ b) == gl_act(h, a) ^ gl_act(h, b)


@given(seeds)
def test_gl_act_is_an_action(seed):
    rng = np.random.default_rng(seed)
    h1, h2 = random_invertible(rng), random_invertible(rng)
    a = random_form(rng, 3)
    assert gl_act(h1 @ h2, a) == gl_act(h1, gl_act(h2, a))


def test_scalar_matrix_action():
    assert gl_act(identity(7), PHI0) == PHI0
    # (c^{-1/3} I) . phi = c phi with c = 8
    half = diag([Scalar(1, 0) / 2] * 7)
    assert gl_act(half, PHI0) == PHI0 * 8
    for k in range(8):
        a = KForm(k, [Scalar(i + 1) for i in range(len(KForm.zero(k).coeffs))])
        assert gl_act(diag([Scalar(3)] * 7), a) == a * (Scalar(1) / 3 ** k)


def test_compound_is_multiplicative():
    rng = np.random.default_rng(0)
    A, B = random_invertible(rng), random_invertible(rng)
    for k in (2, 3):
        lhs = compound(A @ B, k)
        rhs = compound(A, k) @ compound(B, k)
        assert all(x == y for x, y in zip(lhs.ravel(), rhs.ravel()))


def test_signed_permutation_acts_on_covectors():
    h = signed_permutation_matrix((2, -1, 3, 4, 5, 6, 7))
    # h e_1 = e_2, h e_2 = -e_1, so h.e^1 = e^2 and h.e^2 = -e^1
    assert gl_act(h, e(1)) == e(2)
    assert gl_act(h, e(2)) == -e(1)
    with pytest.raises(ValueError):
        signed_permutation_matrix((1, 1, 2, 3, 4, 5, 6))


def test_float_forms():
    rng = np.random.default_rng(3)
    a = random_form(rng, 3, mode="float")
    b = random_form(rng, 4, mode="float")
    assert (a ^ b).mode == "float"
    assert (a ^ b).allclose((b ^ a) * 1.0)


@settings(max_examples=5)
@given(seeds)
def test_float_compound_is_minors(seed):
    from itertools import combinations

    M = np.random.default_rng(seed).normal(size=(7, 7))
    for k in range(8):
        rows = list(combinations(range(7), k))
        ref = np.array([[np.linalg.det(M[np.ix_(I, J)]) if k else 1.0 for J in rows] for I in rows])
        assert np.allclose(compound(M, k), ref, atol=1e-10)
