import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from g2solitons import catalog
from g2solitons.exterior import KForm, gl_act, parse_form, random_form
from g2solitons.liealg import (
    JacobiError, LieAlgebra, ce_d, check_isomorphism, derivation_space, exp_nilpotent,
    is_automorphism, is_derivation, is_nilpotent, lie_derivative, lower_central_series,
    random_automorphism, validate_jacobi,
)
from g2solitons.scalar import SQRT2, Scalar, SingularMatrix, diag, identity, inverse, zeros

from helpers import seeds

WITH_FORMS = ("n1", "n2", "n3", "n4", "n5", "n6", "n7")
e = KForm.basis


def brute_jacobi_failures(triples):
    """Independent Jacobi check on a float bracket table."""
    C = np.zeros((7, 7, 7))
    for i, j, k, c in triples:
        C[i - 1, j - 1, k - 1] += float(c)
        C[j - 1, i - 1, k - 1] -= float(c)
    br = lambda x, y: np.einsum("i,j,ijk->k", x, y, C)
    E = np.eye(7)
    bad = []
    for i, j, k in itertools.combinations(range(7), 3):
        s = br(br(E[i], E[j]), E[k]) + br(br(E[j], E[k]), E[i]) + br(br(E[k], E[i]), E[j])
        if np.abs(s).max() > 1e-12:
            bad.append((i + 1, j + 1, k + 1))
    return bad


def test_jacobi_abelian_and_n3():
    assert validate_jacobi(LieAlgebra([]))
    assert validate_jacobi(catalog.get("n3", {"a": 2, "b": 1, "c": 1}).algebra)


def test_jacobi_corrupted_n3_matches_brute_force():
    base = list(catalog.get("n3", {"a": 2, "b": 1, "c": 1}).algebra.brackets())
    bad = base + [(4, 5, 6, Scalar(1))]
    expected = brute_jacobi_failures(bad)
    assert expected  # [[e1,e2],e5] = -2[e4,e5] = -2e6 while the rest vanish
    assert (1, 2, 5) in expected
    report = validate_jacobi(LieAlgebra(bad, check=False))
    assert list(report.failures) == expected
    with pytest.raises(JacobiError):
        LieAlgebra(bad)


@pytest.mark.parametrize("name", catalog.NAMES)
def test_catalog_is_nilpotent(name, entries):
    g = entries[name].algebra
    assert validate_jacobi(g)
    assert is_nilpotent(g)
    assert lower_central_series(g)[-1] == 0


def test_differential_on_n3_one_forms():
    a, b, c = Scalar(2), Scalar(3), Scalar(5)
    g = catalog.get("n3", {"a": a, "b": b, "c": c}, check_positive=False).algebra
    assert ce_d(g, e(4)) == e(1, 2) * a
    assert ce_d(g, e(5)) == e(1, 3) * b
    assert ce_d(g, e(6)) == e(2, 3) * c
    for i in (1, 2, 3, 7):
        assert ce_d(g, e(i)).is_zero()


def test_differential_one_form_sign():
    # (d alpha)(X, Y) = -alpha([X, Y])
    g = LieAlgebra([(1, 2, 3, Scalar(1))])
    assert ce_d(g, e(3)) == -e(1, 2)


@pytest.mark.parametrize("params", [
    {"a": 2, "b": 1, "c": 1}, {"a": 1, "b": 1, "c": 1}, {"a": 3, "b": Scalar(1, 0) / 2, "c": 5},
])
def test_d_phi3(params):
    en = catalog.get("n3", params, check_positive=False)
    a, b, c = (Scalar.coerce(params[k]) for k in "abc")
    assert ce_d(en.algebra, en.form) == e(1, 2, 3, 7) * (a - b - c)


@pytest.mark.parametrize("params", [
    {"a": 1, "b": 2, "c": 3, "d": 5}, {"a": SQRT2, "b": 1, "c": SQRT2, "d": 1},
])
def test_d_phi4(params):
    en = catalog.get("n4", params, check_positive=False)
    a, b, c, d = (Scalar.coerce(params[k]) for k in "abcd")
    assert ce_d(en.algebra, en.form) == e(1, 2, 4, 7) * (a - c) + e(1, 3, 4, 5) * (d - b)


@pytest.mark.parametrize("name", WITH_FORMS + ("n8", "n9", "n10", "n11", "n12"))
def test_dd_zero(name, entries):
    g = entries[name].algebra
    rng = np.random.default_rng(len(name))
    for k in range(6):
        for _ in range(3):
            a = random_form(rng, k)
            assert ce_d(g, ce_d(g, a)).is_zero()


def test_d_is_antiderivation():
    g = catalog.get("n6").algebra
    rng = np.random.default_rng(5)
    for k, l in ((1, 1), (1, 2), (2, 3)):
        a, b = random_form(rng, k), random_form(rng, l)
        assert ce_d(g, a ^ b) == (ce_d(g, a) ^ b) + (a ^ ce_d(g, b)) * ((-1) ** k)


def float_derivation_dimension(g):
    """Independent oracle: float SVD of the derivation equations."""
    C = np.array([[[float(x) for x in row] for row in m] for m in g.C])
    rows = []
    for i, j in itertools.combinations(range(7), 2):
        for k in range(7):
            r = np.zeros((7, 7))
            # D[e_i,e_j] - [De_i,e_j] - [e_i,De_j], coefficient of e_k
            for l in range(7):
                r[k, l] += C[i, j, l]
            for p in range(7):
                r[p, i] -= C[p, j, k]
                r[p, j] -= C[i, p, k]
            rows.append(r.ravel())
    s = np.linalg.svd(np.array(rows), compute_uv=False)
    return 49 - int(np.sum(s > 1e-9 * s[0])) if s[0] > 0 else 49


@pytest.mark.parametrize("name", catalog.NAMES)
def test_derivation_dimension_matches_float_oracle(name, entries):
    g = entries[name].algebra
    der = derivation_space(g)
    assert der.dim == float_derivation_dimension(g)
    assert all(is_derivation(g, B) for B in der)


def test_derivation_examples():
    assert derivation_space(LieAlgebra([])).dim == 49
    g3 = catalog.get("n3", {"a": 1, "b": 1, "c": 1}, check_positive=False).algebra
    assert is_derivation(g3, diag([1, 1, 1, 2, 2, 2, 2]))
    assert not is_derivation(g3, diag([1, 1, 1, 1, 1, 1, 1]))
    g4 = catalog.get("n4").algebra
    D = catalog.expected_tables()["n4"].matrix("D")
    assert is_derivation(g4, D)
    assert not is_derivation(g4, D.T)


def test_lie_derivative_examples():
    from g2solitons.exterior import PHI0
    assert lie_derivative(PHI0, identity(7)) == PHI0 * 3
    en = catalog.get("n3", {"a": 2, "b": 1, "c": 1})
    d = Scalar(-3)
    got = lie_derivative(en.form, diag([1, 1, 1, 2, 2, 2, 2]) * d)
    want = e(1, 2, 3) * (3 * d) + parse_form("e145 + e167 + e246 - e257 - e347 - e356") * (5 * d)
    assert got == want
    # n4 at a = sqrt2, b = 1; the two ab e^{146} terms cancel
    g4 = catalog.get("n4")
    L = lie_derivative(g4.form, catalog.expected_tables()["n4"].matrix("D"))
    ab = SQRT2
    want = (e(1, 2, 4) * 5 + e(4, 5, 6) * 9 - e(1, 4, 6) * ab - e(3, 4, 7) * 9 - e(1, 3, 5) * 7
            - e(1, 6, 7) * 9 + e(1, 4, 6) * ab - e(2, 5, 7) * 9 + e(1, 2, 7) * ab + e(2, 4, 5) * ab
            + e(2, 3, 6) * 9)
    assert L == want
    assert L.coeff(1, 2, 4) == 5


def test_isomorphism_examples():
    g3 = catalog.get("n3", {"a": 1, "b": 1, "c": 1}, check_positive=False).algebra
    rep = check_isomorphism(g3, g3, identity(7))
    assert rep.forward and rep.inverse
    rep = check_isomorphism(g3, g3, diag([1, 1, 1, 1, 1, 1, 2]))
    assert rep.forward  # e7 is central and never a bracket value
    assert not check_isomorphism(g3, g3, diag([2, 1, 1, 1, 1, 1, 1]))
    with pytest.raises(SingularMatrix):
        check_isomorphism(g3, g3, zeros((7, 7)))


@pytest.mark.parametrize("name", WITH_FORMS)
@settings(max_examples=10)
@given(seed=seeds)
def test_d_commutes_with_automorphisms(name, entries, seed):
    g = entries[name].algebra
    rng = np.random.default_rng(seed)
    h = random_automorphism(g, rng)
    assert is_automorphism(g, h)
    psi = random_form(rng, 3)
    assert ce_d(g, gl_act(h, psi)) == gl_act(h, ce_d(g, psi))


@pytest.mark.parametrize("name", WITH_FORMS)
@settings(max_examples=10)
@given(seed=seeds)
def test_lie_derivative_conjugation(name, entries, seed):
    g = entries[name].algebra
    rng = np.random.default_rng(seed)
    der = derivation_space(g)
    coeffs = [Scalar(int(v)) for v in rng.integers(-2, 3, size=der.dim)]
    D = der.combine(coeffs)
    h = random_automorphism(g, rng)
    psi = random_form(rng, 3)
    lhs = lie_derivative(gl_act(h, psi), h @ D @ inverse(h))
    assert lhs == gl_act(h, lie_derivative(psi, D))
    assert is_derivation(g, h @ D @ inverse(h))


def test_exp_nilpotent():
    N = zeros((7, 7))
    N[1, 0] = Scalar(2)
    N[2, 1] = Scalar(1)
    E = exp_nilpotent(N)
    assert E[2, 0] == 1 and E[1, 0] == 2 and E[0, 0] == 1
    with pytest.raises(ValueError):
        exp_nilpotent(identity(7))
