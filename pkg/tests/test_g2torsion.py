import numpy as np
import pytest
from hypothesis import given, settings

from g2solitons import catalog
from g2solitons.exterior import PHI0, KForm, gl_act, parse_form
from g2solitons.g2metric import metric_volume
from g2solitons.g2torsion import (
    NotClosed, form_to_matrix, laplacian, q_operator, ricci, theta, torsion, trace,
)
from g2solitons.liealg import LieAlgebra, ce_d, lie_derivative, random_automorphism
from g2solitons.scalar import SQRT2, Scalar, arrays_equal, diag, identity, is_symmetric, zeros

from helpers import random_invertible, seeds

CLOSED = ("n1", "n2", "n3", "n4", "n5", "n6", "n7")
e = KForm.basis
half = Scalar(1) / 2


def n3(b, c):
    b, c = Scalar.coerce(b), Scalar.coerce(c)
    return catalog.get("n3", {"a": b + c, "b": b, "c": c})


def test_laplacian_abelian_is_zero():
    assert laplacian(LieAlgebra([]), PHI0).is_zero()


@pytest.mark.parametrize("b,c", [(1, 1), (Scalar(3) / 4, Scalar(1) / 4), (2, -1), (SQRT2, 1)])
def test_laplacian_n3(b, c):
    en = n3(b, c)
    b, c = Scalar.coerce(b), Scalar.coerce(c)
    assert laplacian(en.algebra, en.form) == e(1, 2, 3) * (2 * (b * b + c * c + b * c))


def test_laplacian_n4():
    en = catalog.get("n4")
    want = parse_form("-4*e124 + 2*e135 + sqrt2*e245 + sqrt2*e127")
    assert laplacian(en.algebra, en.form) == want


@pytest.mark.parametrize("name,tau", [
    ("n2", "-e35 + e26"),
    ("n6", "-sqrt2*e34 + sqrt2*e25 - e56 + e47"),
])
def test_torsion_examples(name, tau):
    en = catalog.get(name)
    assert torsion(en.algebra, en.form).tau == parse_form(tau)


@pytest.mark.parametrize("c", [Scalar(1) / 4, Scalar(1) / 3, Scalar(1) / 10])
def test_torsion_n3_slice(c):
    en = catalog.get("n3", {"a": 1, "b": 1 - c, "c": c})
    want = e(1, 6) * (-c) + e(2, 5) * (1 - c) - e(3, 4)
    assert torsion(en.algebra, en.form).tau == want


def test_torsion_rejects_open_forms():
    en = catalog.get("n3", {"a": 1, "b": 1, "c": 1})
    with pytest.raises(NotClosed):
        torsion(en.algebra, en.form)
    with pytest.raises(NotClosed):
        q_operator(en.algebra, en.form)


@pytest.mark.parametrize("name", CLOSED)
def test_dtau_is_laplacian(name, entries):
    en = entries[name]
    td = torsion(en.algebra, en.form)
    assert ce_d(en.algebra, td.tau) == td.laplacian
    assert arrays_equal(td.tau_op, -td.tau_op.T)  # metric is the identity here


def test_tau_op_lowered_is_tau():
    en = catalog.get("n5")
    h = random_automorphism(en.algebra, np.random.default_rng(4))
    psi = gl_act(h, en.form)
    td = torsion(en.algebra, psi)
    m = metric_volume(psi)
    # tau(X, Y) = <tau_op X, Y>
    T = form_to_matrix(td.tau)
    assert arrays_equal(td.tau_op.T @ m.g, T)


def test_theta_examples():
    assert theta(identity(7), PHI0) == PHI0 * -3
    assert theta(zeros((7, 7)), PHI0).is_zero()
    en = catalog.get("n3")
    got = theta(diag([1, 1, 1, 2, 2, 2, 2]), en.form)
    want = -(e(1, 2, 3) * 3 + parse_form("e145 + e167 + e246 - e257 - e347 - e356") * 5)
    assert got == want


@settings(max_examples=10)
@given(seeds)
def test_theta_is_minus_lie_derivative(seed):
    rng = np.random.default_rng(seed)
    A = random_invertible(rng, irrational=True)
    psi = gl_act(random_invertible(rng), PHI0)
    assert theta(A, psi) == -lie_derivative(psi, A)


@pytest.mark.parametrize("a,b,c", [(2, 1, 1), (1, 2, 3), (Scalar(1) / 2, -1, SQRT2)])
def test_ricci_n3(a, b, c):
    en = catalog.get("n3", {"a": a, "b": b, "c": c}, check_positive=False)
    a, b, c = (Scalar.coerce(x) for x in (a, b, c))
    want = diag([-a * a - b * b, -a * a - c * c, -b * b - c * c, a * a, b * b, c * c, 0]) * half
    assert arrays_equal(ricci(en.algebra, metric_volume(en.form)), want)


def test_ricci_n2_and_abelian():
    en = catalog.get("n2")
    want = -diag([1, half, half, 0, -half, -half, 0])
    assert arrays_equal(ricci(en.algebra, metric_volume(en.form)), want)
    assert arrays_equal(ricci(LieAlgebra([]), metric_volume(PHI0)), zeros((7, 7)))


@pytest.mark.parametrize("b,c", [(1, 1), (Scalar(3) / 4, Scalar(1) / 4), (3, -1)])
def test_q_n3(b, c):
    en = n3(b, c)
    b, c = Scalar.coerce(b), Scalar.coerce(c)
    a = b + c
    want = diag([-2, -2, -2, 1, 1, 1, 1]) * ((a * a + b * b + c * c) / 6)
    cd = q_operator(en.algebra, en.form)
    assert arrays_equal(cd.q, want)
    assert cd.pinching == half


@pytest.mark.parametrize("name,pinch", [("n2", half), ("n4", Scalar(3) / 4), ("n5", Scalar(3) / 4),
                                        ("n6", Scalar(3) / 4), ("n7", Scalar(3) / 4)])
def test_pinching(name, pinch, entries):
    en = entries[name]
    cd = q_operator(en.algebra, en.form)
    assert cd.pinching == pinch
    assert cd.R < 0
    assert is_symmetric(cd.q)
    assert 0 < cd.pinching <= 7


def test_q_n4_listing():
    en = catalog.get("n4")
    q = q_operator(en.algebra, en.form).q
    assert arrays_equal(q, catalog.expected_tables()["n4"].matrix("Q"))
    assert q[0, 4] == 1 / SQRT2 and q[3, 6] == 1 / SQRT2


@pytest.mark.parametrize("a,b", [(SQRT2, 1), (1, 1), (2, 3), (1 + SQRT2, Scalar(1) / 2)])
def test_q_n4_closed_family(a, b):
    a, b = Scalar.coerce(a), Scalar.coerce(b)
    c, d = a, b
    en = catalog.get("n4", {"a": a, "b": b, "c": c, "d": d})
    cd = q_operator(en.algebra, en.form)
    ric = diag([-(a * a + b * b + d * d), -(a * a + c * c), a * a - b * b, -c * c, -d * d,
                b * b + c * c, d * d]) * half
    assert arrays_equal(cd.ric, ric)
    assert cd.torsion.tau == e(3, 4) * -a + e(1, 6) * c - e(5, 6) * b + e(3, 7) * d
    al = a * a + b * b + c * c + d * d
    Q = diag([-al * 2, al - 3 * a * a - 3 * c * c, al - 3 * b * b - 3 * d * d,
              al - 3 * a * a - 3 * c * c, al - 3 * b * b - 3 * d * d, al, al]) / 6
    Q[0, 4] = Q[4, 0] = b * c / 2
    Q[3, 6] = Q[6, 3] = a * d / 2
    assert arrays_equal(cd.q, Q)


def test_q_abelian():
    cd = q_operator(LieAlgebra([]), PHI0)
    assert arrays_equal(cd.q, zeros((7, 7)))
    assert cd.pinching is None and cd.R == 0


@pytest.mark.parametrize("name", CLOSED)
@settings(max_examples=5)
@given(seed=seeds)
def test_laplacian_automorphism_equivariance(name, entries, seed):
    en = entries[name]
    h = random_automorphism(en.algebra, np.random.default_rng(seed))
    lap = laplacian(en.algebra, gl_act(h, en.form))
    assert lap == gl_act(h, laplacian(en.algebra, en.form))


@pytest.mark.parametrize("c,root", [(8, 2), (-27, -3), (Scalar(1) / 8, half)])
@pytest.mark.parametrize("name", ("n3", "n6", "n7"))
def test_laplacian_scaling(name, c, root, entries):
    en = entries[name]
    c, root = Scalar.coerce(c), Scalar.coerce(root)
    lap = laplacian(en.algebra, en.form * c)
    assert lap == laplacian(en.algebra, en.form) * root


def test_float_path_agrees():
    en = catalog.get("n7")
    g, psi = en.algebra.as_mode("float"), en.form.to_float()
    cd = q_operator(g, psi)
    exact = q_operator(en.algebra, en.form)
    assert np.allclose(cd.q.astype(float), exact.q.astype(float), atol=1e-10)
    assert np.isclose(float(trace(cd.ric)), float(exact.R))
