"""Torsion, Laplacian, Ricci and the Q operator of a closed G2-structure."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exterior import BASIS, DIM, KForm, apply_derivation, derivation_action_matrix
from .g2metric import MetricData, hodge_star, metric_volume
from .liealg import LieAlgebra, ce_d
from .scalar import (
    FLOAT_TOL,
    ZERO,
    Scalar,
    array_is_zero,
    arrays_equal,
    identity,
    solve_linear,
    zeros,
)


class NotClosed(ValueError):
    pass


class QSolveInconsistent(RuntimeError):
    pass


def trace(M):
    out = ZERO if M.dtype == object else 0.0
    for i in range(M.shape[0]):
        out = out + M[i, i]
    return out


def _frac(p: int, q: int, mode: str):
    return Scalar(p) / q if mode == "exact" else p / q


def _working(g: LieAlgebra, psi: KForm, m: MetricData | None):
    """Metric plus algebra and form in the metric's mode."""
    if m is None:
        m = metric_volume(psi)
    if m.mode == "float":
        return g.as_mode("float"), psi.as_mode("float"), m
    return g, psi, m


def is_closed(g: LieAlgebra, psi: KForm) -> bool:
    return ce_d(g, psi).is_zero()


def laplacian(g: LieAlgebra, psi: KForm, m: MetricData | None = None) -> KForm:
    """Hodge Laplacian *d*d - d*d* of psi for its own metric."""
    g, psi, m = _working(g, psi, m)
    star = lambda a: hodge_star(m, a)
    first = star(ce_d(g, star(ce_d(g, psi))))
    second = ce_d(g, star(ce_d(g, star(psi))))
    return first - second


def theta(A, psi: KForm) -> KForm:
    """theta(A)psi = -psi(A., ., .) - psi(., A., .) - psi(., ., A.)."""
    return -apply_derivation(A, psi)


def form_to_matrix(a: KForm) -> np.ndarray:
    """Antisymmetric matrix T with T[i, j] = a(e_i, e_j)."""
    T = zeros((DIM, DIM), a.mode)
    for p, (i, j) in enumerate(BASIS[2]):
        c = a.coeffs[p]
        T[i, j] = c
        T[j, i] = -c
    return T


@dataclass(frozen=True)
class TorsionData:
    tau: KForm
    tau_op: np.ndarray
    laplacian: KForm
    metric: MetricData


def torsion(g: LieAlgebra, psi: KForm, m: MetricData | None = None) -> TorsionData:
    if not is_closed(g, psi):
        raise NotClosed("d psi is nonzero")
    g, psi, m = _working(g, psi, m)
    tau = -hodge_star(m, ce_d(g, hodge_star(m, psi)))
    lap = laplacian(g, psi, m)
    if not ce_d(g, tau).allclose(lap):
        raise QSolveInconsistent("d tau differs from the Laplacian")
    # tau(X, Y) = <tau_op X, Y>  =>  tau_op = -g^{-1} T
    tau_op = -(m.g_inv @ form_to_matrix(tau))
    if not array_is_zero(m.g @ tau_op + (m.g @ tau_op).T):
        raise QSolveInconsistent("torsion operator is not skew")
    return TorsionData(tau, tau_op, lap, m)


def ricci_form(g: LieAlgebra, m: MetricData) -> np.ndarray:
    """Ricci bilinear form of the left-invariant metric on a nilpotent group.

    <Ric X, Y> = -1/2 sum_i <[X, f_i], [Y, f_i]> + 1/4 sum_{ij} <[f_i, f_j], X><[f_i, f_j], Y>
    with the frame sums replaced by contractions against g^{-1}.
    """
    if m.mode == "float":
        g = g.as_mode("float")
    C, G, H = g.C, m.g, m.g_inv
    mode = m.mode
    F = np.einsum("ab,pak,qbl,kl->pq", H, C, C, G, optimize=True)
    low = np.einsum("abk,kp->abp", C, G)  # <[e_a, e_b], e_p>
    S = np.einsum("ac,bd,abp,cdq->pq", H, H, low, low, optimize=True)
    return _frac(-1, 2, mode) * F + _frac(1, 4, mode) * S


def ricci(g: LieAlgebra, m: MetricData) -> np.ndarray:
    """Ricci operator g^{-1} r."""
    return m.g_inv @ ricci_form(g, m)


@dataclass(frozen=True)
class CurvatureData:
    ric: np.ndarray
    R: object
    q: np.ndarray
    pinching: object  # None for flat metrics
    torsion: TorsionData


def q_from_theta(psi: KForm, lap: KForm, m: MetricData) -> np.ndarray:
    """Unique g-symmetric Q with theta(Q) psi = lap."""
    mode = m.mode
    L = derivation_action_matrix(psi).reshape(-1, DIM, DIM)
    # columns of A -> theta(g^{-1} A); fold g^{-1} in once
    LG = L if m.is_identity() else np.einsum("rab,ac->rcb", L, m.g_inv)
    pairs = [(p, q) for p in range(DIM) for q in range(p, DIM)]
    cols = [-(LG[:, p, q] + LG[:, q, p]) if p != q else -LG[:, p, p] for p, q in pairs]
    A = np.stack(cols, axis=1)
    sol = solve_linear(A, lap.coeffs)
    if not sol.consistent or sol.dim:
        raise QSolveInconsistent("theta(Q) psi = Laplacian has no unique symmetric solution")
    M = zeros((DIM, DIM), mode)
    for x, (p, q) in zip(sol.particular, pairs):
        M[p, q] = x
        M[q, p] = x
    return m.g_inv @ M


def q_operator(g: LieAlgebra, psi: KForm, m: MetricData | None = None,
               td: TorsionData | None = None) -> CurvatureData:
    """Ricci, scalar curvature, pinching and Q (checked against the theta-solve)."""
    td = torsion(g, psi, m) if td is None else td
    m = td.metric
    g, psi, _ = _working(g, psi, m)
    mode = m.mode
    ric = ricci(g, m)
    t2 = td.tau_op @ td.tau_op
    q = ric - _frac(1, 12, mode) * trace(t2) * identity(DIM, mode) + _frac(1, 2, mode) * t2
    q_alt = q_from_theta(psi, td.laplacian, m)
    if not arrays_equal(q, q_alt, tol=1e-7 if mode == "float" else FLOAT_TOL):
        raise QSolveInconsistent("Q from curvature and from theta-solve disagree")
    R = trace(ric)
    rr = trace(ric @ ric)
    pinching = None if array_is_zero(ric) else R * R / rr
    return CurvatureData(ric, R, q, pinching, td)
