"""Semi-algebraic Laplacian solitons on nilpotent Lie algebras.

A closed positive 3-form psi is a soliton when
``Laplacian(psi) = lam * psi + L_D psi`` for some real lam and some
derivation D. All solutions form an affine space, found by one linear solve
in the coordinates of Der(g).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .exterior import DIM, KForm, derivation_action_matrix, gl_act
from .g2metric import MetricData, metric_volume
from .g2torsion import NotClosed, TorsionData, is_closed, q_operator, ricci_form, torsion, trace
from .liealg import (
    DerivationSpace,
    LieAlgebra,
    apply_derivation_system,
    derivation_space,
    is_automorphism,
    is_derivation,
    lie_derivative,
)
from .scalar import (
    FLOAT_TOL,
    ZERO,
    Scalar,
    array_is_zero,
    arrays_equal,
    float_array,
    format_scalar,
    identity,
    inverse,
    nth_root_exact,
    real_root_float,
    solve_linear,
    zeros,
)

ALGEBRAIC = "algebraic"
SEMI_ALGEBRAIC = "semi-algebraic-only"
EXPANDING, STEADY, SHRINKING = "expanding", "steady", "shrinking"


class NotSoliton(ValueError):
    pass


class NotAutomorphism(ValueError):
    pass


@dataclass(frozen=True)
class SolitonSolution:
    lam: object
    D: np.ndarray
    solution_space_dim: int
    classification: str
    sign_class: str
    residual: object
    mode: str
    q_check: bool = True

    def to_dict(self) -> dict:
        fmt = _fmt(self.mode)
        return {
            "lambda": fmt(self.lam),
            "D": [[fmt(x) for x in row] for row in self.D],
            "classification": self.classification,
            "sign_class": self.sign_class,
            "solution_space_dim": self.solution_space_dim,
            "q_check": self.q_check,
            "mode": self.mode,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _fmt(mode):
    if mode == "exact":
        return lambda x: format_scalar(Scalar.coerce(x))
    return lambda x: repr(float(x))


def sign_class(lam) -> str:
    s = lam.sign() if isinstance(lam, Scalar) else (0 if abs(lam) < FLOAT_TOL else (1 if lam > 0 else -1))
    return EXPANDING if s > 0 else (SHRINKING if s < 0 else STEADY)


def metric_adjoint(D, m: MetricData) -> np.ndarray:
    """D^t for the inner product of m: <D^t x, y> = <x, D y>."""
    D = np.asarray(D)
    if m.is_identity():
        return D.T.copy()
    return m.g_inv @ D.T @ m.g


@dataclass(frozen=True)
class _System:
    """lam * psi + sum_k x_k L_{D_k} psi = lap in unknowns (lam, x)."""

    g: LieAlgebra
    psi: KForm
    lap: KForm
    metric: MetricData
    der: DerivationSpace
    A: np.ndarray
    td: TorsionData

    @property
    def mode(self) -> str:
        return self.metric.mode

    def D_of(self, x) -> np.ndarray:
        return self.der.combine(x[1:])


def _system(g: LieAlgebra, psi: KForm, m: MetricData | None = None) -> _System:
    if not is_closed(g, psi):
        raise NotClosed("d psi is nonzero")
    td = torsion(g, psi, m)
    m = td.metric
    if m.mode == "float":
        g, psi = g.as_mode("float"), psi.as_mode("float")
    der = derivation_space(g)
    L = derivation_action_matrix(psi)
    cols = [psi.coeffs] + [L @ B.reshape(-1) for B in der]
    A = np.stack(cols, axis=1)
    return _System(g, psi, td.laplacian, m, der, A, td)


def _min_norm(sys: _System, particular, null) -> np.ndarray:
    """Point of the affine set minimising |D|_F (D determines lam)."""
    if null.shape[0] == 0:
        return particular
    Phi = zeros((DIM * DIM, sys.A.shape[1]), sys.mode)
    for k, B in enumerate(sys.der, start=1):
        Phi[:, k] = B.reshape(-1)
    N = null.T  # columns span the directions
    PN = Phi @ N
    G = PN.T @ PN
    rhs = -(PN.T @ (Phi @ particular))
    sol = solve_linear(G, rhs)
    if not sol.consistent:
        return particular
    return particular + N @ sol.particular


def _algebraic(sys: _System) -> bool:
    """Is there a solution whose metric adjoint D^t is a derivation?"""
    n = sys.A.shape[1]
    cols = [apply_derivation_system(sys.g, metric_adjoint(B, sys.metric)) for B in sys.der]
    if not cols:
        return True
    extra = zeros((len(cols[0]), n), sys.mode)
    for k, col in enumerate(cols, start=1):
        extra[:, k] = col
    keep = [r for r in range(extra.shape[0]) if not array_is_zero(extra[r])]
    A = np.concatenate([sys.A, extra[keep]], axis=0)
    b = np.concatenate([sys.lap.coeffs, zeros(len(keep), sys.mode)])
    return solve_linear(A, b).consistent


def solve_soliton(g: LieAlgebra, psi: KForm, m: MetricData | None = None) -> SolitonSolution | None:
    """Solve lam psi + L_D psi = Laplacian(psi) over R x Der(g); None if no solution."""
    return _solve(_system(g, psi, m))


def _solve(sys: _System) -> SolitonSolution | None:
    sol = solve_linear(sys.A, sys.lap.coeffs)
    if not sol.consistent:
        return None
    x = _min_norm(sys, sol.particular, sol.nullspace)
    lam, D = x[0], sys.D_of(x)
    res_form = sys.A @ x - sys.lap.coeffs
    if sys.mode == "exact":
        residual = ZERO
        if not array_is_zero(res_form):
            raise RuntimeError("exact soliton solve left a residual")
    else:
        residual = float(np.linalg.norm(res_form))
    q_check = _q_agrees(sys, lam, D)
    return SolitonSolution(
        lam=lam,
        D=D,
        solution_space_dim=sol.dim,
        classification=ALGEBRAIC if _algebraic(sys) else SEMI_ALGEBRAIC,
        sign_class=sign_class(lam),
        residual=residual,
        mode=sys.mode,
        q_check=q_check,
    )


def expected_q(lam, D, m: MetricData) -> np.ndarray:
    """-(lam/3) I - (D + D^t)/2."""
    mode = m.mode
    third = Scalar(1) / 3 if mode == "exact" else 1 / 3
    half = Scalar(1) / 2 if mode == "exact" else 0.5
    return -(lam * third) * identity(DIM, mode) - half * (D + metric_adjoint(D, m))


def _q_agrees(sys: _System, lam, D) -> bool:
    cd = q_operator(sys.g, sys.psi, sys.metric, td=sys.td)
    return arrays_equal(cd.q, expected_q(lam, D, sys.metric), tol=1e-7)


def is_soliton_pair(g: LieAlgebra, psi: KForm, lam, D, lap: KForm | None = None,
                    tol: float = FLOAT_TOL) -> bool:
    """Does (lam, D) satisfy the soliton equation with D in Der(g)?"""
    D = np.asarray(D)
    if not is_derivation(g, D, tol):
        return False
    if lap is None:
        lap = torsion(g, psi).laplacian
    lhs = lam * psi + lie_derivative(psi, D)
    return lhs.allclose(lap, tol)


def in_solution_set(g: LieAlgebra, psi: KForm, D, lap: KForm | None = None) -> bool:
    """Is D the derivation of some soliton pair (lam, D)?"""
    D = np.asarray(D)
    if not is_derivation(g, D):
        return False
    if lap is None:
        lap = torsion(g, psi).laplacian
    rest = lap - lie_derivative(psi, D)
    A = psi.coeffs.reshape(-1, 1)
    return solve_linear(A, rest.coeffs).consistent


def classify_algebraic(g: LieAlgebra, psi: KForm) -> str:
    return ALGEBRAIC if _algebraic(_system(g, psi)) else SEMI_ALGEBRAIC


def cube_root_power(c, mode: str):
    """c^{2/3}: exact when c is a cube in the field, float otherwise."""
    if mode == "exact" and isinstance(c, Scalar):
        r = nth_root_exact(c, 3)
        if r is not None:
            return r * r
    r = real_root_float(float(c), 3)
    return r * r


@dataclass(frozen=True)
class TransformResult:
    psi: KForm
    solution: SolitonSolution
    predicted_lam: object
    predicted_D: np.ndarray
    prediction_holds: bool


def transform_soliton(g: LieAlgebra, psi: KForm, h, c,
                      base: SolitonSolution | None = None) -> TransformResult:
    """Soliton data of c * (h . psi) for an automorphism h and nonzero c.

    A pair (lam, D) for psi carries over to c^{-2/3} (lam, h D h^{-1}).
    ``base`` may carry an already solved pair for psi.
    """
    h = np.asarray(h)
    if not is_automorphism(g, h):
        raise NotAutomorphism("h does not preserve the bracket")
    if base is None:
        base = solve_soliton(g, psi)
    if base is None:
        raise NotSoliton("psi is not a semi-algebraic soliton")
    mode = psi.mode
    if mode == "exact":
        c = Scalar.coerce(c)
    new_psi = gl_act(h, psi) * c
    k = cube_root_power(c, mode)
    if not isinstance(k, Scalar) and mode == "exact":
        g, new_psi = g.as_mode("float"), new_psi.as_mode("float")
        h = h.astype(float)
        base_D, base_lam = base.D.astype(float), float(base.lam)
    else:
        base_D, base_lam = base.D, base.lam
    lam2 = base_lam / k
    D2 = (h @ base_D @ inverse(h)) / k
    sys = _system(g, new_psi)
    if sys.metric.mode == "float":
        lam2, D2 = float(lam2), float_array(D2)
    sol = _solve(sys)
    if sol is None:
        raise NotSoliton("transformed form failed to solve")
    holds = is_soliton_pair(sys.g, sys.psi, lam2, D2, sys.lap, tol=1e-7)
    return TransformResult(new_psi, sol, lam2, D2, holds)


@dataclass(frozen=True)
class HomothetyInvariants:
    pinching: object
    normalized_ricci_spectrum: tuple
    ricci_spectrum: tuple


def ricci_spectrum(g: LieAlgebra, m: MetricData) -> np.ndarray:
    r = ricci_form(g, m).astype(float)
    return np.sort(scipy.linalg.eigh(r, m.g.astype(float), eigvals_only=True))


def homothety_invariants(g: LieAlgebra, psi: KForm) -> HomothetyInvariants:
    m = metric_volume(psi)
    gg = g.as_mode("float") if m.mode == "float" else g
    ric = m.g_inv @ ricci_form(gg, m)
    rr = trace(ric @ ric)
    R = trace(ric)
    pinch = None if array_is_zero(ric) else R * R / rr
    spec = ricci_spectrum(gg, m)
    norm = float(np.sqrt(float(rr))) if pinch is not None else 1.0
    return HomothetyInvariants(pinch, tuple(spec / norm), tuple(spec))


def distinguishes(a: HomothetyInvariants, b: HomothetyInvariants, tol: float = 1e-9) -> bool:
    """Sufficient test for non-homothety: differing normalized spectra."""
    return not np.allclose(a.normalized_ricci_spectrum, b.normalized_ricci_spectrum, atol=tol, rtol=0)


# float least squares for trajectories ------------------------------------

@dataclass(frozen=True)
class SolitonFit:
    lam: float
    D: np.ndarray
    residual: float  # relative to |Laplacian|


def fit_soliton(g: LieAlgebra, psi: KForm, lap: KForm, der: DerivationSpace | None = None) -> SolitonFit:
    """Least-squares (lam, D) for float data."""
    g = g.as_mode("float")
    psi = psi.as_mode("float")
    lap = lap.as_mode("float")
    if der is None:
        der = derivation_space(g)
    L = derivation_action_matrix(psi)
    A = np.stack([psi.coeffs] + [L @ B.reshape(-1) for B in der], axis=1)
    x, *_ = np.linalg.lstsq(A, lap.coeffs, rcond=None)
    scale = max(np.linalg.norm(lap.coeffs), 1e-300)
    res = float(np.linalg.norm(A @ x - lap.coeffs))
    rel = res / scale if np.linalg.norm(lap.coeffs) > 0 else res
    D = sum((c * B for c, B in zip(x[1:], der)), np.zeros((DIM, DIM)))
    return SolitonFit(float(x[0]), D, rel)
