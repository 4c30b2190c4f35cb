"""Laplacian flow d/dt phi = Laplacian(phi) on left-invariant 3-forms (float).

Along a soliton ``Laplacian(phi) = lam phi + L_D phi`` the flow is
self-similar: phi(t) = c(t) exp(s(t) D) . phi with
c(t) = ((2/3) lam t + 1)^{3/2} and s(t) = -(3 / (2 lam)) log((2/3) lam t + 1),
so the soliton constant along the flow is lam / ((2/3) lam t + 1).
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
from scipy.optimize import curve_fit

from .exterior import BASIS, KForm, gl_act
from .g2metric import NotPositive, metric_volume
from .g2torsion import laplacian
from .liealg import LieAlgebra, ce_d, derivation_space
from .scalar import float_array
from .soliton import fit_soliton

DRIFT_TOL = 1e-8
RESIDUAL_TOL = 1e-6


class PositivityLost(RuntimeError):
    def __init__(self, t: float):
        super().__init__(f"flow left the positive forms at t={t:.6g}")
        self.t = t


class ClosednessDrift(RuntimeError):
    def __init__(self, t: float, drift: float):
        hint = "initial form is not closed" if t == 0 else "step too large?"
        super().__init__(f"|d phi|/|phi| = {drift:.3g} at t={t:.6g}; {hint}")
        self.t = t
        self.drift = drift


class NotASolitonTrajectory(ValueError):
    pass


@dataclass
class FlowConfig:
    t_max: float = 1.0
    dt: float = 1e-3
    sample_every: int = 10
    diagnostics: bool = True  # soliton fit at each sample


@dataclass
class Trajectory:
    times: np.ndarray
    coeffs: np.ndarray  # (samples, 35)
    drift: np.ndarray
    positive: np.ndarray
    residual: np.ndarray
    lam: np.ndarray
    dt: float
    method: str = "rk4"
    meta: dict = field(default_factory=dict)

    def form(self, i: int) -> KForm:
        return KForm(3, self.coeffs[i])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        head = ["t"] + ["e" + "".join(str(i + 1) for i in I) for I in BASIS[3]]
        w.writerow(head + ["d_drift", "residual", "lambda_t"])
        for k in range(len(self.times)):
            row = [self.times[k], *self.coeffs[k], self.drift[k], self.residual[k], self.lam[k]]
            w.writerow([f"{x:.17g}" for x in row])
        return buf.getvalue()


def _rhs(g: LieAlgebra, y: np.ndarray, t: float) -> np.ndarray:
    psi = KForm(3, y)
    try:
        m = metric_volume(psi)
    except NotPositive:
        raise PositivityLost(t) from None
    return laplacian(g, psi, m).coeffs


def _drift(g: LieAlgebra, y: np.ndarray) -> float:
    d = ce_d(g, KForm(3, y)).coeffs
    return float(np.linalg.norm(d) / max(np.linalg.norm(y), 1e-300))


def integrate(g: LieAlgebra, psi0: KForm, t_max: float = 1.0, dt: float = 1e-3,
              sample_every: int = 10, diagnostics: bool = True) -> Trajectory:
    """Classical fixed-step RK4 from psi0 over [0, t_max]."""
    if dt <= 0:
        raise ValueError("dt must be positive")
    gf = g.as_mode("float")
    y = float_array(psi0.coeffs)
    if _drift(gf, y) > DRIFT_TOL:
        raise ClosednessDrift(0.0, _drift(gf, y))
    n = int(round(t_max / dt))
    der = derivation_space(gf) if diagnostics else None
    times, ys, drifts, flags, res, lams = [], [], [], [], [], []

    def sample(t, y):
        dr = _drift(gf, y)
        if not np.all(np.isfinite(y)) or dr > DRIFT_TOL:
            raise ClosednessDrift(t, dr)
        times.append(t)
        ys.append(y.copy())
        drifts.append(dr)
        flags.append(True)
        if diagnostics:
            psi = KForm(3, y)
            fit = fit_soliton(gf, psi, laplacian(gf, psi), der)
            res.append(fit.residual)
            lams.append(fit.lam)
        else:
            res.append(math.nan)
            lams.append(math.nan)

    sample(0.0, y)
    for k in range(n):
        t = k * dt
        k1 = _rhs(gf, y, t)
        k2 = _rhs(gf, y + 0.5 * dt * k1, t + 0.5 * dt)
        k3 = _rhs(gf, y + 0.5 * dt * k2, t + 0.5 * dt)
        k4 = _rhs(gf, y + dt * k3, t + dt)
        y = y + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
        if not np.all(np.isfinite(y)):
            raise ClosednessDrift(t + dt, math.inf)
        if (k + 1) % sample_every == 0 or k + 1 == n:
            try:
                metric_volume(KForm(3, y))
            except NotPositive:
                raise PositivityLost(t + dt) from None
            sample((k + 1) * dt, y)
    return Trajectory(np.array(times), np.array(ys), np.array(drifts), np.array(flags),
                      np.array(res), np.array(lams), dt)


# self-similar reference solution ------------------------------------------

def self_similar(psi: KForm, lam: float, D, t: float) -> KForm:
    """c(t) exp(s(t) D) . psi for a soliton pair (lam, D)."""
    lam = float(lam)
    D = float_array(D)
    if abs(lam) < 1e-300:
        c, s = 1.0, -t
    else:
        base = 2.0 / 3.0 * lam * t + 1.0
        if base <= 0:
            raise ValueError("self-similar solution does not reach t")
        c = base ** 1.5
        s = -1.5 / lam * math.log(base)
    h = scipy.linalg.expm(s * D)
    return gl_act(h, psi.as_mode("float")) * c


def lambda_law(t, lam0):
    return lam0 / (2.0 / 3.0 * lam0 * np.asarray(t) + 1.0)


@dataclass(frozen=True)
class ScalingFit:
    c_est: float
    fit_error: float
    steady: bool
    samples: int

    def to_dict(self) -> dict:
        return {"c_est": self.c_est, "fit_error": self.fit_error, "steady": self.steady,
                "samples": self.samples}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def fit_scaling(traj: Trajectory, residual_tol: float = RESIDUAL_TOL) -> ScalingFit:
    """Fit lam(t) = c / ((2/3) c t + 1) to the per-sample soliton constants."""
    lam = np.asarray(traj.lam, dtype=float)
    if np.any(~np.isfinite(lam)):
        raise NotASolitonTrajectory("trajectory has no soliton diagnostics")
    if np.max(traj.residual) > residual_tol:
        raise NotASolitonTrajectory(f"soliton residual {np.max(traj.residual):.3g} above {residual_tol}")
    if np.max(np.abs(lam)) < 1e-12:
        return ScalingFit(0.0, 0.0, True, len(lam))
    (c,), _ = curve_fit(lambda_law, traj.times, lam, p0=[lam[0]])
    model = lambda_law(traj.times, c)
    err = float(np.max(np.abs(model - lam) / np.maximum(np.abs(lam), 1e-300)))
    return ScalingFit(float(c), err, False, len(lam))
