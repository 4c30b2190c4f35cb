"""Positivity of 3-forms, the induced metric and volume, and the Hodge star."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

import numpy as np

from .exterior import BASIS, DIM, INDEX, KForm, _interior_table, complement_table, compound, perm_sign
from .scalar import (
    Scalar,
    definiteness,
    determinant,
    float_array,
    inverse,
    is_diagonal,
    ninth_root_exact,
    real_root_float,
    zeros,
)

POSITIVE = "positive"
POSITIVE_REVERSED = "positive-reversed-orientation"
NOT_POSITIVE = "not-positive"


class NotPositive(ValueError):
    pass


@lru_cache(maxsize=None)
def _top_table():
    """(p, q, r, sign) with e^p ^ e^q ^ e^r = sign e^{1..7} for 2-, 2-, 3-tuples."""
    P, Q, R, S = [], [], [], []
    for p, I in enumerate(BASIS[2]):
        for q, J in enumerate(BASIS[2]):
            if set(I) & set(J):
                continue
            K = tuple(i for i in range(DIM) if i not in I + J)
            P.append(p)
            Q.append(q)
            R.append(INDEX[3][K])
            S.append(perm_sign(I + J + K))
    return tuple(np.array(x, dtype=int) for x in (P, Q, R, S))


def _contractions(psi: KForm) -> np.ndarray:
    """Row i holds the coefficients of iota_{e_i} psi."""
    src, vec, dst, sg = _interior_table(3)
    out = zeros((DIM, comb(DIM, 2)), psi.mode)
    if psi.mode == "float":
        np.add.at(out, (vec, dst), sg * psi.coeffs[src])
        return out
    for s_, v, d, g in zip(src.tolist(), vec.tolist(), dst.tolist(), sg.tolist()):
        c = psi.coeffs[s_]
        if c:
            out[v, d] = out[v, d] + c if g > 0 else out[v, d] - c
    return out


def gram_bilinear(psi: KForm) -> np.ndarray:
    """B[i, j] = coefficient of e^{1..7} in (1/6) iota_i psi ^ iota_j psi ^ psi."""
    if psi.degree != 3:
        raise ValueError("gram_bilinear needs a 3-form")
    alpha = _contractions(psi)
    P, Q, R, S = _top_table()
    if psi.mode == "float":
        w = S * psi.coeffs[R]
        return (alpha[:, P] * w) @ alpha[:, Q].T / 6.0
    w = np.array([s * c if c else c for s, c in zip(S.tolist(), psi.coeffs[R])], dtype=object)
    keep = [k for k in range(len(w)) if w[k]]
    left = alpha[:, P[keep]] * w[keep]
    B = left @ alpha[:, Q[keep]].T
    sixth = Scalar(1, 0) / 6
    return np.vectorize(lambda x: Scalar.coerce(x) * sixth, otypes=[object])(B)


@dataclass(frozen=True)
class PositivityVerdict:
    kind: str
    gram: np.ndarray

    @property
    def positive(self) -> bool:
        return self.kind != NOT_POSITIVE


def positivity(psi: KForm) -> PositivityVerdict:
    B = gram_bilinear(psi)
    d = definiteness(B)
    if d == "positive-definite":
        return PositivityVerdict(POSITIVE, B)
    if d == "negative-definite":
        return PositivityVerdict(POSITIVE_REVERSED, B)
    return PositivityVerdict(NOT_POSITIVE, B)


@dataclass(frozen=True)
class MetricData:
    """Inner product (Gram matrix g) and volume ``orientation * v * e^{1..7}``."""

    g: np.ndarray
    vol_coeff: object
    orientation: int
    mode: str
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def signed_volume(self):
        return self.vol_coeff if self.orientation > 0 else -self.vol_coeff

    @property
    def g_inv(self) -> np.ndarray:
        if "ginv" not in self._cache:
            self._cache["ginv"] = inverse(self.g)
        return self._cache["ginv"]

    def form_gram(self, s: int) -> np.ndarray:
        """Gram matrix of the induced inner product on s-forms."""
        key = ("gram", s)
        if key not in self._cache:
            self._cache[key] = compound(self.g_inv, s)
        return self._cache[key]

    def inner(self, a: KForm, b: KForm):
        if a.degree != b.degree:
            raise ValueError("inner product of forms of different degree")
        return a.coeffs @ self.form_gram(a.degree) @ b.coeffs

    def volume_form(self) -> KForm:
        return KForm(DIM, np.array([self.signed_volume], dtype=object if self.mode == "exact" else float))

    def is_identity(self) -> bool:
        return self._cache.setdefault("is_id", _is_identity(self.g))


def _is_identity(g) -> bool:
    if not is_diagonal(g):
        return False
    return all(g[i, i] == 1 for i in range(DIM))


def metric_from_gram(B: np.ndarray, kind: str) -> MetricData:
    """g = B / w with w^9 = det B; w carries the orientation sign."""
    if kind == NOT_POSITIVE:
        raise NotPositive("3-form is not positive")
    orientation = 1 if kind == POSITIVE else -1
    if B.dtype == object:
        det = determinant(B)
        w = ninth_root_exact(det)
        if w is not None:
            g = np.vectorize(lambda x: x / w, otypes=[object])(B)
            return MetricData(g, abs(w), orientation, "exact")
        B = float_array(B)
    det = float(np.linalg.det(B))
    w = real_root_float(det, 9)
    return MetricData(B / w, abs(w), orientation, "float")


def metric_volume(psi: KForm) -> MetricData:
    """Metric and volume of a positive 3-form; float fallback if no exact root."""
    verdict = positivity(psi)
    if not verdict.positive:
        raise NotPositive("3-form is not positive")
    return metric_from_gram(verdict.gram, verdict.kind)


def hodge_star(m: MetricData, a: KForm) -> KForm:
    """Unique form with b ^ *a = <b, a> vol for all b of the same degree."""
    s = a.degree
    if m.mode == "float" and a.mode == "exact":
        a = a.to_float()
    pos, sg = complement_table(s)
    vol = m.signed_volume
    if m.is_identity():
        v = a.coeffs
    else:
        v = m.form_gram(s) @ a.coeffs
    out = zeros(comb(DIM, DIM - s), m.mode)
    if m.mode == "float":
        out[pos] = sg * v * vol
    else:
        for p, g_, x in zip(pos.tolist(), sg.tolist(), v):
            out[p] = (x * vol) if g_ > 0 else -(x * vol)
    return KForm(DIM - s, out)
