"""Exterior algebra of a fixed 7-dimensional space.

Forms are stored densely: a k-form holds ``binom(7, k)`` coefficients in
lexicographic order of increasing index tuples. Indices are 0-based
internally; the text syntax (``e127``) and file formats are 1-based.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache
from math import comb

import numpy as np

from .scalar import (
    FLOAT_TOL,
    ONE,
    ZERO,
    MixedModeArithmetic,
    Scalar,
    array_is_zero,
    float_array,
    inverse,
    is_diagonal,
    is_exact_array,
    mode_of,
    parse_scalar,
    zeros,
)

DIM = 7

BASIS = [list(itertools.combinations(range(DIM), k)) for k in range(DIM + 1)]
INDEX = [{t: i for i, t in enumerate(b)} for b in BASIS]


class ScalarModeMismatch(MixedModeArithmetic):
    pass


class DegreeZero(ValueError):
    pass


def perm_sign(seq) -> int:
    """Sign of the permutation sorting ``seq`` (0 if it has a repeat)."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def scatter_add(n: int, idx: np.ndarray, vals: np.ndarray, mode: str) -> np.ndarray:
    if mode == "float":
        return np.bincount(idx, weights=vals, minlength=n).astype(float)
    out = zeros(n)
    for i, v in zip(idx.tolist(), vals):
        if v:
            out[i] = out[i] + v
    return out


@lru_cache(maxsize=None)
def _wedge_table(k: int, l: int):
    ia, ib, ic, sg = [], [], [], []
    for a, I in enumerate(BASIS[k]):
        for b, J in enumerate(BASIS[l]):
            if set(I) & set(J):
                continue
            K = tuple(sorted(I + J))
            ia.append(a)
            ib.append(b)
            ic.append(INDEX[k + l][K])
            sg.append(perm_sign(I + J))
    return (np.array(ia, dtype=int), np.array(ib, dtype=int),
            np.array(ic, dtype=int), np.array(sg, dtype=int))


@lru_cache(maxsize=None)
def _interior_table(k: int):
    """Entries (I, vector slot, J, sign) with iota_{e_i} e^I = sign e^J."""
    src, vec, dst, sg = [], [], [], []
    for a, I in enumerate(BASIS[k]):
        for m, i in enumerate(I):
            J = I[:m] + I[m + 1:]
            src.append(a)
            vec.append(i)
            dst.append(INDEX[k - 1][J])
            sg.append(-1 if m % 2 else 1)
    return tuple(np.array(x, dtype=int) for x in (src, vec, dst, sg))


@lru_cache(maxsize=None)
def _derivation_table(k: int):
    """Entries for the matrix of psi -> sum_m psi(..., A X_m, ...) on k-forms.

    ``e^{i_m} o A = sum_j A[i_m, j] e^j`` replaces slot m of e^I by e^j.
    """
    col, ai, aj, row, sg = [], [], [], [], []
    for a, I in enumerate(BASIS[k]):
        for m, i in enumerate(I):
            for j in range(DIM):
                T = I[:m] + (j,) + I[m + 1:]
                s = perm_sign(T)
                if s == 0:
                    continue
                col.append(a)
                ai.append(i)
                aj.append(j)
                row.append(INDEX[k][tuple(sorted(T))])
                sg.append(s)
    return tuple(np.array(x, dtype=int) for x in (col, ai, aj, row, sg))


@lru_cache(maxsize=None)
def complement_table(k: int):
    """For each k-tuple I: index of its complement and sign of (I, I^c)."""
    pos, sg = [], []
    for I in BASIS[k]:
        Ic = tuple(i for i in range(DIM) if i not in I)
        pos.append(INDEX[DIM - k][Ic])
        sg.append(perm_sign(I + Ic))
    return np.array(pos, dtype=int), np.array(sg, dtype=int)


class KForm:
    """Alternating k-form on R^7 with dense coefficient storage."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        if not 0 <= degree <= DIM:
            raise ValueError(f"degree {degree} outside 0..{DIM}")
        arr = np.asarray(coeffs)
        if arr.shape != (comb(DIM, degree),):
            raise ValueError(f"a {degree}-form needs {comb(DIM, degree)} coefficients")
        if arr.dtype == object:
            arr = np.array([Scalar.coerce(x) for x in arr] or [], dtype=object).reshape(arr.shape)
        else:
            arr = arr.astype(float)
        self.degree = degree
        self.coeffs = arr

    # construction ------------------------------------------------------
    @classmethod
    def zero(cls, degree: int, mode: str = "exact") -> "KForm":
        return cls(degree, zeros(comb(DIM, degree), mode))

    @classmethod
    def from_terms(cls, degree: int, terms, mode: str = "exact") -> "KForm":
        """Build from ``{(i, j, k): coeff}`` with 1-based indices in any order."""
        out = zeros(comb(DIM, degree), mode)
        for idx, c in dict(terms).items():
            idx0 = tuple(i - 1 for i in idx)
            if len(idx0) != degree or any(not 0 <= i < DIM for i in idx0):
                raise ValueError(f"bad index tuple {idx} for a {degree}-form")
            s = perm_sign(idx0)
            if s == 0:
                continue
            val = Scalar.coerce(c) if mode == "exact" else float(c)
            pos = INDEX[degree][tuple(sorted(idx0))]
            out[pos] = out[pos] + s * val
        return cls(degree, out)

    @classmethod
    def basis(cls, *indices: int, mode: str = "exact") -> "KForm":
        return cls.from_terms(len(indices), {tuple(indices): 1}, mode)

    @classmethod
    def constant(cls, value, mode: str = "exact") -> "KForm":
        return cls.from_terms(0, {(): value}, mode)

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "KForm":
        return parse_form(text, degree)

    # inspection --------------------------------------------------------
    @property
    def mode(self) -> str:
        return "exact" if is_exact_array(self.coeffs) else "float"

    def terms(self, tol: float = 0.0):
        """Nonzero ``(indices_1based, coeff)`` pairs."""
        exact = self.mode == "exact"
        for I, c in zip(BASIS[self.degree], self.coeffs):
            if (exact and c) or (not exact and abs(c) > tol):
                yield tuple(i + 1 for i in I), c

    def coeff(self, *indices: int):
        idx0 = tuple(i - 1 for i in indices)
        s = perm_sign(idx0)
        if s == 0:
            return ZERO if self.mode == "exact" else 0.0
        return s * self.coeffs[INDEX[self.degree][tuple(sorted(idx0))]]

    def is_zero(self, tol: float = FLOAT_TOL) -> bool:
        return array_is_zero(self.coeffs, tol)

    def norm(self) -> float:
        return float(np.linalg.norm(float_array(self.coeffs)))

    def to_float(self) -> "KForm":
        return KForm(self.degree, float_array(self.coeffs))

    def to_exact(self) -> "KForm":
        if self.mode == "exact":
            return self
        raise MixedModeArithmetic("float forms cannot be made exact implicitly")

    def as_mode(self, mode: str) -> "KForm":
        if mode == self.mode:
            return self
        if mode == "float":
            return self.to_float()
        return self.to_exact()

    # arithmetic --------------------------------------------------------
    def _check(self, other: "KForm"):
        if not isinstance(other, KForm):
            raise TypeError("expected a KForm")
        if other.degree != self.degree:
            raise ValueError("forms of different degree")
        if other.mode != self.mode:
            raise ScalarModeMismatch("exact and float forms combined")

    def __add__(self, other):
        self._check(other)
        return KForm(self.degree, self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check(other)
        return KForm(self.degree, self.coeffs - other.coeffs)

    def __neg__(self):
        return KForm(self.degree, -self.coeffs)

    def __mul__(self, c):
        if self.mode == "exact":
            c = Scalar.coerce(c)
        elif isinstance(c, Scalar):
            raise ScalarModeMismatch("exact scalar times float form")
        return KForm(self.degree, self.coeffs * c)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if self.mode == "exact":
            return self * Scalar.coerce(c).inverse()
        return self * (1.0 / c)

    def __eq__(self, other):
        if not isinstance(other, KForm) or other.degree != self.degree:
            return NotImplemented
        if other.mode != self.mode:
            return False
        if self.mode == "exact":
            return all(a == b for a, b in zip(self.coeffs, other.coeffs))
        return bool(np.allclose(self.coeffs, other.coeffs, rtol=0, atol=FLOAT_TOL))

    __hash__ = None

    def allclose(self, other: "KForm", tol: float = FLOAT_TOL) -> bool:
        a, b = float_array(self.coeffs), float_array(other.coeffs)
        return self.degree == other.degree and bool(np.all(np.abs(a - b) <= tol))

    def __xor__(self, other):
        return wedge(self, other)

    def __repr__(self):
        return f"KForm({self.degree}, {str(self)!r})"

    def __str__(self):
        return format_form(self)


def format_form(a: KForm, tol: float = 1e-12) -> str:
    parts = []
    for idx, c in a.terms(tol):
        name = "e" + "".join(str(i) for i in idx) if idx else "1"
        if a.mode == "exact":
            cs = str(c)
            if cs == "1":
                body, sign = name, "+"
            elif cs == "-1":
                body, sign = name, "-"
            else:
                lead = cs.startswith("-")
                inner = cs[1:] if lead else cs
                inner = f"({inner})" if ("+" in inner or "-" in inner) else inner
                body, sign = f"{inner}*{name}" if idx else inner, "-" if lead else "+"
        else:
            body, sign = f"{abs(c):.17g}*{name}" if idx else f"{abs(c):.17g}", "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_FORM_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\([^()]*\)|[0-9/]+(?:\*?sqrt\(?[236]\)?)?|sqrt\(?[236]\)?)\s*\*?\s*)?e\^?\{?([1-7]*)\}?\s*"
)


def parse_form(text: str, degree: int | None = None) -> KForm:
    """Parse ``e127 + e347 - 1/2*sqrt2*e146`` (1-based indices, any order)."""
    s = text.strip()
    if s == "0":
        if degree is None:
            raise ValueError("degree needed for the zero form")
        return KForm.zero(degree)
    terms: dict = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _FORM_TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"malformed form literal {text!r} at {pos}")
        if m.group(1) is None and not first:
            raise ValueError(f"missing operator in form literal {text!r}")
        coeff = parse_scalar(m.group(2).strip("()")) if m.group(2) else ONE
        if m.group(1) == "-":
            coeff = -coeff
        idx = tuple(int(ch) for ch in m.group(3))
        if degree is None:
            degree = len(idx)
        elif len(idx) != degree:
            raise ValueError(f"mixed degrees in form literal {text!r}")
        key = tuple(sorted(idx))
        s_ = perm_sign(idx)
        terms[key] = terms.get(key, ZERO) + s_ * coeff
        pos = m.end()
        first = False
    return KForm.from_terms(degree, terms)


# operations -------------------------------------------------------------

def wedge(a: KForm, b: KForm) -> KForm:
    if a.mode != b.mode:
        raise ScalarModeMismatch("wedge of an exact and a float form")
    mode = a.mode
    k, l = a.degree, b.degree
    if k + l > DIM:
        return _ZeroHighForm(k + l, mode)
    ia, ib, ic, sg = _wedge_table(k, l)
    if mode == "exact":
        av, bv = a.coeffs, b.coeffs
        out = zeros(comb(DIM, k + l))
        for x, y, z, s in zip(ia.tolist(), ib.tolist(), ic.tolist(), sg.tolist()):
            u, v = av[x], bv[y]
            if u and v:
                p = u * v
                out[z] = out[z] + p if s > 0 else out[z] - p
        return KForm(k + l, out)
    vals = sg * a.coeffs[ia] * b.coeffs[ib]
    return KForm(k + l, scatter_add(comb(DIM, k + l), ic, vals, mode))


class _ZeroHighForm(KForm):
    """Zero form of degree above 7 (Lambda^{>7} = 0)."""

    __slots__ = ()

    def __init__(self, degree, mode):
        self.degree = degree
        self.coeffs = zeros(0, mode)


def interior(x, a: KForm) -> KForm:
    if a.degree == 0:
        raise DegreeZero("interior product of a 0-form")
    x = np.asarray(x)
    if x.shape != (DIM,):
        raise ValueError("vectors have 7 components")
    mode = mode_of(x, a.coeffs)
    src, vec, dst, sg = _interior_table(a.degree)
    vals = sg * x[vec] * a.coeffs[src]
    return KForm(a.degree - 1, scatter_add(comb(DIM, a.degree - 1), dst, vals, mode))


def basis_vector(i: int, mode: str = "exact") -> np.ndarray:
    """e_i with 1-based i."""
    v = zeros(DIM, mode)
    v[i - 1] = ONE if mode == "exact" else 1.0
    return v


def derivation_matrix(A, k: int) -> np.ndarray:
    """Matrix of psi -> psi(A., ., ...) + ... + psi(..., A.) on k-forms."""
    A = np.asarray(A)
    mode = mode_of(A)
    n = comb(DIM, k)
    out = zeros((n, n), mode)
    if k == 0:
        return out
    col, ai, aj, row, sg = _derivation_table(k)
    if mode == "float":
        np.add.at(out, (row, col), sg * A[ai, aj])
        return out
    for c, i, j, r, s in zip(col.tolist(), ai.tolist(), aj.tolist(), row.tolist(), sg.tolist()):
        v = A[i, j]
        if v:
            out[r, c] = out[r, c] + v if s > 0 else out[r, c] - v
    return out


def apply_derivation(A, a: KForm) -> KForm:
    mode_of(np.asarray(A), a.coeffs)
    return KForm(a.degree, derivation_matrix(A, a.degree) @ a.coeffs)


def derivation_action_matrix(a: KForm) -> np.ndarray:
    """Matrix of A -> apply_derivation(A, a), with A flattened row-major."""
    k = a.degree
    mode = a.mode
    out = zeros((comb(DIM, k), DIM * DIM), mode)
    if k == 0:
        return out
    col, ai, aj, row, sg = _derivation_table(k)
    flat = ai * DIM + aj
    if mode == "float":
        np.add.at(out, (row, flat), sg * a.coeffs[col])
        return out
    for c, f, r, s in zip(col.tolist(), flat.tolist(), row.tolist(), sg.tolist()):
        v = a.coeffs[c]
        if v:
            out[r, f] = out[r, f] + v if s > 0 else out[r, f] - v
    return out


def compound(M, k: int) -> np.ndarray:
    """k-th compound: entry [I, J] = det M[I, J] over increasing k-tuples."""
    M = np.asarray(M)
    mode = mode_of(M)
    n = comb(DIM, k)
    if k == 0:
        out = zeros((1, 1), mode)
        out[0, 0] = ONE if mode == "exact" else 1.0
        return out
    if mode == "float":
        return _compound_float(M, k)
    if is_diagonal(M):
        out = zeros((n, n))
        d = [M[i, i] for i in range(DIM)]
        for a, I in enumerate(BASIS[k]):
            p = ONE
            for i in I:
                p = p * d[i]
            out[a, a] = p
        return out
    # columns of the compound are wedges of columns of M
    return _exterior_powers_exact(tuple(tuple(r) for r in M))[k]


@lru_cache(maxsize=None)
def _laplace_table(k: int):
    """Flat gather indices expanding every k-minor along its last column."""
    rows = BASIS[k]
    n, n_prev = len(rows), comb(DIM, k - 1)
    rem = np.array([[INDEX[k - 1][I[:m] + I[m + 1:]] for m in range(k)] for I in rows])
    pick = np.array([list(I) for I in rows])
    last = np.array([J[-1] for J in rows])
    rest = np.array([INDEX[k - 1][J[:-1]] for J in rows])
    shape = (n, n, k)
    m_idx = np.broadcast_to(pick[:, None, :] * DIM + last[None, :, None], shape).ravel()
    p_idx = np.broadcast_to(rem[:, None, :] * n_prev + rest[None, :, None], shape).ravel()
    sign = np.array([(-1) ** (m + k - 1) for m in range(k)], dtype=float)
    return m_idx, p_idx, sign, shape


def _compound_float(M: np.ndarray, k: int) -> np.ndarray:
    flat = np.ascontiguousarray(M, dtype=float).ravel()
    prev = np.ones(1)
    for j in range(1, k + 1):
        m_idx, p_idx, sign, shape = _laplace_table(j)
        prev = ((flat.take(m_idx) * prev.take(p_idx)).reshape(shape) @ sign).ravel()
    n = comb(DIM, k)
    return prev.reshape(n, n)


@lru_cache(maxsize=64)
def _exterior_powers_exact(rows):
    M = np.array(rows, dtype=object)
    cols = [KForm(1, M[:, j].copy()) for j in range(DIM)]
    prefix = {(): KForm.constant(1)}
    powers = [compound(M, 0)]
    for k in range(1, DIM + 1):
        out = zeros((comb(DIM, k), comb(DIM, k)))
        for b, J in enumerate(BASIS[k]):
            w = wedge(prefix[J[:-1]], cols[J[-1]])
            prefix[J] = w
            out[:, b] = w.coeffs
        powers.append(out)
    return powers


def gl_act(h, a: KForm) -> KForm:
    """(h . a)(X_1, ..., X_k) = a(h^{-1} X_1, ..., h^{-1} X_k)."""
    h = np.asarray(h)
    mode_of(h, a.coeffs)
    hinv = inverse(h)
    return gl_act_inv(hinv, a)


def gl_act_inv(hinv, a: KForm) -> KForm:
    """Same action, given h^{-1} directly."""
    C = compound(hinv, a.degree)
    return KForm(a.degree, C.T @ a.coeffs)


def signed_permutation_matrix(images, mode: str = "exact") -> np.ndarray:
    """Matrix with h(e_j) = sign * e_{|images[j]|} (1-based, signed entries)."""
    if sorted(abs(int(x)) for x in images) != list(range(1, DIM + 1)):
        raise ValueError(f"{images} is not a signed permutation of 1..7")
    h = zeros((DIM, DIM), mode)
    for j, img in enumerate(images):
        s = 1 if img > 0 else -1
        h[abs(img) - 1, j] = (ONE if mode == "exact" else 1.0) * s
    return h


def find_signed_permutation(source: KForm, target: KForm):
    """Signed permutation images ``p`` with gl_act(h_p, source) == target.

    Under h(e_j) = s_j e_{p(j)} the action sends e^i to s_i e^{p(i)}, so the
    terms of ``source`` must map bijectively onto the terms of ``target``.
    Returns a tuple of signed 1-based images or None.
    """
    src = {tuple(i - 1 for i in I): c for I, c in source.terms()}
    tgt = {tuple(i - 1 for i in I): c for I, c in target.terms()}
    if len(src) != len(tgt):
        return None
    perm = [None] * DIM
    signs = [None] * DIM
    used = set()

    def consistent() -> bool:
        for I, c in src.items():
            if all(perm[i] is not None for i in I):
                img = tuple(perm[i] for i in I)
                key = tuple(sorted(img))
                if key not in tgt:
                    return False
                if all(signs[i] is not None for i in I):
                    s = perm_sign(img)
                    for i in I:
                        s *= signs[i]
                    if s * c != tgt[key]:
                        return False
        return True

    def assign(pos: int):
        if pos == DIM:
            return True
        for img in range(DIM):
            if img in used:
                continue
            perm[pos] = img
            used.add(img)
            for s in (1, -1):
                signs[pos] = s
                if consistent() and assign(pos + 1):
                    return True
            signs[pos] = None
            used.discard(img)
            perm[pos] = None
        return False

    if not assign(0):
        return None
    return tuple(s * (p + 1) for p, s in zip(perm, signs))


def random_form(rng: np.random.Generator, degree: int, mode: str = "exact",
                density: float = 0.5, lo: int = -3, hi: int = 3) -> KForm:
    n = comb(DIM, degree)
    vals = rng.integers(lo, hi + 1, size=n)
    mask = rng.random(n) < density
    if mode == "float":
        return KForm(degree, np.where(mask, vals, 0).astype(float) + rng.normal(size=n) * mask)
    coeffs = [Scalar(int(v)) if m else ZERO for v, m in zip(vals, mask)]
    return KForm(degree, np.array(coeffs, dtype=object))


# reference G2 form e^{127}+e^{347}+e^{567}+e^{135}-e^{146}-e^{236}-e^{245}
PHI0 = parse_form("e127 + e347 + e567 + e135 - e146 - e236 - e245")
VOL0 = KForm.basis(1, 2, 3, 4, 5, 6, 7)
