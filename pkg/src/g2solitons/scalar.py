"""Exact arithmetic in Q(sqrt2, sqrt3) and linear algebra over it.

A :class:`Scalar` is ``q0 + q1*sqrt2 + q2*sqrt3 + q3*sqrt6`` with rational
coordinates, stored as four integers over a common positive denominator.
Float mode uses plain Python/numpy floats; the two never mix silently.

Matrices and vectors are numpy arrays. ``dtype=object`` arrays holding
Scalars are exact; ``float64`` arrays are float mode.
"""

from __future__ import annotations

import itertools
import math
import numbers
import re
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

FLOAT_TOL = 1e-9


class MixedModeArithmetic(TypeError):
    """An exact Scalar was combined with a float without an explicit cast."""


class SingularMatrix(ValueError):
    pass


class NotSymmetric(ValueError):
    pass


def _sign_q2(p: int, q: int) -> int:
    """Sign of p + q*sqrt2 for integers p, q."""
    sp = (p > 0) - (p < 0)
    sq = (q > 0) - (q < 0)
    if sp == sq or sq == 0:
        return sp
    if sp == 0:
        return sq
    # opposite signs: compare p^2 with 2 q^2
    if p * p > 2 * q * q:
        return sp
    return sq


class Scalar:
    """Immutable element of Q(sqrt2, sqrt3)."""

    __slots__ = ("_n", "_d")

    def __init__(self, q0=0, q1=0, q2=0, q3=0):
        if any(isinstance(q, float) for q in (q0, q1, q2, q3)):
            raise MixedModeArithmetic("Scalar coordinates must be rational")
        fr = [Fraction(q) for q in (q0, q1, q2, q3)]
        den = math.lcm(*(f.denominator for f in fr))
        n = tuple(f.numerator * (den // f.denominator) for f in fr)
        self._set(n, den)

    def _set(self, n, d):
        if d != 1:
            g = math.gcd(*n, d)
            if g != 1:
                n = tuple(x // g for x in n)
                d //= g
        self._n = n
        self._d = d

    @classmethod
    def _raw(cls, n, d) -> "Scalar":
        obj = object.__new__(cls)
        if d < 0:
            n = tuple(-x for x in n)
            d = -d
        obj._set(n, d)
        return obj

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if type(x) is int:
            return cls._raw((x, 0, 0, 0), 1)
        if isinstance(x, float):
            raise MixedModeArithmetic(f"cannot combine exact Scalar with float {x!r}")
        if isinstance(x, (int, Fraction, np.integer)):
            f = Fraction(int(x)) if isinstance(x, np.integer) else Fraction(x)
            return cls._raw((f.numerator, 0, 0, 0), f.denominator)
        if isinstance(x, str):
            return parse_scalar(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")

    # coordinates -------------------------------------------------------
    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(x, self._d) for x in self._n)

    q0 = property(lambda self: Fraction(self._n[0], self._d))
    q1 = property(lambda self: Fraction(self._n[1], self._d))
    q2 = property(lambda self: Fraction(self._n[2], self._d))
    q3 = property(lambda self: Fraction(self._n[3], self._d))

    def is_rational(self) -> bool:
        return self._n[1] == 0 and self._n[2] == 0 and self._n[3] == 0

    def conjugate(self, s2: int = -1, s3: int = 1) -> "Scalar":
        """Image under sqrt2 -> s2*sqrt2, sqrt3 -> s3*sqrt3."""
        a, b, c, d = self._n
        return Scalar._raw((a, s2 * b, s3 * c, s2 * s3 * d), self._d)

    # arithmetic --------------------------------------------------------
    def __add__(self, other):
        if type(other) is Scalar:
            o = other
        else:
            try:
                o = Scalar.coerce(other)
            except TypeError as exc:
                if isinstance(exc, MixedModeArithmetic):
                    raise
                return NotImplemented
        a0, a1, a2, a3 = self._n
        b0, b1, b2, b3 = o._n
        if not (b0 or b1 or b2 or b3):
            return self
        if not (a0 or a1 or a2 or a3):
            return o
        d1, d2 = self._d, o._d
        if d1 == d2:
            return Scalar._raw((a0 + b0, a1 + b1, a2 + b2, a3 + b3), d1)
        return Scalar._raw((a0 * d2 + b0 * d1, a1 * d2 + b1 * d1, a2 * d2 + b2 * d1,
                            a3 * d2 + b3 * d1), d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(tuple(-x for x in self._n), self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError as exc:
            if isinstance(exc, MixedModeArithmetic):
                raise
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if type(other) is Scalar:
            o = other
        else:
            try:
                o = Scalar.coerce(other)
            except TypeError as exc:
                if isinstance(exc, MixedModeArithmetic):
                    raise
                return NotImplemented
        a0, a1, a2, a3 = self._n
        b0, b1, b2, b3 = o._n
        if not (a0 or a1 or a2 or a3):
            return self
        if not (b0 or b1 or b2 or b3):
            return o
        d = self._d * o._d
        if not (a1 or a2 or a3) and not (b1 or b2 or b3):
            return Scalar._raw((a0 * b0, 0, 0, 0), d)
        c0 = a0 * b0 + 2 * a1 * b1 + 3 * a2 * b2 + 6 * a3 * b3
        c1 = a0 * b1 + a1 * b0 + 3 * (a2 * b3 + a3 * b2)
        c2 = a0 * b2 + a2 * b0 + 2 * (a1 * b3 + a3 * b1)
        c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1
        return Scalar._raw((c0, c1, c2, c3), d)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not any(self._n):
            raise ZeroDivisionError("division by zero in Q(sqrt2, sqrt3)")
        a0, a1, a2, a3 = self._n
        # x = u + v sqrt3 with u = a0 + a1 sqrt2, v = a2 + a3 sqrt2
        # N = u^2 - 3 v^2 = n0 + n1 sqrt2
        n0 = a0 * a0 + 2 * a1 * a1 - 3 * (a2 * a2 + 2 * a3 * a3)
        n1 = 2 * a0 * a1 - 6 * a2 * a3
        m = n0 * n0 - 2 * n1 * n1  # rational norm, nonzero
        # 1/x = (u - v sqrt3) * (n0 - n1 sqrt2) / m, times the denominator d
        conj = Scalar._raw((a0, a1, -a2, -a3), 1)
        num = conj * Scalar._raw((n0, -n1, 0, 0), 1)
        return Scalar._raw(tuple(x * self._d for x in num._n), m)

    def __truediv__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError as exc:
            if isinstance(exc, MixedModeArithmetic):
                raise
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, numbers.Integral):
            raise TypeError("Scalar powers must be integers")
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison --------------------------------------------------------
    def sign(self) -> int:
        a0, a1, a2, a3 = self._n
        su = _sign_q2(a0, a1)
        sv = _sign_q2(a2, a3)
        if su == sv or sv == 0:
            return su
        if su == 0:
            return sv
        # compare u^2 and 3 v^2 inside Q(sqrt2)
        p = a0 * a0 + 2 * a1 * a1 - 3 * (a2 * a2 + 2 * a3 * a3)
        q = 2 * a0 * a1 - 6 * a2 * a3
        return su if _sign_q2(p, q) > 0 else sv

    def __bool__(self):
        return any(self._n)

    def __eq__(self, other):
        if isinstance(other, float):
            return False
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self._n == o._n and self._d == o._d

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self._n[0], self._d))
        return hash((self._n, self._d))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # conversion --------------------------------------------------------
    def __float__(self):
        a0, a1, a2, a3 = self._n
        if not (a1 or a2 or a3):
            return a0 / self._d
        # mpmath avoids cancellation for values near zero
        with mpmath.workdps(40):
            v = (a0 + a1 * mpmath.sqrt(2) + a2 * mpmath.sqrt(3) + a3 * mpmath.sqrt(6)) / self._d
            return float(v)

    def to_float(self) -> float:
        return float(self)

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def __str__(self):
        return format_scalar(self)


ZERO = Scalar()
ONE = Scalar(1)
SQRT2 = Scalar(0, 1)
SQRT3 = Scalar(0, 0, 1)
SQRT6 = Scalar(0, 0, 0, 1)


# text grammar ------------------------------------------------------------

_TERM = re.compile(
    r"""\s*([+-])?\s*
        (?:
           (?P<num>\d+(?:/\d+)?)\s*(?:\*?\s*sqrt\s*\(?\s*(?P<r1>[236])\s*\)?)?
         | sqrt\s*\(?\s*(?P<r2>[236])\s*\)?
        )\s*""",
    re.VERBOSE,
)


def parse_scalar(text: str) -> Scalar:
    """Parse ``-3/2+1/2*sqrt2``-style strings (terms optional, any order)."""
    s = text.strip()
    if not s:
        raise ValueError("empty scalar literal")
    pos = 0
    coords = [Fraction(0)] * 4
    slot = {None: 0, "2": 1, "3": 2, "6": 3}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"malformed scalar literal {text!r}")
        if m.group(1) is None and not first:
            raise ValueError(f"missing operator in scalar literal {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group("num") is not None:
            try:
                value = Fraction(m.group("num"))
            except ZeroDivisionError:
                raise ValueError(f"zero denominator in {text!r}") from None
            root = m.group("r1")
        else:
            value = Fraction(1)
            root = m.group("r2")
        coords[slot[root]] += sign * value
        pos = m.end()
        first = False
    return Scalar(*coords)


def format_scalar(x: Scalar) -> str:
    parts = []
    for coeff, name in zip(x.coords, ("", "sqrt2", "sqrt3", "sqrt6")):
        if coeff == 0:
            continue
        if name and abs(coeff) == 1:
            body = name
        elif name:
            body = f"{abs(coeff)}*{name}"
        else:
            body = str(abs(coeff))
        sign = "-" if coeff < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out


def to_scalar(x) -> Scalar:
    return Scalar.coerce(x)


# mode helpers ------------------------------------------------------------

def is_exact_array(a: np.ndarray) -> bool:
    return a.dtype == object


def mode_of(*arrays) -> str:
    modes = {"exact" if is_exact_array(np.asarray(a)) else "float" for a in arrays}
    if len(modes) > 1:
        raise MixedModeArithmetic("exact and float arrays combined")
    return modes.pop() if modes else "exact"


def exact_array(values) -> np.ndarray:
    arr = np.asarray(values, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = Scalar.coerce(v)
    return out


def float_array(values) -> np.ndarray:
    arr = np.asarray(values)
    if arr.dtype == object:
        return np.vectorize(float, otypes=[float])(arr) if arr.size else arr.astype(float)
    return arr.astype(float)


def zeros(shape, mode: str = "exact") -> np.ndarray:
    if mode == "float":
        return np.zeros(shape)
    out = np.empty(shape, dtype=object)
    out.fill(ZERO)
    return out


def identity(n: int, mode: str = "exact") -> np.ndarray:
    out = zeros((n, n), mode)
    for i in range(n):
        out[i, i] = ONE if mode == "exact" else 1.0
    return out


def diag(values, mode: str | None = None) -> np.ndarray:
    vals = list(values)
    if mode is None:
        mode = "float" if any(isinstance(v, float) for v in vals) else "exact"
    out = zeros((len(vals), len(vals)), mode)
    for i, v in enumerate(vals):
        out[i, i] = Scalar.coerce(v) if mode == "exact" else float(v)
    return out


def is_zero(x, tol: float = FLOAT_TOL) -> bool:
    if isinstance(x, Scalar):
        return not x
    return abs(x) <= tol


def array_is_zero(a: np.ndarray, tol: float = FLOAT_TOL) -> bool:
    a = np.asarray(a)
    if is_exact_array(a):
        return not any(bool(x) for x in a.flat)
    return bool(np.all(np.abs(a) <= tol))


def arrays_equal(a: np.ndarray, b: np.ndarray, tol: float = FLOAT_TOL) -> bool:
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        return False
    return array_is_zero(a - b, tol)


# linear algebra ----------------------------------------------------------

@dataclass(frozen=True)
class SolutionSet:
    """All solutions of A x = b: ``particular + span(nullspace rows)``.

    ``particular`` is None when the system is inconsistent.
    """

    particular: np.ndarray | None
    nullspace: np.ndarray  # shape (k, n)
    mode: str

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def dim(self) -> int:
        return self.nullspace.shape[0]


def _pivot_key(row: dict, col: int):
    v = row[col]
    # prefer rational pivots with small height, then short rows
    height = v._d + sum(abs(x) for x in v._n)
    return (not v.is_rational(), len(row), height)


def _rref_exact(A: np.ndarray, b: np.ndarray | None):
    nrows, ncols = A.shape
    rows = []
    for r in range(nrows):
        row = {c: A[r, c] for c in range(ncols) if A[r, c]}
        rhs = b[r] if b is not None else ZERO
        if row or rhs:
            rows.append([row, Scalar.coerce(rhs)])
    pivots = {}  # col -> [row, rhs]
    remaining = rows
    for col in range(ncols):
        cands = [rr for rr in remaining if col in rr[0]]
        if not cands:
            continue
        piv = min(cands, key=lambda rr: _pivot_key(rr[0], col))
        remaining = [rr for rr in remaining if rr is not piv]
        inv = piv[0][col].inverse()
        piv[0] = {c: v * inv for c, v in piv[0].items()}
        piv[1] = piv[1] * inv
        prow, prhs = piv
        for rr in remaining + list(pivots.values()):
            f = rr[0].get(col)
            if f is None:
                continue
            row = rr[0]
            for c, v in prow.items():
                nv = row.get(c, ZERO) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
            rr[1] = rr[1] - f * prhs
        pivots[col] = piv
    inconsistent = any(not rr[0] and rr[1] for rr in remaining)
    return pivots, inconsistent


def _solve_exact(A, b):
    n = A.shape[1]
    pivots, inconsistent = _rref_exact(A, b)
    free = [c for c in range(n) if c not in pivots]
    null = zeros((len(free), n))
    for k, f in enumerate(free):
        null[k, f] = ONE
        for col, (row, _) in pivots.items():
            v = row.get(f)
            if v is not None:
                null[k, col] = -v
    if inconsistent:
        return SolutionSet(None, null, "exact")
    part = zeros(n)
    for col, (_, rhs) in pivots.items():
        part[col] = rhs
    return SolutionSet(part, null, "exact")


def _solve_float(A, b, tol):
    A = np.asarray(A, dtype=float)
    m, n = A.shape
    if m == 0:
        return SolutionSet(np.zeros(n), np.eye(n), "float")
    u, s, vt = np.linalg.svd(A)
    scale = max(1.0, s[0] if s.size else 0.0)
    rank = int(np.sum(s > tol * scale))
    null = vt[rank:].copy()
    if b is None:
        b = np.zeros(m)
    b = np.asarray(b, dtype=float)
    x, *_ = np.linalg.lstsq(A, b, rcond=None)
    resid = np.linalg.norm(A @ x - b)
    if resid > tol * max(1.0, np.linalg.norm(b), scale):
        return SolutionSet(None, null, "float")
    return SolutionSet(x, null, "float")


def solve_linear(A, b=None, tol: float = FLOAT_TOL) -> SolutionSet:
    """Complete solution set of ``A x = b`` (homogeneous when b is None)."""
    A = np.asarray(A)
    if A.ndim != 2:
        raise ValueError("A must be a matrix")
    if b is not None:
        mode_of(A, b)
    if is_exact_array(A):
        return _solve_exact(A, None if b is None else np.asarray(b, dtype=object))
    return _solve_float(A, b, tol)


def nullspace(A, tol: float = FLOAT_TOL) -> np.ndarray:
    return solve_linear(A, None, tol).nullspace


def rank(A, tol: float = FLOAT_TOL) -> int:
    A = np.asarray(A)
    return A.shape[1] - nullspace(A, tol).shape[0]


def row_basis(vectors, tol: float = FLOAT_TOL) -> np.ndarray:
    """A basis (as rows) of the span of the given row vectors."""
    V = np.asarray(vectors)
    if V.size == 0:
        return V.reshape(0, V.shape[-1] if V.ndim == 2 else 0)
    if is_exact_array(V):
        return V[_independent_rows_exact(V)]
    r = rank(V, tol)
    u, s, vt = np.linalg.svd(V)
    return vt[:r]


def _independent_rows_exact(V):
    chosen = []
    basis = []
    for i in range(V.shape[0]):
        trial = basis + [V[i]]
        if rank(np.array(trial, dtype=object)) == len(trial):
            basis.append(V[i])
            chosen.append(i)
    return chosen


def determinant(A) -> object:
    """Determinant; fraction-free Bareiss elimination in exact mode."""
    A = np.asarray(A)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("determinant of a non-square matrix")
    if not is_exact_array(A):
        return float(np.linalg.det(A)) if n else 1.0
    if n == 0:
        return ONE
    M = [[Scalar.coerce(x) for x in row] for row in A]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not M[k][k]:
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pkk = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pkk - M[i][k] * M[k][j]) / prev
        prev = pkk
    d = M[n - 1][n - 1]
    return d if sign > 0 else -d


def inverse(A) -> np.ndarray:
    A = np.asarray(A)
    n = A.shape[0]
    if not is_exact_array(A):
        if abs(np.linalg.det(A)) < 1e-300:
            raise SingularMatrix("matrix is singular")
        return np.linalg.inv(A)
    M = [[Scalar.coerce(x) for x in row] + [ONE if i == j else ZERO for j in range(n)]
         for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        M[col], M[piv] = M[piv], M[col]
        inv = M[col][col].inverse()
        M[col] = [v * inv for v in M[col]]
        for r in range(n):
            f = M[r][col]
            if r != col and f:
                M[r] = [a - f * b_ for a, b_ in zip(M[r], M[col])]
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = M[i][n + j]
    return out


def is_symmetric(A, tol: float = FLOAT_TOL) -> bool:
    """Entrywise check; in float mode the tolerance is relative to max |A|."""
    A = np.asarray(A)
    if not is_exact_array(A) and A.size:
        tol = tol * max(1.0, float(np.max(np.abs(A))))
    return arrays_equal(A, A.T, tol)


def is_diagonal(A, tol: float = FLOAT_TOL) -> bool:
    A = np.asarray(A)
    off = A.copy()
    for i in range(min(A.shape)):
        off[i, i] = ZERO if is_exact_array(A) else 0.0
    return array_is_zero(off, tol)


def definiteness(A, tol: float = FLOAT_TOL) -> str:
    """One of 'positive-definite', 'negative-definite', 'indefinite', 'degenerate'."""
    A = np.asarray(A)
    if not is_symmetric(A, tol):
        raise NotSymmetric("definiteness requires a symmetric matrix")
    n = A.shape[0]
    if not is_exact_array(A):
        ev = np.linalg.eigvalsh(A)
        scale = max(1.0, float(np.max(np.abs(ev)))) if n else 1.0
        if np.any(np.abs(ev) <= tol * scale):
            return "degenerate"
        if np.all(ev > 0):
            return "positive-definite"
        if np.all(ev < 0):
            return "negative-definite"
        return "indefinite"
    if not determinant(A):
        return "degenerate"
    minors = [determinant(A[:k, :k]).sign() for k in range(1, n + 1)]
    if all(s > 0 for s in minors):
        return "positive-definite"
    if all(s == (-1) ** k for k, s in enumerate(minors, start=1)):
        return "negative-definite"
    return "indefinite"


# roots ------------------------------------------------------------------

_EMBEDDINGS = ((1, 1), (-1, 1), (1, -1), (-1, -1))


def nth_root_exact(s, n: int) -> Scalar | None:
    """Real n-th root of ``s`` inside Q(sqrt2, sqrt3), or None.

    For odd n the root is the unique real one (any sign of s); for even n
    the positive root of a positive s. Candidates come from the four real
    embeddings, are rationalised and then verified exactly.
    """
    s = Scalar.coerce(s)
    if not s:
        return ZERO
    if n == 1:
        return s
    if n % 2 == 0 and s.sign() < 0:
        return None
    height = max(abs(x) for x in s._n) + s._d
    # a conjugate can be as small as norm / height^3, so evaluating it
    # cancels up to ~4 log10(height) digits
    dps = 40 + 5 * len(str(height))
    with mpmath.workdps(dps):
        vals = []
        for s2, s3 in _EMBEDDINGS:
            c = s.conjugate(s2, s3)
            x = (c._n[0] + c._n[1] * mpmath.sqrt(2) + c._n[2] * mpmath.sqrt(3)
                 + c._n[3] * mpmath.sqrt(6)) / c._d
            if x < 0 and n % 2 == 0:
                return None
            root = mpmath.root(abs(x), n)
            vals.append(-root if x < 0 else root)
        # for even n the conjugates of a root may carry either sign
        sign_choices = [(1, 1, 1, 1)]
        if n % 2 == 0:
            sign_choices = [(1,) + t for t in itertools.product((1, -1), repeat=3)]
        for signs in sign_choices:
            v = [sg * x for sg, x in zip(signs, vals)]
            q0 = (v[0] + v[1] + v[2] + v[3]) / 4
            q1 = (v[0] - v[1] + v[2] - v[3]) / (4 * mpmath.sqrt(2))
            q2 = (v[0] + v[1] - v[2] - v[3]) / (4 * mpmath.sqrt(3))
            q3 = (v[0] - v[1] - v[2] + v[3]) / (4 * mpmath.sqrt(6))
            limit = 10 ** (dps // 3)
            cand = Scalar(*(Fraction(mpmath.nstr(q, dps, strip_zeros=False)).limit_denominator(limit)
                            for q in (q0, q1, q2, q3)))
            if cand ** n == s and (n % 2 == 1 or cand.sign() > 0):
                return cand
    return None


def ninth_root_exact(s) -> Scalar | None:
    """Real ninth root in the field, if it exists."""
    r = nth_root_exact(s, 9)
    return r


def real_root_float(x: float, n: int) -> float:
    if x < 0:
        if n % 2 == 0:
            raise ValueError("even root of a negative number")
        return -((-x) ** (1.0 / n))
    return x ** (1.0 / n)
