"""Lie algebras on R^7 given by structure constants.

``[e_i, e_j] = sum_k C[i, j, k] e_k`` with ``C`` stored as a full
antisymmetric (7, 7, 7) array. Derivations and automorphisms act on column
vectors: ``D e_j = sum_i D[i, j] e_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .exterior import (
    BASIS,
    DIM,
    KForm,
    apply_derivation,
    wedge,
)
from .scalar import (
    FLOAT_TOL,
    Scalar,
    SingularMatrix,
    array_is_zero,
    determinant,
    float_array,
    identity,
    inverse,
    is_exact_array,
    mode_of,
    nullspace,
    row_basis,
    zeros,
)


class JacobiError(ValueError):
    pass


@dataclass(frozen=True)
class JacobiReport:
    failures: tuple  # 1-based (i, j, k) triples

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.passed


class LieAlgebra:
    """7-dimensional Lie algebra by structure constants."""

    def __init__(self, brackets, name: str = "", params=None, mode: str = "exact",
                 check: bool = True):
        """``brackets`` maps 1-based ``(i, j)`` to ``{k: coeff}`` or is an
        iterable of ``(i, j, k, coeff)``."""
        C = zeros((DIM, DIM, DIM), mode)
        items = brackets.items() if isinstance(brackets, dict) else None
        entries = []
        if items is not None:
            for (i, j), rhs in items:
                for k, c in rhs.items():
                    entries.append((i, j, k, c))
        else:
            entries = list(brackets)
        for i, j, k, c in entries:
            if i == j:
                raise ValueError(f"bracket [e{i},e{i}] must vanish")
            v = Scalar.coerce(c) if mode == "exact" else float(c)
            C[i - 1, j - 1, k - 1] = C[i - 1, j - 1, k - 1] + v
            C[j - 1, i - 1, k - 1] = C[j - 1, i - 1, k - 1] - v
        self.C = C
        self.name = name
        self.params = dict(params or {})
        self._cache = {}
        if check:
            report = validate_jacobi(self)
            if not report:
                raise JacobiError(f"Jacobi identity fails on {report.failures[:5]}")

    @classmethod
    def from_tensor(cls, C, name="", params=None) -> "LieAlgebra":
        g = cls([], name, params, mode="float" if not is_exact_array(C) else "exact", check=False)
        g.C = np.asarray(C)
        return g

    @property
    def mode(self) -> str:
        return "exact" if is_exact_array(self.C) else "float"

    def to_float(self) -> "LieAlgebra":
        return LieAlgebra.from_tensor(float_array(self.C), self.name, self.params)

    def as_mode(self, mode: str) -> "LieAlgebra":
        if mode == self.mode:
            return self
        if mode == "float":
            key = "float_twin"
            if key not in self._cache:
                self._cache[key] = self.to_float()
            return self._cache[key]
        raise ValueError("float algebras cannot be made exact")

    def brackets(self):
        """Nonzero ``(i, j, k, coeff)`` with i < j, 1-based."""
        exact = self.mode == "exact"
        for i, j in combinations(range(DIM), 2):
            for k in range(DIM):
                c = self.C[i, j, k]
                if (exact and c) or (not exact and abs(c) > 0):
                    yield i + 1, j + 1, k + 1, c

    def bracket(self, x, y) -> np.ndarray:
        x, y = np.asarray(x), np.asarray(y)
        return np.einsum("i,j,ijk->k", x, y, self.C)

    def ad(self, x) -> np.ndarray:
        """Matrix of ad_x: column j is [x, e_j]."""
        return np.einsum("i,ijk->kj", np.asarray(x), self.C)

    def d_matrix(self, k: int) -> np.ndarray:
        """Matrix of the Chevalley-Eilenberg differential Lambda^k -> Lambda^{k+1}."""
        key = ("d", k)
        if key not in self._cache:
            self._cache[key] = _build_d_matrix(self, k)
        return self._cache[key]

    def __repr__(self):
        return f"LieAlgebra({self.name!r})"

    def is_abelian(self) -> bool:
        return array_is_zero(self.C)


def _d_one_forms(g: LieAlgebra):
    """d e^k = -sum_{i<j} C[i, j, k] e^{ij}, since (d a)(X, Y) = -a([X, Y])."""
    out = []
    mode = g.mode
    for k in range(DIM):
        coeffs = zeros(comb(DIM, 2), mode)
        for p, (i, j) in enumerate(BASIS[2]):
            coeffs[p] = -g.C[i, j, k]
        out.append(KForm(2, coeffs))
    return out


def _build_d_matrix(g: LieAlgebra, k: int) -> np.ndarray:
    mode = g.mode
    n_out = comb(DIM, k + 1) if k < DIM else 0
    M = zeros((n_out, comb(DIM, k)), mode)
    if k >= DIM:
        return M
    if k == 0:
        return M
    de = _d_one_forms(g)
    one = lambda i: KForm.basis(i + 1, mode=mode)
    for col, I in enumerate(BASIS[k]):
        total = KForm.zero(k + 1, mode)
        for m, i in enumerate(I):
            # d(e^{i_1} ^ ... ^ e^{i_k}) = sum_m (-1)^m e^{i_1..} ^ d e^{i_m} ^ ...
            left = KForm.constant(1, mode)
            for i2 in I[:m]:
                left = wedge(left, one(i2))
            term = wedge(left, de[i])
            for i2 in I[m + 1:]:
                term = wedge(term, one(i2))
            total = total + term if m % 2 == 0 else total - term
        M[:, col] = total.coeffs
    return M


def ce_d(g: LieAlgebra, a: KForm) -> KForm:
    """Chevalley-Eilenberg differential of a left-invariant form."""
    if a.degree >= DIM:
        raise ValueError("d of a 7-form leaves Lambda^7")
    alg = g.as_mode(a.mode) if g.mode != a.mode else g
    mode_of(alg.C, a.coeffs)
    return KForm(a.degree + 1, alg.d_matrix(a.degree) @ a.coeffs)


def validate_jacobi(g: LieAlgebra) -> JacobiReport:
    C = g.C
    failures = []
    for i, j, k in combinations(range(DIM), 3):
        # [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
        total = (np.einsum("a,ab->b", C[i, j], C[:, k])
                 + np.einsum("a,ab->b", C[j, k], C[:, i])
                 + np.einsum("a,ab->b", C[k, i], C[:, j]))
        if not array_is_zero(total):
            failures.append((i + 1, j + 1, k + 1))
    return JacobiReport(tuple(failures))


def lower_central_series(g: LieAlgebra) -> list[int]:
    """Dimensions of g = g^1 > g^2 = [g, g] > ... until it stabilises."""
    current = identity(DIM, g.mode)
    dims = [DIM]
    for _ in range(DIM + 1):
        vecs = [g.bracket(e, v) for e in identity(DIM, g.mode) for v in current]
        vecs = [v for v in vecs if not array_is_zero(v)]
        if not vecs:
            dims.append(0)
            break
        current = row_basis(np.array(vecs))
        dims.append(current.shape[0])
        if dims[-1] == dims[-2]:
            break
    return dims


def is_nilpotent(g: LieAlgebra) -> bool:
    return lower_central_series(g)[-1] == 0


# derivations ------------------------------------------------------------

def _derivation_system(g: LieAlgebra) -> np.ndarray:
    """Rows: (pair i<j, component k); columns: D[a, b] flattened (a*7 + b)."""
    C = g.C
    mode = g.mode
    pairs = list(combinations(range(DIM), 2))
    A = zeros((len(pairs) * DIM, DIM * DIM), mode)
    for p, (i, j) in enumerate(pairs):
        for k in range(DIM):
            r = p * DIM + k
            # D[e_i, e_j]_k = sum_l C[i,j,l] D[k,l]
            for l in range(DIM):
                c = C[i, j, l]
                if c:
                    A[r, k * DIM + l] = A[r, k * DIM + l] + c
            # [D e_i, e_j]_k = sum_a D[a,i] C[a,j,k]
            for a in range(DIM):
                c = C[a, j, k]
                if c:
                    A[r, a * DIM + i] = A[r, a * DIM + i] - c
                c = C[i, a, k]
                if c:
                    A[r, a * DIM + j] = A[r, a * DIM + j] - c
    return A


def derivation_system_sparse(g: LieAlgebra) -> tuple:
    """Nonzero entries ``(row, col, coeff)`` of the derivation equations."""
    key = "der_sparse"
    if key not in g._cache:
        A = _derivation_system(g)
        rows, cols = np.nonzero(A != 0) if A.dtype != object else np.nonzero(
            np.vectorize(bool, otypes=[bool])(A))
        g._cache[key] = (A.shape, tuple(zip(rows.tolist(), cols.tolist(), A[rows, cols].tolist())))
    return g._cache[key]


def apply_derivation_system(g: LieAlgebra, M) -> np.ndarray:
    """Derivation equations evaluated on the flattened matrix M."""
    (n, _), entries = derivation_system_sparse(g)
    v = np.asarray(M).reshape(-1)
    out = zeros(n, g.mode)
    for r, c, a in entries:
        x = v[c]
        if x:
            out[r] = out[r] + a * x
    return out


def derivation_defect(g: LieAlgebra, D) -> np.ndarray:
    """D[e_i,e_j] - [De_i,e_j] - [e_i,De_j] for all (i, j), as a (7,7,7) array."""
    D = np.asarray(D)
    C = g.C
    lhs = np.einsum("ijl,kl->ijk", C, D)
    r1 = np.einsum("ai,ajk->ijk", D, C)
    r2 = np.einsum("aj,iak->ijk", D, C)
    return lhs - r1 - r2


def is_derivation(g: LieAlgebra, D, tol: float = FLOAT_TOL) -> bool:
    D = np.asarray(D)
    if D.dtype != g.C.dtype and is_exact_array(g.C):
        mode_of(g.C, D)
    return array_is_zero(derivation_defect(g, D), tol)


@dataclass(frozen=True)
class DerivationSpace:
    basis: tuple  # of 7x7 arrays
    mode: str

    @property
    def dim(self) -> int:
        return len(self.basis)

    def combine(self, coords) -> np.ndarray:
        out = zeros((DIM, DIM), self.mode)
        for c, B in zip(coords, self.basis):
            out = out + c * B
        return out

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)


def derivation_space(g: LieAlgebra) -> DerivationSpace:
    key = "der"
    if key not in g._cache:
        A = _derivation_system(g)
        null = nullspace(A)
        basis = tuple(np.asarray(v).reshape(DIM, DIM) for v in null)
        g._cache[key] = DerivationSpace(basis, g.mode)
    return g._cache[key]


def der_contains(g: LieAlgebra, D) -> bool:
    return is_derivation(g, D)


# Lie derivative ----------------------------------------------------------

def lie_derivative(a: KForm, D) -> KForm:
    """(L_{X_D} a)(X_1..X_k) = a(D X_1, ..., X_k) + ... + a(X_1, ..., D X_k)."""
    return apply_derivation(D, a)


# isomorphisms ------------------------------------------------------------

@dataclass(frozen=True)
class IsomorphismReport:
    forward: bool   # h[x,y]_1 = [hx,hy]_2
    inverse: bool   # h^{-1}[x,y]_1 = [h^{-1}x,h^{-1}y]_2

    @property
    def direction(self) -> str | None:
        if self.forward:
            return "forward"
        if self.inverse:
            return "inverse"
        return None

    def __bool__(self):
        return self.forward or self.inverse


def _maps_brackets(g1: LieAlgebra, g2: LieAlgebra, h) -> bool:
    # h [e_i, e_j]_1 vs [h e_i, h e_j]_2
    lhs = np.einsum("ijl,kl->ijk", g1.C, h)
    rhs = np.einsum("ai,bj,abk->ijk", h, h, g2.C, optimize=True)
    return array_is_zero(lhs - rhs)


def check_isomorphism(g1: LieAlgebra, g2: LieAlgebra, h) -> IsomorphismReport:
    h = np.asarray(h)
    mode_of(g1.C, g2.C, h)
    det = determinant(h)
    if (is_exact_array(h) and not det) or (not is_exact_array(h) and abs(det) < 1e-12):
        raise SingularMatrix("isomorphism candidate is singular")
    hinv = inverse(h)
    return IsomorphismReport(_maps_brackets(g1, g2, h), _maps_brackets(g1, g2, hinv))


def is_automorphism(g: LieAlgebra, h) -> bool:
    return _maps_brackets(g, g, np.asarray(h))


def inner_derivation(g: LieAlgebra, x) -> np.ndarray:
    return g.ad(x)


def is_nilpotent_matrix(N) -> bool:
    # a 7x7 matrix is nilpotent iff N^8 = 0; three squarings
    P = np.asarray(N)
    for _ in range(3):
        if array_is_zero(P, 1e-12):
            return True
        P = P @ P
    return array_is_zero(P, 1e-12)


def exp_nilpotent(N) -> np.ndarray:
    """exp(N) for nilpotent N as a finite sum (exact in exact mode)."""
    N = np.asarray(N)
    mode = mode_of(N)
    if not is_nilpotent_matrix(N):
        raise ValueError("exp_nilpotent needs a nilpotent matrix")
    out = identity(DIM, mode)
    term = out.copy()
    for k in range(1, DIM + 1):
        term = term @ N
        term = term / (Scalar(k) if mode == "exact" else float(k))
        if array_is_zero(term):
            break
        out = out + term
    return out


def random_automorphism(g: LieAlgebra, rng: np.random.Generator, steps: int = 2,
                        lo: int = -2, hi: int = 2) -> np.ndarray:
    """Exact automorphism: products of exponentials of nilpotent derivations.

    Inner derivations ad_x are always nilpotent on a nilpotent algebra; other
    basis derivations are used when they happen to be nilpotent.
    """
    mode = g.mode
    h = identity(DIM, mode)
    if "nil_der" not in g._cache:
        g._cache["nil_der"] = [B for B in derivation_space(g) if is_nilpotent_matrix(B)]
    nil_basis = g._cache["nil_der"]
    for _ in range(steps):
        x = rng.integers(lo, hi + 1, size=DIM)
        N = g.ad(np.array([Scalar(int(v)) for v in x], dtype=object) if mode == "exact" else x.astype(float))
        if nil_basis:
            B = nil_basis[rng.integers(len(nil_basis))]
            c = int(rng.integers(lo, hi + 1))
            for cand in (N + c * B, N):
                if is_nilpotent_matrix(cand):
                    N = cand
                    break
        h = h @ exp_nilpotent(N)
    return h


def transpose_derivation(D, metric=None) -> np.ndarray:
    """Adjoint of D for the inner product with Gram matrix ``metric``."""
    D = np.asarray(D)
    if metric is None:
        return D.T.copy()
    G = np.asarray(metric)
    return inverse(G) @ D.T @ G
