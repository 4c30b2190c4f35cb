"""The twelve nilpotent Lie algebras with closed G2-structures, forms and reference data.

Families n2..n7 carry parameters a, b, c, d, e with ``[e_i, e_j] = -p e_k``
(so ``d e^k = p e^{ij}``). Reference values are exact scalar strings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .exterior import PHI0, KForm, gl_act, parse_form, signed_permutation_matrix
from .g2metric import NotPositive, positivity
from .liealg import LieAlgebra
from .scalar import Scalar, diag, exact_array, format_scalar, identity, parse_scalar, to_scalar


class UnknownAlgebra(KeyError):
    pass


class BadParams(ValueError):
    pass




def _q(p, q=1):
    return Scalar(p) / q


# families -----------------------------------------------------------------

def _br(*triples):
    """(i, j, k, p) meaning [e_i, e_j] = -p e_k."""
    return [(i, j, k, -p) for i, j, k, p in triples]


@dataclass(frozen=True)
class Family:
    name: str
    params: tuple
    brackets: Callable  # params dict -> list of (i, j, k, coeff)
    form: str | None
    closed_locus: str
    is_closed_point: Callable
    soliton_locus: str
    is_soliton_point: Callable
    witness: tuple | None  # signed permutation h with h . form = phi0
    default: Mapping
    closed_samples: tuple = ()
    open_samples: tuple = ()  # off the closedness locus
    soliton_samples: tuple = ()
    non_soliton_samples: tuple = ()  # closed, off the soliton locus
    algebraic: bool | None = None


def _pts(names, rows):
    return tuple({k: to_scalar(v) for k, v in zip(names, row)} for row in rows)



FAMILIES: dict[str, Family] = {}


def _add(f: Family):
    FAMILIES[f.name] = f


_add(Family(
    "n1", (), lambda p: [], "e127 + e347 + e567 + e135 - e146 - e236 - e245",
    "always", lambda p: True, "always", lambda p: True,
    (1, 2, 3, 4, 5, 6, 7), {}, algebraic=True,
))

_add(Family(
    "n2", ("a", "b"),
    lambda p: _br((1, 2, 5, p["a"]), (1, 3, 6, p["b"])),
    "e147 + e267 + e357 + e123 + e156 + e245 - e346",
    "a=b", lambda p: p["a"] == p["b"],
    "a=b", lambda p: p["a"] == p["b"],
    (1, 2, 7, 3, -6, -4, 5),
    {"a": 1, "b": 1},
    closed_samples=(("1", "1"), ("2", "2"), ("-1/3", "-1/3"), ("sqrt2", "sqrt2")),
    open_samples=(("1", "2"), ("2", "1"), ("1", "-1")),
    soliton_samples=(("1", "1"), ("3", "3"), ("sqrt3", "sqrt3")),
    algebraic=True,
))

_add(Family(
    "n3", ("a", "b", "c"),
    lambda p: _br((1, 2, 4, p["a"]), (1, 3, 5, p["b"]), (2, 3, 6, p["c"])),
    "e123 + e145 + e167 + e246 - e257 - e347 - e356",
    "a=b+c", lambda p: p["a"] == p["b"] + p["c"],
    "a=b+c", lambda p: p["a"] == p["b"] + p["c"],
    (1, 6, 4, 3, 5, 2, 7),
    {"a": 1, "b": "3/4", "c": "1/4"},
    closed_samples=(("2", "1", "1"), ("1", "3/4", "1/4"), ("3", "-1", "4"), ("1+sqrt2", "1", "sqrt2")),
    open_samples=(("1", "1", "1"), ("2", "1", "2"), ("1", "1/2", "1/3")),
    soliton_samples=(("2", "1", "1"), ("1", "2/3", "1/3"), ("sqrt3", "sqrt3-1", "1")),
    algebraic=True,
))

_add(Family(
    "n4", ("a", "b", "c", "d"),
    lambda p: _br((1, 2, 3, p["a"]), (1, 3, 6, p["b"]), (2, 4, 6, p["c"]), (1, 5, 7, p["d"])),
    "-e124 - e456 + e347 + e135 + e167 + e257 - e236",
    "a=c and b=d", lambda p: p["a"] == p["c"] and p["b"] == p["d"],
    "a^2=2b^2", lambda p: p["a"] * p["a"] == 2 * p["b"] * p["b"],
    (1, -6, 3, 4, 5, 2, 7),
    {"a": "sqrt2", "b": 1, "c": "sqrt2", "d": 1},
    closed_samples=(("sqrt2", "1", "sqrt2", "1"), ("1", "1", "1", "1"), ("2", "3", "2", "3")),
    open_samples=(("1", "1", "2", "1"), ("1", "2", "1", "1"), ("sqrt2", "1", "1", "sqrt2")),
    soliton_samples=(("sqrt2", "1", "sqrt2", "1"), ("2", "sqrt2", "2", "sqrt2"),
                     ("sqrt6", "sqrt3", "sqrt6", "sqrt3"), ("-sqrt2", "1", "-sqrt2", "1")),
    non_soliton_samples=(("1", "1", "1", "1"), ("2", "1", "2", "1"), ("3", "2", "3", "2")),
    algebraic=False,
))

_add(Family(
    "n5", ("a", "b", "c", "d"),
    lambda p: _br((1, 2, 3, p["a"]), (1, 3, 6, p["b"]), (1, 4, 7, p["c"]), (2, 5, 7, p["d"])),
    "e134 + e457 - e246 - e125 - e356 + e167 - e237",
    "a=d and b=c", lambda p: p["a"] == p["d"] and p["b"] == p["c"],
    "a^2=2b^2", lambda p: p["a"] * p["a"] == 2 * p["b"] * p["b"],
    (1, 2, 3, 5, -7, -4, 6),
    {"a": "sqrt2", "b": 1, "c": 1, "d": "sqrt2"},
    closed_samples=(("sqrt2", "1", "1", "sqrt2"), ("1", "1", "1", "1"), ("2", "-3", "-3", "2")),
    open_samples=(("1", "1", "1", "2"), ("1", "2", "1", "1"), ("sqrt2", "1", "sqrt2", "1")),
    soliton_samples=(("sqrt2", "1", "1", "sqrt2"), ("2", "sqrt2", "sqrt2", "2"),
                     ("sqrt6", "sqrt3", "sqrt3", "sqrt6"), ("-sqrt2", "1", "1", "-sqrt2")),
    non_soliton_samples=(("1", "1", "1", "1"), ("2", "1", "1", "2"), ("3", "2", "2", "3")),
    algebraic=False,
))

_add(Family(
    "n6", ("a", "b", "c", "d"),
    lambda p: _br((1, 2, 4, p["a"]), (1, 3, 5, p["b"]), (1, 4, 6, p["c"]), (1, 5, 7, p["d"])),
    "e123 + e347 + e356 + e145 - e246 + e167 + e257",
    "a=b and c=d", lambda p: p["a"] == p["b"] and p["c"] == p["d"],
    "a^2=2c^2", lambda p: p["a"] * p["a"] == 2 * p["c"] * p["c"],
    (1, 2, 7, 3, 5, 6, 4),
    {"a": "sqrt2", "b": "sqrt2", "c": 1, "d": 1},
    closed_samples=(("sqrt2", "sqrt2", "1", "1"), ("1", "1", "1", "1"), ("2", "2", "-1/2", "-1/2")),
    open_samples=(("1", "2", "1", "1"), ("1", "1", "1", "2"), ("sqrt2", "1", "sqrt2", "1")),
    soliton_samples=(("sqrt2", "sqrt2", "1", "1"), ("2", "2", "sqrt2", "sqrt2"),
                     ("sqrt6", "sqrt6", "sqrt3", "sqrt3"), ("sqrt2", "sqrt2", "-1", "-1")),
    non_soliton_samples=(("1", "1", "1", "1"), ("2", "2", "1", "1"), ("1", "1", "2", "2")),
    algebraic=False,
))

_add(Family(
    "n7", ("a", "b", "c", "d", "e"),
    lambda p: _br((1, 2, 4, p["a"]), (1, 7, 6, p["b"]), (2, 7, 5, p["c"]),
                  (5, 7, 3, p["d"]), (6, 7, 4, p["e"])),
    "e127 + e135 - e146 - e236 - e245 + e347 + e567",
    "a=-b-c and d=e", lambda p: p["a"] == -p["b"] - p["c"] and p["d"] == p["e"],
    "e^2=(b^2+c^2+bc)/2",
    lambda p: 2 * p["e"] * p["e"] == p["b"] * p["b"] + p["c"] * p["c"] + p["b"] * p["c"],
    (1, 2, 3, 4, 5, 6, 7),
    {"a": -4, "b": 2, "c": 2, "d": "sqrt6", "e": "sqrt6"},
    closed_samples=(("-4", "2", "2", "sqrt6", "sqrt6"), ("-2", "1", "1", "1", "1"),
                    ("1", "-3", "2", "sqrt2", "sqrt2")),
    open_samples=(("2", "1", "1", "1", "1"), ("-2", "1", "1", "1", "2"), ("-3", "1", "1", "sqrt6", "sqrt6")),
    soliton_samples=(("-4", "2", "2", "sqrt6", "sqrt6"), ("-2", "1", "1", "1/2*sqrt6", "1/2*sqrt6"),
                     ("1", "1", "-2", "1/2*sqrt6", "1/2*sqrt6"), ("-1", "2", "-1", "1/2*sqrt6", "1/2*sqrt6"),
                     ("-8", "4", "4", "2*sqrt6", "2*sqrt6")),
    non_soliton_samples=(("-2", "1", "1", "1", "1"), ("-3", "1", "2", "1", "1"), ("-4", "2", "2", "1", "1")),
    algebraic=False,
))


def _fixed(name, triples):
    _add(Family(name, (), lambda p, t=triples: [(i, j, k, c) for i, j, k, c in t], None,
                "no form provided", lambda p: False, "not encoded", lambda p: False, None, {}))


# fixed algebras, [e_i, e_j] = c e_k
_fixed("n8", [(1, 2, 3, -1), (1, 3, 4, -1), (2, 3, 5, -1), (1, 5, 6, -1), (2, 4, 6, -1),
              (1, 6, 7, -1), (3, 4, 7, -1)])
_fixed("n9", [(1, 2, 3, -1), (1, 3, 4, -1), (2, 3, 5, -1), (1, 5, 6, -1), (2, 4, 6, -1),
              (1, 6, 7, -1), (3, 4, 7, -1), (2, 5, 7, -1)])
_fixed("n10", [(1, 2, 3, -1), (1, 3, 5, -1), (2, 4, 5, -1), (1, 4, 6, -1), (4, 6, 7, -1),
               (3, 4, 7, -1), (1, 5, 7, -1), (2, 3, 7, -1)])
_fixed("n11", [(1, 2, 3, -1), (1, 3, 5, -1), (2, 4, 6, -1), (2, 3, 6, -1), (2, 5, 7, -1),
               (3, 4, 7, -1), (1, 5, 7, -1), (1, 6, 7, -1), (2, 6, 7, 3)])
_fixed("n12", [(1, 2, 4, -1), (2, 3, 5, -1), (1, 3, 6, 1), (2, 6, 7, -2), (3, 4, 7, 2),
               (1, 6, 7, 2), (2, 5, 7, -2)])

# n7 in its standard basis, the source of the change of basis below
STANDARD_N7 = [(1, 2, 4, -1), (1, 3, 5, -1), (1, 4, 6, -1), (2, 3, 6, -1), (1, 5, 7, -1)]

NAMES = tuple(FAMILIES)


# instantiation ------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: dict
    algebra: LieAlgebra
    form: KForm | None
    family: Family
    expected: "Expected | None"

    @property
    def witness_matrix(self):
        if self.family.witness is None:
            return None
        return signed_permutation_matrix(self.family.witness)


def parse_params(text: str | None) -> dict:
    """``"a=1,b=3/4"`` -> {'a': Scalar(1), 'b': Scalar(3/4)}."""
    out = {}
    if not text:
        return out
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise BadParams(f"expected k=v, got {part!r}")
        k, v = part.split("=", 1)
        try:
            out[k.strip()] = parse_scalar(v.strip())
        except ValueError as exc:
            raise BadParams(str(exc)) from exc
    return out


def _bind(fam: Family, params) -> dict:
    if params is None or len(params) == 0:
        params = fam.default
    params = {k: to_scalar(v) for k, v in dict(params).items()}
    if set(params) != set(fam.params):
        raise BadParams(f"{fam.name} takes parameters {fam.params}, got {tuple(sorted(params))}")
    for k, v in params.items():
        if not v:
            raise BadParams(f"parameter {k} must be nonzero")
    return {k: params[k] for k in fam.params}


def get(name: str, params: Mapping | None = None, check_positive: bool = True) -> CatalogEntry:
    if name not in FAMILIES:
        raise UnknownAlgebra(name)
    fam = FAMILIES[name]
    p = _bind(fam, params)
    g = LieAlgebra(fam.brackets(p), name=name, params=p)
    form = parse_form(fam.form, 3) if fam.form else None
    if form is not None and check_positive and not positivity(form).positive:
        raise NotPositive(f"{name} form is not positive")
    exp = expected_tables().get(name) if _is_default(fam, p) else None
    if name == "n3" and exp is None and p["a"] == 1 and p["b"] == 1 - p["c"]:
        exp = n3_expected(p["c"])
    return CatalogEntry(name, p, g, form, fam, exp)


def _is_default(fam: Family, p) -> bool:
    return all(p[k] == to_scalar(v) for k, v in fam.default.items())


def sample_points(name: str, kind: str) -> tuple:
    fam = FAMILIES[name]
    rows = getattr(fam, f"{kind}_samples")
    return _pts(fam.params, rows)


def list_entries() -> list[dict]:
    out = []
    for name, fam in FAMILIES.items():
        out.append({
            "name": name,
            "params": list(fam.params),
            "form": fam.form or "none provided",
            "closed_locus": fam.closed_locus,
            "soliton_locus": fam.soliton_locus,
            "default": {k: str(to_scalar(v)) for k, v in fam.default.items()},
        })
    return out


# reference data --------------------------------------------------------------

@dataclass(frozen=True)
class Expected:
    """Reference values, exact strings; ``D`` verbatim, ``Q`` after errata."""

    params: dict
    tau: str
    laplacian: str
    ric: tuple  # diagonal
    R: str
    pinching: str
    lam: str
    D: tuple  # 7 rows of 7 strings
    Q: tuple
    Q_verbatim: tuple
    errata: tuple = field(default_factory=tuple)

    def matrix(self, which: str) -> np.ndarray:
        return exact_array([[parse_scalar(x) for x in row] for row in getattr(self, which)])

    def ric_matrix(self) -> np.ndarray:
        M = exact_array(np.zeros((7, 7), dtype=int))
        for i, x in enumerate(self.ric):
            M[i, i] = parse_scalar(x)
        return M

    def form(self, which: str) -> KForm:
        return parse_form(getattr(self, which))

    def replace(self, **kw) -> "Expected":
        d = {k: getattr(self, k) for k in self.__dataclass_fields__}
        d.update(kw)
        return Expected(**d)


def _diag(vals):
    vals = [str(v) for v in vals]
    return tuple(tuple(vals[i] if i == j else "0" for j in range(7)) for i in range(7))


def _mat(rows):
    return tuple(tuple(str(x) for x in row) for row in rows)


def _scaled_diag(k: Scalar, vals):
    return _diag([format_scalar(k * v) for v in vals])


_DQ = (-2, -2, -2, 1, 1, 1, 1)
_DD = (1, 1, 1, 2, 2, 2, 2)


def n3_expected(c) -> Expected:
    """Reference values on the slice a=1, b=1-c as functions of c."""
    c = to_scalar(c)
    f = 1 - c + c * c
    fs = format_scalar
    half = _q(1, 2)
    ric = [half * (-2 + 2 * c - c * c), half * (-1 - c * c), half * (-1 + 2 * c - 2 * c * c),
           half, half * (c - 1) * (c - 1), half * c * c, Scalar(0)]
    Q = _scaled_diag(f / 3, _DQ)
    return Expected(
        params={"a": "1", "b": fs(1 - c), "c": fs(c)},
        tau=f"-({fs(c)})*e16 + ({fs(1 - c)})*e25 - e34",
        laplacian=f"({fs(2 * f)})*e123",
        ric=tuple(fs(x) for x in ric),
        R=fs(-1 + c - c * c),
        pinching="1/2",
        lam=fs(5 * f),
        D=_scaled_diag(-f, _DD),
        Q=Q,
        Q_verbatim=Q,
    )


_h = "1/2*sqrt2"
_mh = "-1/2*sqrt2"
_h6 = "1/2*sqrt6"
_mh6 = "-1/2*sqrt6"

_Q6_VERBATIM = _mat([
    [-2, 0, 0, 0, _mh, 0, 0],
    [0, -1, 0, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, _mh],
    [0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
    [0, _mh, 0, 0, 0, 1, 0],
    [0, 0, _mh, 0, 0, 0, 1],
])
_Q6 = _mat([
    [-2, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, 0, _mh, 0],
    [0, 0, -1, 0, 0, 0, _mh],
    [0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
    [0, _mh, 0, 0, 0, 1, 0],
    [0, 0, _mh, 0, 0, 0, 1],
])
_Q7_VERBATIM = _mat([
    [-4, 0, 0, 0, -1, 0, 0],
    [0, -4, 0, 0, 0, 1, 0],
    [0, 0, 9, 0, 0, _mh6, 0],
    [0, 0, 0, 17, _h6, 0, -2],
    [1, 0, 0, _mh6, 5, 0, 0],
    [0, -1, _h6, 0, 0, 5, 0],
    [0, 0, 0, 2, 0, 0, -4],
])
_Q7 = _mat([
    [-6, 0, 0, "sqrt6", 0, 0, 0],
    [0, -6, "sqrt6", 0, 0, 0, 0],
    [0, "sqrt6", 6, 0, 0, 0, 0],
    ["sqrt6", 0, 0, 6, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, "2*sqrt6"],
    [0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, "2*sqrt6", 0, -12],
])

ERRATA = {
    "n5.D": "row 5 of the reference D has an empty last cell; read as 0",
    "n6.Q": "reference Q has -1/sqrt2 at (1,5) and none at (2,6), so it is not symmetric; "
            "the entry belongs at (2,6), matching its mirror at (6,2)",
    "n7.Q": "reference Q equals Ric - 1/12 tr(tau^2) I + 1/2 T, T[i,j] = tau(e_i,e_j), and is not "
            "symmetric; the symmetric operator uses 1/2 tau^2 and equals -(lam/3) I - (D+D^t)/2",
    "n7.brackets": "reference bracket [e5,e7] = -sqrt6 e5 is read as -sqrt6 e3 (d in the family)",
}


def q_with_unsquared_torsion(ric, tau_matrix, trace_tau2):
    """Ric - 1/12 tr(tau^2) I + 1/2 T: what the reference n7 Q evaluates."""
    return ric - trace_tau2 / 12 * identity(7) + _q(1, 2) * tau_matrix


_TABLES: dict[str, Expected] | None = None


def expected_tables() -> dict[str, Expected]:
    global _TABLES
    if _TABLES is None:
        _TABLES = _build_tables()
    return dict(_TABLES)


def _build_tables() -> dict[str, Expected]:
    t = {}
    q2 = _scaled_diag(_q(1, 3), _DQ)
    t["n2"] = Expected(
        params={"a": "1", "b": "1"},
        tau="-e35 + e26",
        laplacian="2*e123",
        ric=("-1", "-1/2", "-1/2", "0", "1/2", "1/2", "0"),
        R="-1", pinching="1/2", lam="5",
        D=_diag([-1, -1, -1, -2, -2, -2, -2]),
        Q=q2, Q_verbatim=q2,
    )
    t["n3"] = n3_expected(_q(1, 4))
    q4 = _mat([
        [-2, 0, 0, 0, _h, 0, 0],
        [0, -1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, -1, 0, 0, _h],
        [_h, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, _h, 0, 0, 1],
    ])
    t["n4"] = Expected(
        params={"a": "sqrt2", "b": "1", "c": "sqrt2", "d": "1"},
        tau="-sqrt2*e34 + sqrt2*e16 - e56 + e37",
        laplacian="-4*e124 + 2*e135 + sqrt2*e245 + sqrt2*e127",
        ric=("-2", "-2", "1/2", "-1", "-1/2", "3/2", "1/2"),
        R="-3", pinching="3/4", lam="9",
        D=_mat([
            [-1, 0, 0, 0, 0, 0, 0],
            [0, -2, 0, 0, 0, 0, 0],
            [0, 0, -3, 0, 0, 0, 0],
            [0, 0, 0, -2, 0, 0, 0],
            ["-sqrt2", 0, 0, 0, -3, 0, 0],
            [0, 0, 0, 0, 0, -4, 0],
            [0, 0, 0, "-sqrt2", 0, 0, -4],
        ]),
        Q=q4, Q_verbatim=q4,
    )
    q5 = _mat([
        [-2, 0, _mh, 0, 0, 0, 0],
        [0, -1, 0, 0, 0, 0, 0],
        [_mh, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, -1, 0, _h],
        [0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, _h, 0, 1],
    ])
    t["n5"] = Expected(
        params={"a": "sqrt2", "b": "1", "c": "1", "d": "sqrt2"},
        tau="-e46 + e37 - sqrt2*e35 + sqrt2*e17",
        laplacian="2*e134 + sqrt2*e127 + sqrt2*e235 - 4*e125",
        ric=("-2", "-2", "1/2", "-1/2", "-1", "1/2", "3/2"),
        R="-3", pinching="3/4", lam="9",
        D=_mat([
            [-1, 0, 0, 0, 0, 0, 0],
            [0, -2, 0, 0, 0, 0, 0],
            ["sqrt2", 0, -3, 0, 0, 0, 0],
            [0, 0, 0, -3, 0, 0, 0],
            [0, 0, 0, 0, -2, 0, 0],
            [0, 0, 0, 0, 0, -4, 0],
            [0, 0, 0, 0, "-sqrt2", 0, -4],
        ]),
        Q=q5, Q_verbatim=q5,
        errata=(ERRATA["n5.D"],),
    )
    t["n6"] = Expected(
        params={"a": "sqrt2", "b": "sqrt2", "c": "1", "d": "1"},
        tau="-sqrt2*e34 + sqrt2*e25 - e56 + e47",
        laplacian="4*e123 - sqrt2*e136 + sqrt2*e127 + 2*e145",
        ric=("-3", "-1", "-1", "1/2", "1/2", "1/2", "1/2"),
        R="-3", pinching="3/4", lam="9",
        D=_mat([
            [-1, 0, 0, 0, 0, 0, 0],
            [0, -2, 0, 0, 0, 0, 0],
            [0, 0, -2, 0, 0, 0, 0],
            [0, 0, 0, -3, 0, 0, 0],
            [0, 0, 0, 0, -3, 0, 0],
            [0, "sqrt2", 0, 0, 0, -4, 0],
            [0, 0, "sqrt2", 0, 0, 0, -4],
        ]),
        Q=_Q6, Q_verbatim=_Q6_VERBATIM,
        errata=(ERRATA["n6.Q"],),
    )
    t["n7"] = Expected(
        params={"a": "-4", "b": "2", "c": "2", "d": "sqrt6", "e": "sqrt6"},
        tau="-2*e15 + 2*e26 - sqrt6*e36 + sqrt6*e45 - 4*e47",
        laplacian="24*e127 - 4*sqrt6*e125 - 2*sqrt6*e137 + 2*sqrt6*e247 + 12*e567",
        ric=("-10", "-10", "3", "11", "-1", "-1", "-10"),
        R="-18", pinching="3/4", lam="54",
        D=_mat([
            [-12, 0, 0, 0, 0, 0, 0],
            [0, -12, 0, 0, 0, 0, 0],
            [0, "-2*sqrt6", -24, 0, 0, 0, 0],
            ["-2*sqrt6", 0, 0, -24, 0, 0, 0],
            [0, 0, 0, 0, -18, 0, "-4*sqrt6"],
            [0, 0, 0, 0, 0, -18, 0],
            [0, 0, 0, 0, 0, 0, -6],
        ]),
        Q=_Q7, Q_verbatim=_Q7_VERBATIM,
        errata=(ERRATA["n7.Q"], ERRATA["n7.brackets"]),
    )
    return t


# change of basis ------------------------------------------------------------

def n7_change_of_basis(p: Mapping) -> np.ndarray:
    """Matrix h with h[x, y] = [hx, hy] from the standard n7 into n7(a, ..., e)."""
    a, b, c, d, e = (to_scalar(p[k]) for k in "abcde")
    z = Scalar(0)
    one = Scalar(1)
    k = b * c * d * e / a
    rows = [
        [z, one, z, z, z, z, z],
        [z, z, b * e / a, z, z, z, z],
        [z, k, z, z, z, z, k],
        [z, z, -b * e, z, z, b * e, z],
        [z, z, z, z, -b * c * e / a, z, z],
        [z, z, z, -b, z, z, z],
        [one, z, z, z, z, z, z],
    ]
    return exact_array(rows)


def diagonal_rescaling(name: str, p: Mapping) -> np.ndarray:
    """Diagonal isomorphism onto the family member from all parameters 1."""
    p = {k: to_scalar(v) for k, v in p.items()}
    if name == "n3":
        return diag([1, 1, 1, p["a"], p["b"], p["c"], 1])
    if name == "n4":
        a, b, c, d = p["a"], p["b"], p["c"], p["d"]
        return diag([1, 1, a, a * b / c, 1, a * b, d])
    raise UnknownAlgebra(name)


def standard_n7() -> LieAlgebra:
    return LieAlgebra(STANDARD_N7, name="n7 (standard basis)")


def witness_check(name: str) -> bool:
    e = get(name)
    return gl_act(e.witness_matrix, e.form) == PHI0


def expected_to_dict(tables: Mapping[str, Expected] | None = None) -> dict:
    tables = expected_tables() if tables is None else tables
    out = {}
    for name, e in tables.items():
        d = {k: getattr(e, k) for k in e.__dataclass_fields__}
        for k in ("ric", "D", "Q", "Q_verbatim", "errata"):
            d[k] = [list(r) if isinstance(r, tuple) else r for r in d[k]]
        out[name] = d
    return out


def expected_from_dict(data: Mapping) -> dict[str, Expected]:
    out = {}
    for name, d in data.items():
        d = dict(d)
        for k in ("D", "Q", "Q_verbatim"):
            d[k] = tuple(tuple(str(x) for x in row) for row in d[k])
        d["ric"] = tuple(str(x) for x in d["ric"])
        d["errata"] = tuple(d.get("errata", ()))
        d["params"] = {k: str(v) for k, v in d["params"].items()}
        out[name] = Expected(**d)
    return out
