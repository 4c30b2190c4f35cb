"""JSON files holding an algebra and an optional 3-form.

{
  "dim": 7, "name": "n3", "params": {"a": "1", ...},
  "brackets": [{"i": 1, "j": 2, "k": 4, "coeff": "-1"}, ...],
  "form": [{"indices": [1, 2, 3], "coeff": "1"}, ...]      # or null
}

Coefficients are exact scalar strings (integers are accepted too). Only
pairs i < j are listed; the bracket is extended antisymmetrically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .exterior import DIM, INDEX, KForm
from .liealg import JacobiError, LieAlgebra
from .scalar import Scalar, format_scalar, parse_scalar, zeros


class FormatError(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraFile:
    algebra: LieAlgebra
    form: KForm | None
    name: str
    params: dict


def _coeff(x) -> Scalar:
    if isinstance(x, bool) or isinstance(x, float):
        raise FormatError(f"coefficient {x!r} must be an exact string or integer")
    if isinstance(x, int):
        return Scalar(x)
    if isinstance(x, str):
        try:
            return parse_scalar(x)
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    raise FormatError(f"unreadable coefficient {x!r}")


def to_dict(g: LieAlgebra, form: KForm | None = None, name: str | None = None,
            params: dict | None = None) -> dict:
    if g.mode != "exact" or (form is not None and form.mode != "exact"):
        raise FormatError("only exact data can be written")
    params = g.params if params is None else params
    return {
        "dim": DIM,
        "name": g.name if name is None else name,
        "params": {k: format_scalar(Scalar.coerce(v)) for k, v in params.items()},
        "brackets": [{"i": i, "j": j, "k": k, "coeff": format_scalar(c)} for i, j, k, c in g.brackets()],
        "form": None if form is None else [
            {"indices": list(idx), "coeff": format_scalar(c)} for idx, c in form.terms()
        ],
    }


def dumps(g: LieAlgebra, form: KForm | None = None, **kw) -> str:
    return json.dumps(to_dict(g, form, **kw), indent=2) + "\n"


def from_dict(data: dict) -> AlgebraFile:
    if not isinstance(data, dict):
        raise FormatError("top level must be an object")
    if data.get("dim", DIM) != DIM:
        raise FormatError(f"only dim {DIM} is supported")
    triples = []
    for b in data.get("brackets", []):
        try:
            i, j, k = int(b["i"]), int(b["j"]), int(b["k"])
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad bracket entry {b!r}") from exc
        if not (1 <= i <= DIM and 1 <= j <= DIM and 1 <= k <= DIM) or i == j:
            raise FormatError(f"bad bracket indices {b!r}")
        triples.append((i, j, k, _coeff(b["coeff"])))
    try:
        g = LieAlgebra(triples, name=str(data.get("name", "")),
                       params={k: _coeff(v) for k, v in (data.get("params") or {}).items()})
    except JacobiError as exc:
        raise FormatError(str(exc)) from exc
    form = None
    if data.get("form") is not None:
        coeffs = zeros(35)
        for t in data["form"]:
            try:
                idx = tuple(int(x) for x in t["indices"])
            except (KeyError, TypeError, ValueError) as exc:
                raise FormatError(f"bad form entry {t!r}") from exc
            if len(idx) != 3 or len(set(idx)) != 3 or not all(1 <= x <= DIM for x in idx):
                raise FormatError(f"bad form indices {idx}")
            order = sorted(range(3), key=lambda m: idx[m])
            # sign of the sorting permutation
            inv = sum(1 for a in range(3) for b in range(a + 1, 3) if idx[a] > idx[b])
            c = _coeff(t["coeff"])
            key = INDEX[3][tuple(idx[m] - 1 for m in order)]
            coeffs[key] = coeffs[key] + (c if inv % 2 == 0 else -c)
        form = KForm(3, coeffs)
    return AlgebraFile(g, form, g.name, g.params)


def loads(text: str) -> AlgebraFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return from_dict(data)


def load(path) -> AlgebraFile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(str(exc)) from exc
    return loads(text)


def save(path, g: LieAlgebra, form: KForm | None = None, **kw) -> None:
    Path(path).write_text(dumps(g, form, **kw))
