"""Recompute the reference soliton tables and diff them against stored values."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import catalog
from .g2torsion import q_operator
from .scalar import arrays_equal, format_scalar, parse_scalar
from .soliton import is_soliton_pair, solve_soliton

QUANTITIES = ("tau", "laplacian", "ric", "R", "pinching", "lam", "D", "Q")
COLUMNS = ("n2", "n3", "n4", "n5", "n6", "n7")


def _mstr(M) -> list:
    return [[format_scalar(x) for x in row] for row in M]


@dataclass
class TableDiff:
    checked: int = 0
    mismatches: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {"checked": self.checked, "mismatches": self.mismatches, "notes": self.notes,
                "ok": self.ok}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = []
        for m in self.mismatches:
            lines.append(f"MISMATCH {m['algebra']} {m['quantity']}: expected {m['expected']}, "
                         f"computed {m['computed']}")
        for n in self.notes:
            lines.append(f"note {n['algebra']}: {n['note']}")
        lines.append(f"{self.checked} checks, {len(self.mismatches)} mismatches")
        return "\n".join(lines) + "\n"


def compare_column(name: str, exp: catalog.Expected) -> tuple[list, list]:
    """Return (per-quantity results, notes) for one algebra."""
    params = {k: parse_scalar(v) for k, v in exp.params.items()}
    entry = catalog.get(name, params)
    g, psi = entry.algebra, entry.form
    cd = q_operator(g, psi)
    sol = solve_soliton(g, psi)
    td = cd.torsion
    out = []

    def add(q, ok, expected, computed):
        out.append({"algebra": name, "quantity": q, "ok": bool(ok),
                    "expected": expected, "computed": computed})

    e_tau, e_lap = exp.form("tau"), exp.form("laplacian")
    add("tau", td.tau == e_tau, str(e_tau), str(td.tau))
    add("laplacian", td.laplacian == e_lap, str(e_lap), str(td.laplacian))
    add("ric", arrays_equal(cd.ric, exp.ric_matrix()), list(exp.ric), _mstr(cd.ric))
    add("R", cd.R == parse_scalar(exp.R), exp.R, format_scalar(cd.R))
    add("pinching", cd.pinching == parse_scalar(exp.pinching), exp.pinching, format_scalar(cd.pinching))
    lam = parse_scalar(exp.lam)
    add("lam", sol is not None and sol.lam == lam, exp.lam,
        None if sol is None else format_scalar(sol.lam))
    D = exp.matrix("D")
    add("D", is_soliton_pair(g, psi, lam, D, td.laplacian), [list(r) for r in exp.D],
        None if sol is None else _mstr(sol.D))
    add("Q", arrays_equal(cd.q, exp.matrix("Q")), [list(r) for r in exp.Q], _mstr(cd.q))
    notes = [{"algebra": name, "note": e} for e in exp.errata]
    return out, notes


def diff_tables(expected: dict | None = None, only: list | None = None) -> TableDiff:
    expected = catalog.expected_tables() if expected is None else expected
    names = [n for n in COLUMNS if n in expected and (not only or n in only)]
    res = TableDiff()
    for name in names:
        rows, notes = compare_column(name, expected[name])
        res.checked += len(rows)
        res.mismatches += [r for r in rows if not r["ok"]]
        res.notes += notes
    return res
