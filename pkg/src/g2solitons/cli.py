"""Command line: catalog list, check, soliton, flow, report tables."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import catalog, formats
from .exterior import KForm
from .flow import ClosednessDrift, NotASolitonTrajectory, PositivityLost, fit_scaling, integrate
from .g2metric import NotPositive, metric_volume, positivity
from .g2torsion import NotClosed, q_operator
from .liealg import LieAlgebra, ce_d
from .report import diff_tables
from .scalar import Scalar, format_scalar
from .soliton import solve_soliton

EXIT_OK = 0
EXIT_NONE = 1  # no soliton / table mismatch
EXIT_PARSE = 2
EXIT_NOT_POSITIVE = 3
EXIT_POSITIVITY_LOST = 4
EXIT_DRIFT = 5


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    builtin: str | None = None
    params: str | None = None
    file: str | None = None
    mode: str = "exact"
    fmt: str = "text"
    out: str | None = None
    t_max: float = 1.0
    dt: float = 1e-3
    only: list | None = None
    expected: str | None = None

    def __post_init__(self):
        if self.builtin and self.file:
            raise UsageError("--builtin and --file are mutually exclusive")
        if self.mode not in ("exact", "float"):
            raise UsageError(f"unknown mode {self.mode!r}")


# sources -------------------------------------------------------------------

def load_source(cfg: RunConfig) -> tuple[LieAlgebra, KForm | None, str]:
    if cfg.file:
        f = formats.load(cfg.file)
        return f.algebra, f.form, f.name or Path(cfg.file).stem
    if not cfg.builtin:
        raise UsageError("give --builtin NAME or --file PATH")
    params = catalog.parse_params(cfg.params)
    e = catalog.get(cfg.builtin, params or None, check_positive=False)
    return e.algebra, e.form, cfg.builtin


def _fmt_value(x, mode: str) -> str:
    if x is None:
        return "none"
    if mode == "exact":
        return format_scalar(Scalar.coerce(x))
    return f"{float(x):.17g}"


def _fmt_matrix(M, mode):
    return [[_fmt_value(x, mode) for x in row] for row in M]


def _fmt_form(a: KForm) -> str:
    return str(a)


def _resolve_mode(g, psi, mode):
    """Pick one mode for the whole report: float if asked or if the metric needs roots."""
    if mode == "exact" and psi is not None and positivity(psi).positive:
        if metric_volume(psi).mode == "float":
            mode = "float"
    if mode == "float":
        g, psi = g.as_mode("float"), None if psi is None else psi.as_mode("float")
    return g, psi, mode


# commands ------------------------------------------------------------------

def cmd_catalog_list(cfg: RunConfig) -> tuple[int, str]:
    rows = catalog.list_entries()
    if cfg.fmt == "json":
        return EXIT_OK, json.dumps(rows, indent=2) + "\n"
    lines = [f"{r['name']:4s} params={','.join(r['params']) or '-'}  closed: {r['closed_locus']}  "
             f"soliton: {r['soliton_locus']}" for r in rows]
    return EXIT_OK, "\n".join(lines) + "\n"


def check_report(g, psi, name, mode) -> tuple[int, dict]:
    rep = {"algebra": name, "mode": mode}
    if psi is None:
        rep["positivity"] = "no form"
        return EXIT_NOT_POSITIVE, rep
    verdict = positivity(psi)
    rep["positivity"] = verdict.kind
    if not verdict.positive:
        return EXIT_NOT_POSITIVE, rep
    g, psi, mode = _resolve_mode(g, psi, mode)
    rep["mode"] = mode
    dphi = ce_d(g, psi)
    rep["dphi"] = _fmt_form(dphi)
    rep["closed"] = bool(dphi.is_zero() if mode == "exact" else np.linalg.norm(dphi.coeffs) < 1e-9)
    if rep["closed"]:
        cd = q_operator(g, psi)
        rep["tau"] = _fmt_form(cd.torsion.tau)
        rep["laplacian"] = _fmt_form(cd.torsion.laplacian)
        rep["ric"] = _fmt_matrix(cd.ric, mode)
        rep["R"] = _fmt_value(cd.R, mode)
        rep["pinching"] = _fmt_value(cd.pinching, mode)
        rep["Q"] = _fmt_matrix(cd.q, mode)
    return EXIT_OK, rep


def _text_report(rep: dict) -> str:
    lines = []
    for k, v in rep.items():
        if isinstance(v, list) and v and isinstance(v[0], list):
            lines.append(f"{k}:")
            w = max(len(x) for row in v for x in row)
            lines += ["  " + " ".join(x.rjust(w) for x in row) for row in v]
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines) + "\n"


def cmd_check(cfg: RunConfig) -> tuple[int, str]:
    g, psi, name = load_source(cfg)
    code, rep = check_report(g, psi, name, cfg.mode)
    return code, json.dumps(rep, indent=2) + "\n" if cfg.fmt == "json" else _text_report(rep)


def cmd_soliton(cfg: RunConfig) -> tuple[int, str]:
    g, psi, name = load_source(cfg)
    if psi is None or not positivity(psi).positive:
        return EXIT_NOT_POSITIVE, json.dumps({"algebra": name, "error": "form is not positive"}) + "\n"
    g, psi, mode = _resolve_mode(g, psi, cfg.mode)
    try:
        sol = solve_soliton(g, psi)
    except NotClosed:
        return EXIT_NONE, json.dumps({"algebra": name, "soliton": None, "error": "form is not closed"}) + "\n"
    if sol is None:
        return EXIT_NONE, json.dumps({"algebra": name, "soliton": None, "mode": mode}) + "\n"
    d = sol.to_dict()
    if cfg.fmt == "text":
        return EXIT_OK, _text_report({"algebra": name, **d})
    return EXIT_OK, json.dumps(d, indent=2) + "\n"


def cmd_flow(cfg: RunConfig) -> tuple[int, str]:
    g, psi, name = load_source(cfg)
    if psi is None or not positivity(psi).positive:
        return EXIT_NOT_POSITIVE, "error: form is not positive\n"
    try:
        traj = integrate(g, psi, cfg.t_max, cfg.dt)
    except PositivityLost as exc:
        return EXIT_POSITIVITY_LOST, f"error: {exc}\n"
    except ClosednessDrift as exc:
        return EXIT_DRIFT, f"error: {exc}\n"
    if cfg.fmt == "json":
        try:
            fit = fit_scaling(traj)
            summary = {"c_est": fit.c_est, "fit_error": fit.fit_error, "samples": fit.samples,
                       "steady": fit.steady}
        except NotASolitonTrajectory as exc:
            summary = {"c_est": None, "fit_error": None, "samples": len(traj.times), "note": str(exc)}
        summary.update({"algebra": name, "dt": cfg.dt, "t_max": cfg.t_max,
                        "max_drift": float(np.max(traj.drift)),
                        "max_residual": float(np.max(traj.residual))})
        return EXIT_OK, json.dumps(summary, indent=2) + "\n"
    return EXIT_OK, traj.to_csv()


def cmd_report_tables(cfg: RunConfig) -> tuple[int, str]:
    expected = None
    if cfg.expected:
        try:
            expected = catalog.expected_from_dict(json.loads(Path(cfg.expected).read_text()))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise formats.FormatError(f"cannot read expected tables: {exc}") from exc
    if cfg.only:
        bad = [n for n in cfg.only if n not in catalog.expected_tables()]
        if bad:
            raise UsageError(f"no reference column for {bad}")
    res = diff_tables(expected, cfg.only)
    text = res.to_json() + "\n" if cfg.fmt == "json" else res.to_text()
    return (EXIT_OK if res.ok else EXIT_NONE), text


# argument parsing ------------------------------------------------------------

def _source_args(p):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--builtin", help="catalog name, n1..n12")
    src.add_argument("--file", help="JSON algebra/form file")
    p.add_argument("--params", help="k=v,... e.g. a=1,b=3/4,c=1/4 or a=sqrt2")


def _common(p, formats_=("text", "json")):
    p.add_argument("--mode", choices=("exact", "float"), default=None)
    p.add_argument("--format", dest="fmt", choices=formats_, default=formats_[0])
    p.add_argument("--out", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="g2solitons", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", help="catalog operations")
    cat_sub = cat.add_subparsers(dest="action", required=True)
    lst = cat_sub.add_parser("list")
    _common(lst)
    exp = cat_sub.add_parser("export", help="write a builtin as a JSON file")
    _source_args(exp)
    exp.add_argument("--out")

    for name in ("check", "soliton"):
        p = sub.add_parser(name)
        _source_args(p)
        _common(p, ("text", "json") if name == "check" else ("json", "text"))

    fl = sub.add_parser("flow")
    _source_args(fl)
    _common(fl, ("csv", "json"))
    fl.add_argument("--t-max", type=float, default=1.0)
    fl.add_argument("--dt", type=float, default=1e-3)

    rep = sub.add_parser("report")
    rep_sub = rep.add_subparsers(dest="action", required=True)
    tab = rep_sub.add_parser("tables")
    _common(tab)
    tab.add_argument("--only", action="append", help="restrict to one algebra (repeatable)")
    tab.add_argument("--expected", help="JSON file overriding the stored reference values")
    return ap


def _config(ns) -> RunConfig:
    mode = ns.mode if getattr(ns, "mode", None) else os.environ.get("G2_MODE", "exact")
    cmd = ns.command if ns.command not in ("catalog", "report") else f"{ns.command} {ns.action}"
    return RunConfig(
        command=cmd,
        builtin=getattr(ns, "builtin", None),
        params=getattr(ns, "params", None),
        file=getattr(ns, "file", None),
        mode=mode,
        fmt=getattr(ns, "fmt", "text"),
        out=getattr(ns, "out", None),
        t_max=getattr(ns, "t_max", 1.0),
        dt=getattr(ns, "dt", 1e-3),
        only=getattr(ns, "only", None),
        expected=getattr(ns, "expected", None),
    )


def cmd_catalog_export(cfg: RunConfig) -> tuple[int, str]:
    g, psi, name = load_source(cfg)
    return EXIT_OK, formats.dumps(g, psi, name=name)


COMMANDS = {
    "catalog list": cmd_catalog_list,
    "catalog export": cmd_catalog_export,
    "check": cmd_check,
    "soliton": cmd_soliton,
    "flow": cmd_flow,
    "report tables": cmd_report_tables,
}


def run(argv: list[str] | None = None) -> tuple[int, str, str | None]:
    """Execute a command; returns (exit code, output text, output path)."""
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return (EXIT_PARSE if exc.code else EXIT_OK), "", None
    out = getattr(ns, "out", None)
    try:
        cfg = _config(ns)
        code, text = COMMANDS[cfg.command](cfg)
    except (UsageError, formats.FormatError, catalog.UnknownAlgebra, catalog.BadParams) as exc:
        return EXIT_PARSE, f"error: {exc}\n", None
    except NotPositive as exc:
        return EXIT_NOT_POSITIVE, f"error: {exc}\n", None
    return code, text, out


def main(argv: list[str] | None = None) -> int:
    code, text, out = run(argv)
    if text.startswith("error:"):
        sys.stderr.write(text)
    elif out and text:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
