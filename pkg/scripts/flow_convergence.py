"""Global RK4 error against the exact self-similar solution as dt halves."""

import argparse
from dataclasses import dataclass

import numpy as np

from g2solitons import catalog
from g2solitons.flow import integrate, self_similar
from g2solitons.soliton import solve_soliton


@dataclass
class Config:
    names: tuple = ("n3", "n6")
    t_max: float = 1.0
    dts: tuple = (0.1, 0.05, 0.025, 0.0125, 0.00625)


def global_error(name: str, dt: float, t_max: float) -> float:
    e = catalog.get(name)
    sol = solve_soliton(e.algebra, e.form)
    tr = integrate(e.algebra, e.form, t_max, dt, sample_every=1, diagnostics=False)
    return max(np.linalg.norm(y - self_similar(e.form, float(sol.lam), sol.D, t).coeffs)
               for t, y in zip(tr.times, tr.coeffs))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--names", nargs="+", default=list(Config.names))
    ap.add_argument("--t-max", type=float, default=Config.t_max)
    args = ap.parse_args()
    cfg = Config(tuple(args.names), args.t_max)
    print("name       dt        error     ratio")
    for name in cfg.names:
        prev = None
        for dt in cfg.dts:
            err = global_error(name, dt, cfg.t_max)
            ratio = "" if prev is None else f"{prev / err:8.2f}"
            print(f"{name:4s} {dt:10.5f} {err:12.3e} {ratio}")
            prev = err


if __name__ == "__main__":
    main()
