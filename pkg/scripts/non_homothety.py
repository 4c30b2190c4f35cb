"""Ricci spectra along the n3 slice a=1, b=1-t, c=t for 0 < t < 1/2."""

import argparse
from fractions import Fraction

from g2solitons import catalog
from g2solitons.g2torsion import q_operator
from g2solitons.scalar import Scalar, format_scalar
from g2solitons.soliton import distinguishes, homothety_invariants


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=10, help="number of t values k/(2n+1)")
    args = ap.parse_args()
    ts = [Scalar(Fraction(k, 2 * args.n + 1)) for k in range(1, args.n + 1)]
    inv = []
    for t in ts:
        e = catalog.get("n3", {"a": 1, "b": 1 - t, "c": t})
        cd = q_operator(e.algebra, e.form)
        pos = sorted((cd.ric[i, i] for i in range(7) if cd.ric[i, i] > 0), key=float)
        inv.append(homothety_invariants(e.algebra, e.form))
        print(f"t={format_scalar(t):6s} positive Ricci {[format_scalar(x) for x in pos]}  "
              f"pinching {format_scalar(cd.pinching)}")
    same = [(i, j) for i in range(len(ts)) for j in range(i + 1, len(ts)) if not distinguishes(inv[i], inv[j])]
    print("pairs with equal normalized spectra:", same or "none")


if __name__ == "__main__":
    main()
