"""Recompute the reference soliton tables and print one line per quantity."""

import argparse

from g2solitons import catalog
from g2solitons.report import COLUMNS, QUANTITIES, compare_column


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--only", action="append", choices=COLUMNS)
    args = ap.parse_args()
    tables = catalog.expected_tables()
    bad = 0
    for name in args.only or COLUMNS:
        rows, notes = compare_column(name, tables[name])
        for r in rows:
            bad += not r["ok"]
            shown = r["computed"] if isinstance(r["computed"], str) else "(matrix)"
            print(f"{name:3s} {r['quantity']:9s} {'ok ' if r['ok'] else 'BAD'} {shown}")
        for n in notes:
            print(f"{name:3s} note: {n['note']}")
    print(f"{bad} mismatches over {len(QUANTITIES)} quantities per algebra")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
