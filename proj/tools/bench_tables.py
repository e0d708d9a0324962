#!/usr/bin/env python3
"""Pivot `tutte bench` CSV into a markdown table.

Rows are graph sizes, columns are heuristic/order/iso combinations, cells
hold one metric (calls by default).

    tutte bench petersen --from 10 --to 20 --param 3 -o p3.csv
    tools/bench_tables.py p3.csv --metric time_s
"""

import argparse
import csv
import sys

METRICS = ("calls", "ident", "isom", "avgdeg", "time_s", "peakmem_b")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("csv", nargs="?", default="-", help="bench output, '-' for stdin")
    ap.add_argument("--metric", choices=METRICS, default="calls")
    ap.add_argument("--columns", default="heuristic,order,iso_mode",
                    help="fields that make up a column key")
    args = ap.parse_args()

    fh = sys.stdin if args.csv == "-" else open(args.csv, newline="")
    with fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        print("no rows", file=sys.stderr)
        return 1

    col_fields = args.columns.split(",")
    cols, sizes, cells = [], [], {}
    for r in rows:
        col = "/".join(r[f] for f in col_fields)
        size = (int(r["n"]), int(r["m"]))
        if col not in cols:
            cols.append(col)
        if size not in sizes:
            sizes.append(size)
        value = r[args.metric] or "-"
        if r.get("status", "ok") != "ok":
            value += "*"
        cells[size, col] = value

    print(f"| n | m | {' | '.join(cols)} |")
    print("|---|---|" + "---|" * len(cols))
    for n, m in sorted(sizes):
        line = " | ".join(cells.get(((n, m), c), "") for c in cols)
        print(f"| {n} | {m} | {line} |")
    if any(r.get("status", "ok") != "ok" for r in rows):
        print("\n`*` run stopped at the memory budget; partial counts.")
    return 0


if __name__ == "__main__":
    sys.exit(main())
