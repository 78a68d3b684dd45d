#!/usr/bin/env python3
"""Exact coefficient grid over three-colour compositions (b, r, rest).

Writes one CSV row per admissible (b, r) cell.  The full 52-card grid is
1275 exact computations and takes a while; --max-b/--max-r restrict the
sweep, and --cards shrinks the deck for quick looks.
"""
from __future__ import annotations

import argparse
import csv
import sys

from shuffledeal import grid_three_types, parse_method


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cards", type=int, default=52,
                        help="deck size, divisible by 4 (default 52)")
    parser.add_argument("--method", default="backforth",
                        help="dealing method name or sequence (default backforth)")
    parser.add_argument("--max-b", type=int, default=None)
    parser.add_argument("--max-r", type=int, default=None)
    parser.add_argument("--out", default=None, help="CSV path (default stdout)")
    args = parser.parse_args(argv)

    if args.cards % 4 != 0 or args.cards < 8:
        parser.error("--cards must be a multiple of 4, at least 8")
    method = parse_method(args.method, 4, args.cards // 4)

    max_b = args.max_b if args.max_b is not None else args.cards - 2
    max_r = args.max_r if args.max_r is not None else args.cards - 2
    cells = [
        (b, r)
        for b in range(1, max_b + 1)
        for r in range(1, min(max_r, args.cards - b - 1) + 1)
    ]
    rows = grid_three_types(args.cards, method, cells=cells)

    stream = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(stream)
        writer.writerow(("b", "r", "g", "coefficient", "coefficient_float"))
        for b, r, coeff in rows:
            writer.writerow((b, r, args.cards - b - r, coeff, float(coeff)))
    finally:
        if args.out:
            stream.close()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
