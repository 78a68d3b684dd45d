#!/usr/bin/env python3
"""Sweep two-colour compositions of a deck and tabulate leading coefficients.

For each split (b, cards - b) the exact first-order deviation coefficient is
computed for the back-and-forth deal and for the conjectured best sequence,
together with their ratio.  Output is CSV on stdout or --out.
"""
from __future__ import annotations

import argparse
import csv
import sys

from shuffledeal import DeckComposition, leading_coefficient_ordered, parse_method
from shuffledeal.dealing import back_and_forth_method


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cards", type=int, default=52,
                        help="deck size, divisible by 4 (default 52)")
    parser.add_argument("--sequence", default=None,
                        help="second method to compare against back-and-forth "
                             "(default: conjectured for 52 cards, cyclic otherwise)")
    parser.add_argument("--out", default=None, help="CSV path (default stdout)")
    args = parser.parse_args(argv)

    if args.cards % 4 != 0 or args.cards < 8:
        parser.error("--cards must be a multiple of 4, at least 8")
    s = args.cards // 4
    baseline = back_and_forth_method(4, s)
    sequence = args.sequence
    if sequence is None:
        sequence = "conjectured" if args.cards == 52 else "cyclic"
    other = parse_method(sequence, 4, s)

    rows = []
    for b in range(1, args.cards):
        comp = DeckComposition((b, args.cards - b), 4, s)
        c_base = leading_coefficient_ordered(comp, baseline).coefficient
        c_other = leading_coefficient_ordered(comp, other).coefficient
        ratio = float(c_other / c_base) if c_base else float("nan")
        rows.append((b, c_base, float(c_base), c_other, float(c_other), ratio))

    stream = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(stream)
        writer.writerow(("b", "backforth", "backforth_float",
                         "other", "other_float", "ratio"))
        writer.writerows(rows)
    finally:
        if args.out:
            stream.close()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
