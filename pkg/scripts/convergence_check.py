#!/usr/bin/env python3
"""Check that a * VD(a) approaches the leading coefficient as a grows.

For a small deck the exact variation distance of the dealt-hand distribution
after one a-shuffle is computed for a = 2, 4, 8, ...; each row reports the
scaled distance next to the exact first-order coefficient.
"""
from __future__ import annotations

import argparse
import csv
import sys

from shuffledeal import (
    Deck,
    DeckComposition,
    exact_hand_variation_distance,
    leading_coefficient_ordered,
    parse_method,
)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--comp", default="2,2", help="colour counts (default 2,2)")
    parser.add_argument("--players", type=int, default=2)
    parser.add_argument("--hand", type=int, default=2)
    parser.add_argument("--method", default="ordered")
    parser.add_argument("--doublings", type=int, default=10,
                        help="largest a is 2 to this power (default 10)")
    parser.add_argument("--out", default=None, help="CSV path (default stdout)")
    args = parser.parse_args(argv)

    counts = tuple(int(c) for c in args.comp.split(","))
    comp = DeckComposition(counts, args.players, args.hand)
    deck = Deck.ordered(comp)
    method = parse_method(args.method, args.players, args.hand)
    coeff = leading_coefficient_ordered(comp, method).coefficient

    stream = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(stream)
        writer.writerow(("a", "vd", "a_times_vd", "coefficient", "abs_error"))
        for j in range(1, args.doublings + 1):
            a = 2**j
            vd = exact_hand_variation_distance(deck, method, a)
            writer.writerow(
                (a, float(vd), float(a * vd), float(coeff), float(abs(a * vd - coeff)))
            )
    finally:
        if args.out:
            stream.close()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
