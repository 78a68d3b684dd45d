"""Command-line surface: exact coefficients, comparisons, oracles, sampling, search.

Exit codes: 0 success, 2 bad arguments or inconsistent specs, 3 exact
brute-force scale exceeded. Output is CSV on stdout (or --out), prefixed
with one comment line carrying the tool version and the full config, so
identical configs produce byte-identical files.
"""
from __future__ import annotations

import argparse
import csv
import os
import shlex
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import __version__
from .coefficients import (
    leading_coefficient_arbitrary,
    leading_coefficient_ordered,
)
from .dealing import parse_method
from .deck import Deck, DeckComposition, enumerate_hand_profiles, stationary_probability
from .errors import ScaleExceededError
from .lab import (
    compare_methods,
    grid_three_types,
    search_dealing,
    simulate_hand_distribution,
)
from .dealing import method_to_text
from .shuffle_oracle import (
    DEFAULT_ORACLE_CAP,
    exact_hand_variation_distance,
    oracle_leading_coefficient,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SCALE = 3

_CONFIG_FIELDS = (
    "players",
    "hand",
    "comp",
    "cards",
    "deck",
    "method",
    "methods",
    "a",
    "samples",
    "seed",
    "cap",
    "objective",
    "strategy",
    "budget",
    "threads",
    "per_hand",
    "out",
)


@dataclass(frozen=True)
class RunConfig:
    """Canonical textual form of one CLI invocation; round-trips through argv."""

    subcommand: str
    options: tuple[tuple[str, str], ...]

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "RunConfig":
        options = []
        for name in _CONFIG_FIELDS:
            value = getattr(args, name, None)
            if value is None or value is False:
                continue
            options.append((name, "" if value is True else str(value)))
        return cls(args.subcommand, tuple(options))

    def to_argv(self) -> list[str]:
        argv = [self.subcommand]
        for name, value in self.options:
            argv.append("--" + name.replace("_", "-"))
            if value != "":
                argv.append(value)
        return argv


def _exact_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _float_str(x) -> str:
    return f"{float(x):.17g}"


def _default_threads() -> int:
    return int(os.environ.get("SHUFFLEDEAL_THREADS", "1"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shuffledeal",
        description="Exact first-order randomness of shuffled-and-dealt hands.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, deck_based=False):
        if deck_based:
            p.add_argument("--deck", required=True, help="deck string, e.g. BBRR")
        else:
            p.add_argument("--comp", required=True, help="comma-separated colour counts")
        p.add_argument("--players", type=int, required=True)
        p.add_argument("--hand", type=int, required=True)
        p.add_argument("--threads", type=int, default=_default_threads())
        p.add_argument("--out", help="write CSV here instead of stdout")

    p = sub.add_parser("coeff", help="leading 1/a coefficient for one method")
    common(p)
    p.add_argument("--method", required=True)
    p.add_argument("--deck", help="arbitrary initial deck (default: ordered)")
    p.add_argument("--per-hand", dest="per_hand", action="store_true")

    p = sub.add_parser("compare", help="coefficients for several methods")
    common(p)
    p.add_argument("--methods", required=True, help="comma-separated method specs")

    p = sub.add_parser("grid3", help="three-colour coefficient grid")
    p.add_argument("--cards", type=int, default=52)
    p.add_argument("--method", required=True)
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--out")

    p = sub.add_parser("oracle", help="exact brute-force distance for a small deck")
    common(p, deck_based=True)
    p.add_argument("--method", required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_ORACLE_CAP)

    p = sub.add_parser("simulate", help="seeded Monte Carlo hand distribution")
    common(p, deck_based=True)
    p.add_argument("--method", required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=DEFAULT_ORACLE_CAP)

    p = sub.add_parser("search", help="search dealing sequences")
    common(p)
    p.add_argument(
        "--objective", choices=("coefficient", "metric"), default="coefficient"
    )
    p.add_argument(
        "--strategy", choices=("exhaustive", "local", "anneal"), default="local"
    )
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _composition(args) -> DeckComposition:
    counts = tuple(int(tok) for tok in args.comp.split(","))
    return DeckComposition(counts, args.players, args.hand)


def _emit(config: RunConfig, header: Sequence[str], rows, out_path: str | None):
    def write(stream):
        stream.write(f"# shuffledeal {__version__} | {shlex.join(config.to_argv())}\n")
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)

    if out_path:
        with open(out_path, "w", newline="") as fh:
            write(fh)
    else:
        write(sys.stdout)


def _cmd_coeff(args, config):
    comp = _composition(args)
    method = parse_method(args.method, args.players, args.hand)
    if args.deck:
        deck = Deck.from_text(args.deck, args.players, args.hand)
        if deck.composition != comp:
            raise ValueError("--deck does not match --comp")
        report = leading_coefficient_arbitrary(
            deck, method, keep_per_hand=args.per_hand, method_label=args.method
        )
    else:
        report = leading_coefficient_ordered(
            comp, method, keep_per_hand=args.per_hand, method_label=args.method
        )
    rows = [
        ("coefficient", args.method, _exact_str(report.coefficient),
         _float_str(report.coefficient))
    ]
    if report.per_hand is not None:
        for omega, inner in report.per_hand.items():
            rows.append(("hand", omega.to_text(), _exact_str(inner), _float_str(inner)))
    _emit(config, ("record", "label", "exact", "float"), rows, args.out)


def _cmd_compare(args, config):
    comp = _composition(args)
    specs = [tok.strip() for tok in args.methods.split(",") if tok.strip()]
    methods = [parse_method(spec, args.players, args.hand) for spec in specs]
    reports = compare_methods(comp, methods, labels=specs)
    rows = []
    prev = None
    for report in reports:
        c = report.coefficient
        if prev is None or c == 0:
            ratio = ""
        else:
            ratio = _exact_str(Fraction(prev, c))
        rows.append(
            (report.method_label, _exact_str(c), _float_str(c), ratio)
        )
        prev = c
    _emit(
        config,
        ("method", "coefficient", "coefficient_float", "ratio_to_prev"),
        rows,
        args.out,
    )


def _cmd_grid3(args, config):
    if args.cards % 4 != 0 or args.cards < 12:
        raise ValueError("--cards must be a multiple of 4, at least 12")
    method = parse_method(args.method, 4, args.cards // 4)
    rows = [
        (b, r, c.numerator, c.denominator, _float_str(c))
        for b, r, c in grid_three_types(args.cards, method)
    ]
    _emit(config, ("b", "r", "num", "den", "float"), rows, args.out)


def _cmd_oracle(args, config):
    deck = Deck.from_text(args.deck, args.players, args.hand)
    method = parse_method(args.method, args.players, args.hand)
    vd = exact_hand_variation_distance(deck, method, args.a, cap=args.cap)
    coeff = oracle_leading_coefficient(deck, method, cap=args.cap)
    rows = [
        (args.deck, args.method, args.a, _exact_str(vd), _float_str(vd),
         _exact_str(coeff), _float_str(coeff))
    ]
    _emit(
        config,
        ("deck", "method", "a", "vd", "vd_float", "coefficient", "coefficient_float"),
        rows,
        args.out,
    )


def _cmd_simulate(args, config):
    deck = Deck.from_text(args.deck, args.players, args.hand)
    method = parse_method(args.method, args.players, args.hand)
    result = simulate_hand_distribution(
        deck, method, args.a, args.samples, args.seed, cap=args.cap
    )
    rows = [
        ("seed", "", str(result.seed), ""),
        ("tv_empirical", "", _exact_str(result.empirical_tv),
         _float_str(result.empirical_tv)),
    ]
    if result.exact_tv is not None:
        rows.append(
            ("tv_exact", "", _exact_str(result.exact_tv), _float_str(result.exact_tv))
        )
    comp = deck.composition
    for omega in enumerate_hand_profiles(comp):
        observed = result.counts.get(omega, 0)
        pi = stationary_probability(comp, omega)
        rows.append(
            ("hand", omega.to_text(), str(observed), _float_str(pi))
        )
    _emit(config, ("record", "hand", "value", "float"), rows, args.out)


def _cmd_search(args, config):
    comp = _composition(args)
    result = search_dealing(
        comp,
        objective=args.objective,
        strategy=args.strategy,
        budget=args.budget,
        seed=args.seed,
    )
    score = Fraction(result.score)
    rows = [
        (args.strategy, args.objective, method_to_text(result.method),
         _exact_str(score), _float_str(score), result.evaluations)
    ]
    _emit(
        config,
        ("strategy", "objective", "sequence", "score", "score_float", "evaluations"),
        rows,
        args.out,
    )


_HANDLERS = {
    "coeff": _cmd_coeff,
    "compare": _cmd_compare,
    "grid3": _cmd_grid3,
    "oracle": _cmd_oracle,
    "simulate": _cmd_simulate,
    "search": _cmd_search,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig.from_namespace(args)
    try:
        _HANDLERS[args.subcommand](args, config)
    except ScaleExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
