"""Exact a-shuffle law and brute-force oracles for small decks.

Everything here is exact and deliberately naive: it enumerates the
permutations that map one deck to another and serves as the independent
check for the closed-form coefficient engine. Inputs above the size cap
are refused rather than silently degraded.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict
from fractions import Fraction
from typing import Iterator, Sequence

from .dealing import DealingMethod
from .deck import Deck, HandProfile, enumerate_hand_profiles, stationary_probability
from .errors import ScaleExceededError
from .pair_stats import w_statistic, z_statistic

__all__ = [
    "DEFAULT_ORACLE_CAP",
    "descents",
    "apply_permutation",
    "inverse_permutation",
    "bayer_diaconis_prob",
    "transform_permutations",
    "descent_table",
    "transition_probability",
    "first_order_coefficient_oracle",
    "c1_formula",
    "distinct_arrangements",
    "hand_descent_tables",
    "exact_hand_distribution",
    "exact_hand_variation_distance",
    "oracle_hand_coefficients",
    "oracle_leading_coefficient",
]

DEFAULT_ORACLE_CAP = 10


def descents(mapping: Sequence[int]) -> int:
    """Number of adjacent positions whose images are out of order."""
    return sum(1 for a, b in zip(mapping, mapping[1:]) if a > b)


def apply_permutation(mapping: Sequence[int], seq: Sequence[int]) -> tuple:
    """Move the object in position i to position mapping[i] (0-indexed)."""
    if len(mapping) != len(seq):
        raise ValueError("permutation and sequence lengths differ")
    out = [None] * len(seq)
    for i, target in enumerate(mapping):
        out[target] = seq[i]
    return tuple(out)


def inverse_permutation(mapping: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(mapping)
    for i, target in enumerate(mapping):
        out[target] = i
    return tuple(out)


def bayer_diaconis_prob(n: int, d: int, a: int) -> Fraction:
    """Exact probability of a fixed permutation with d descents under an a-shuffle."""
    if n < 1 or a < 1:
        raise ValueError("need n >= 1 and a >= 1")
    if not 0 <= d <= n - 1:
        raise ValueError(f"descent count {d} out of range for n={n}")
    return Fraction(math.comb(a + n - d - 1, n), a**n)


def _check_pair(deck: Deck, other: Deck) -> None:
    if deck.composition != other.composition:
        raise ValueError("decks must share a composition")


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise ScaleExceededError(f"oracle scale exceeded: deck size {n} > cap {cap}")


def transform_permutations(
    source: Sequence[int], target: Sequence[int]
) -> Iterator[tuple[int, ...]]:
    """All position permutations carrying `source` onto `target`.

    Enumerated colour block by colour block, so the stream has
    prod(count_c!) elements rather than n!.
    """
    if Counter(source) != Counter(target):
        raise ValueError("sequences are not rearrangements of each other")
    n = len(source)
    src_pos = defaultdict(list)
    dst_pos = defaultdict(list)
    for i, c in enumerate(source):
        src_pos[c].append(i)
    for i, c in enumerate(target):
        dst_pos[c].append(i)
    colors = sorted(src_pos)
    for combo in itertools.product(
        *(itertools.permutations(dst_pos[c]) for c in colors)
    ):
        mapping = [0] * n
        for c, targets in zip(colors, combo):
            for src, dst in zip(src_pos[c], targets):
                mapping[src] = dst
        yield tuple(mapping)


def descent_table(
    deck: Deck, other: Deck, cap: int = DEFAULT_ORACLE_CAP
) -> Counter:
    """Map descent count -> number of deck-to-deck permutations with that count."""
    _check_pair(deck, other)
    _check_cap(deck.composition.deck_size, cap)
    table = Counter()
    for mapping in transform_permutations(deck.cards, other.cards):
        table[descents(mapping)] += 1
    return table


def _prob_from_table(n: int, table: Counter, a: int) -> Fraction:
    num = sum(b * math.comb(a + n - d - 1, n) for d, b in table.items())
    return Fraction(num, a**n)


def _c1_from_table(n: int, table: Counter) -> Fraction:
    # 1/a term of comb(a+n-d-1, n)/a^n is n*((n-1)/2 - d)/n!
    total = sum(b * (n - 1 - 2 * d) for d, b in table.items())
    return Fraction(n * total, 2 * math.factorial(n))


def transition_probability(
    deck: Deck, other: Deck, a: int, cap: int = DEFAULT_ORACLE_CAP
) -> Fraction:
    if a < 1:
        raise ValueError("need a >= 1")
    table = descent_table(deck, other, cap)
    return _prob_from_table(deck.composition.deck_size, table, a)


def first_order_coefficient_oracle(
    deck: Deck, other: Deck, cap: int = DEFAULT_ORACLE_CAP
) -> Fraction:
    """1/a coefficient of the transition probability, by permutation enumeration."""
    table = descent_table(deck, other, cap)
    return _c1_from_table(deck.composition.deck_size, table)


def c1_formula(deck: Deck, other: Deck) -> Fraction:
    """Closed form for the 1/a transition coefficient from W and Z statistics."""
    _check_pair(deck, other)
    comp = deck.composition
    n = comp.deck_size
    big_n = math.factorial(n) // math.prod(
        math.factorial(p) for p in comp.color_counts
    )
    total = Fraction(0)
    for x in range(comp.num_colors):
        for y in range(x + 1, comp.num_colors):
            w = w_statistic(deck, x, y)
            if w == 0:
                continue
            z = z_statistic(other, x, y)
            total += Fraction(
                w * z, comp.color_counts[x] * comp.color_counts[y]
            )
    return Fraction(n, 2 * big_n) * total


def distinct_arrangements(cards: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All distinct rearrangements of a colour sequence, lexicographic."""
    counts = Counter(cards)
    n = len(cards)

    def rec(prefix: list[int], remaining: Counter):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for c in sorted(remaining):
            if remaining[c]:
                remaining[c] -= 1
                prefix.append(c)
                yield from rec(prefix, remaining)
                prefix.pop()
                remaining[c] += 1

    yield from rec([], counts)


def hand_descent_tables(
    deck: Deck, method: DealingMethod, cap: int = DEFAULT_ORACLE_CAP
) -> dict[HandProfile, Counter]:
    """Aggregate descent tables of all arrangements dealing to each hand profile."""
    from .deck import deal  # local import keeps module init order simple

    comp = deck.composition
    _check_cap(comp.deck_size, cap)
    if (method.players, method.hand_size) != (comp.players, comp.hand_size):
        raise ValueError("dealing method does not match the deck")
    tables: dict[HandProfile, Counter] = defaultdict(Counter)
    for target in distinct_arrangements(deck.cards):
        profile = deal(Deck(comp, target), method)
        table = tables[profile]
        for mapping in transform_permutations(deck.cards, target):
            table[descents(mapping)] += 1
    return dict(tables)


def exact_hand_distribution(
    deck: Deck, method: DealingMethod, a: int, cap: int = DEFAULT_ORACLE_CAP
) -> dict[HandProfile, Fraction]:
    n = deck.composition.deck_size
    tables = hand_descent_tables(deck, method, cap)
    return {omega: _prob_from_table(n, t, a) for omega, t in tables.items()}


def exact_hand_variation_distance(
    deck: Deck, method: DealingMethod, a: int, cap: int = DEFAULT_ORACLE_CAP
) -> Fraction:
    """Exact variation distance of the dealt-hand law from its stationary limit."""
    comp = deck.composition
    dist = exact_hand_distribution(deck, method, a, cap)
    total = Fraction(0)
    for omega in enumerate_hand_profiles(comp):
        p = dist.get(omega, Fraction(0))
        total += abs(p - stationary_probability(comp, omega))
    return total / 2


def oracle_hand_coefficients(
    deck: Deck, method: DealingMethod, cap: int = DEFAULT_ORACLE_CAP
) -> dict[HandProfile, Fraction]:
    """Per-hand 1/a coefficients summed over arrangements, by brute force."""
    n = deck.composition.deck_size
    tables = hand_descent_tables(deck, method, cap)
    return {omega: _c1_from_table(n, t) for omega, t in tables.items()}


def oracle_leading_coefficient(
    deck: Deck, method: DealingMethod, cap: int = DEFAULT_ORACLE_CAP
) -> Fraction:
    coeffs = oracle_hand_coefficients(deck, method, cap)
    return sum((abs(c) for c in coeffs.values()), Fraction(0)) / 2
