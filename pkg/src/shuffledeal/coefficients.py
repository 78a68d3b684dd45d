"""Closed-form leading 1/a coefficient of the dealt-hand variation distance.

The hot loop is pure big-integer arithmetic: per hand profile, the inner
dealing-method sum is scaled by hand_size**2 so it stays integral, and the
common prefactor is applied once at the end. Absolute values make the sum
over profiles non-cancellative, so no floating point appears anywhere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .dealing import DealingMethod, pair_matrix
from .deck import (
    Deck,
    DeckComposition,
    HandProfile,
    check_profile,
    count_decks_for_profile,
    enumerate_hand_profiles,
)
from .pair_stats import w_statistic

__all__ = [
    "CoefficientReport",
    "sum_z_over_profile",
    "leading_coefficient_ordered",
    "leading_coefficient_arbitrary",
    "two_type_closed_form",
]


@dataclass
class CoefficientReport:
    coefficient: Fraction
    composition: DeckComposition
    method_label: str
    per_hand: dict[HandProfile, Fraction] | None = None


def _method_tables(method: DealingMethod):
    s = method.hand_size
    n = method.deck_size
    base = [s * s * (n + 1) - 2 * s * method.position_sum(p) for p in range(method.players)]
    return base, pair_matrix(method)


def _inner_scaled(
    rows: Sequence[Sequence[int]],
    x: int,
    y: int,
    base: Sequence[int],
    zmat: Sequence[Sequence[int]],
    s: int,
    ell: int,
) -> int:
    """s^2 times the per-profile dealing sum for colour pair (x, y)."""
    xrow = rows[x]
    yrow = rows[y]
    total = 0
    for i in range(ell):
        xi = xrow[i]
        if not xi:
            continue
        term = base[i]
        for j in range(ell):
            if j != i:
                term += (s - xrow[j] - yrow[j]) * zmat[j][i]
        total += xi * term
    return total


def _check_method(comp: DeckComposition, method: DealingMethod) -> None:
    if (method.players, method.hand_size) != (comp.players, comp.hand_size):
        raise ValueError("dealing method does not match the composition")


def sum_z_over_profile(
    comp: DeckComposition,
    profile: HandProfile,
    method: DealingMethod,
    x: int,
    y: int,
) -> Fraction:
    """Sum of the (x, y) pair statistic over all arrangements dealing to `profile`."""
    if x == y:
        raise ValueError("the two colours must differ")
    if not (0 <= x < comp.num_colors and 0 <= y < comp.num_colors):
        raise ValueError("colour index out of range")
    check_profile(comp, profile)
    _check_method(comp, method)
    base, zmat = _method_tables(method)
    inner = _inner_scaled(
        profile.counts, x, y, base, zmat, comp.hand_size, comp.players
    )
    count = count_decks_for_profile(comp, profile)
    return Fraction(count * inner, comp.hand_size**2)


def _leading_coefficient(
    comp: DeckComposition,
    method: DealingMethod,
    pair_weights: Sequence[tuple[tuple[int, int], Fraction]],
    method_label: str,
    keep_per_hand: bool,
    profiles: Iterable[HandProfile] | None,
) -> CoefficientReport:
    _check_method(comp, method)
    s = comp.hand_size
    base, zmat = _method_tables(method)
    # bring all pair weights over the common denominator scale = s^2 * L
    lcm = math.lcm(*(w.denominator for _, w in pair_weights)) if pair_weights else 1
    scale = s * s * lcm
    int_pairs = [
        (x, y, w.numerator * (lcm // w.denominator)) for (x, y), w in pair_weights
    ]
    acc = 0
    per_hand: dict[HandProfile, Fraction] | None = {} if keep_per_hand else None
    for omega in profiles if profiles is not None else enumerate_hand_profiles(comp):
        rows = omega.counts
        num = 0
        for x, y, wnum in int_pairs:
            num += wnum * _inner_scaled(rows, x, y, base, zmat, s, comp.players)
        num *= count_decks_for_profile(comp, omega)
        if per_hand is not None:
            per_hand[omega] = Fraction(num, scale)
        acc += abs(num)
    # Half of the per-hand first-order transition sum: the leading factor is
    # n/4 times prod(p_j!)/n!, which reduces to hand_size only for 4 players.
    n = comp.deck_size
    prefactor_num = n * math.prod(math.factorial(p) for p in comp.color_counts)
    coefficient = Fraction(prefactor_num * acc, 4 * math.factorial(n) * scale)
    return CoefficientReport(coefficient, comp, method_label, per_hand)


def leading_coefficient_ordered(
    comp: DeckComposition,
    method: DealingMethod,
    keep_per_hand: bool = False,
    profiles: Iterable[HandProfile] | None = None,
    method_label: str = "",
) -> CoefficientReport:
    """Leading 1/a coefficient for an ordered initial deck.

    Only consecutive colour pairs contribute (their adjacent-digraph
    statistic is 1, all others vanish on an ordered deck).
    """
    pair_weights = [
        ((i, i + 1), Fraction(1, comp.color_counts[i] * comp.color_counts[i + 1]))
        for i in range(comp.num_colors - 1)
    ]
    return _leading_coefficient(
        comp, method, pair_weights, method_label, keep_per_hand, profiles
    )


def leading_coefficient_arbitrary(
    deck: Deck,
    method: DealingMethod,
    keep_per_hand: bool = False,
    profiles: Iterable[HandProfile] | None = None,
    method_label: str = "",
) -> CoefficientReport:
    """Leading 1/a coefficient for an arbitrary initial deck order."""
    comp = deck.composition
    pair_weights = []
    for x in range(comp.num_colors):
        for y in range(x + 1, comp.num_colors):
            w = w_statistic(deck, x, y)
            if w:
                pair_weights.append(
                    ((x, y), Fraction(w, comp.color_counts[x] * comp.color_counts[y]))
                )
    return _leading_coefficient(
        comp, method, pair_weights, method_label, keep_per_hand, profiles
    )


def two_type_closed_form(
    b: int, cards: int = 52, method: DealingMethod | None = None
) -> Fraction:
    """Two-colour, four-player coefficient via the direct binomial sum."""
    if cards % 4 != 0:
        raise ValueError("deck size must be divisible by four players")
    s = cards // 4
    if not 1 <= b <= cards - 1:
        raise ValueError(f"black count {b} must lie in [1, {cards - 1}]")
    if method is None:
        raise ValueError("a dealing method is required")
    if (method.players, method.hand_size) != (4, s):
        raise ValueError("dealing method does not match four players of this hand size")
    possum = [method.position_sum(p) for p in range(4)]
    acc = 0
    for b_split in _bounded_splits(b, s, 4):
        weight = math.prod(math.comb(s, bj) for bj in b_split)
        # s * ((4s+1) b - (2/s) sum_j b_j * possum_j), kept integral
        inner = s * (cards + 1) * b - 2 * sum(
            bj * ps for bj, ps in zip(b_split, possum)
        )
        acc += weight * abs(inner)
    return Fraction(acc, b * (cards - b) * math.comb(cards, b))


def _bounded_splits(total: int, cap: int, parts: int):
    if parts == 1:
        if 0 <= total <= cap:
            yield (total,)
        return
    for first in range(min(total, cap) + 1):
        for rest in _bounded_splits(total - first, cap, parts - 1):
            yield (first,) + rest
