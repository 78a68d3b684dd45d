"""Signed digraph and pair statistics on card sequences.

All three statistics accept either a `Deck` or a raw colour sequence.
`z_positional` is a deliberately independent second route to the pair
count and must agree with `z_statistic` on every input.
"""
from __future__ import annotations

from typing import Sequence

from .deck import Deck

__all__ = ["w_statistic", "z_statistic", "z_positional"]


def _cards(deck) -> Sequence[int]:
    return deck.cards if isinstance(deck, Deck) else deck


def _check_colors(cards: Sequence[int], x: int, y: int) -> None:
    if x == y:
        raise ValueError("the two colours must differ")
    if x not in cards or y not in cards:
        raise ValueError("both colours must be present in the deck")


def w_statistic(deck, x: int, y: int) -> int:
    """#(x,y adjacent digraphs) - #(y,x adjacent digraphs)."""
    cards = _cards(deck)
    _check_colors(cards, x, y)
    total = 0
    for a, b in zip(cards, cards[1:]):
        if a == x and b == y:
            total += 1
        elif a == y and b == x:
            total -= 1
    return total


def z_statistic(deck, x: int, y: int) -> int:
    """#(x before y pairs) - #(y before x pairs), counted over all positions."""
    cards = _cards(deck)
    _check_colors(cards, x, y)
    seen_x = seen_y = 0
    total = 0
    for c in cards:
        if c == x:
            total -= seen_y
            seen_x += 1
        elif c == y:
            total += seen_x
            seen_y += 1
    return total


def z_positional(deck, x: int, y: int) -> int:
    """Pair statistic built position by position from the x-card locations.

    Each x card at 1-based position i contributes
    n + 1 - 2i + (#non-x, non-y cards before i) - (#non-x, non-y after i).
    """
    cards = _cards(deck)
    _check_colors(cards, x, y)
    n = len(cards)
    others_total = sum(1 for c in cards if c != x and c != y)
    others_before = 0
    total = 0
    for idx, c in enumerate(cards):
        i = idx + 1
        if c == x:
            others_after = others_total - others_before
            total += n + 1 - 2 * i + others_before - others_after
        elif c != y:
            others_before += 1
    return total
