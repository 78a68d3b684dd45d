"""Deck compositions, concrete decks, hand profiles, and the dealing map.

Colours are 0-indexed in code and carry the fixed total order used by all
"pair of colours" sums. Probabilities are exact `fractions.Fraction`s.
"""
from __future__ import annotations

import math
import string
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .dealing import DealingMethod

__all__ = [
    "DeckComposition",
    "Deck",
    "HandProfile",
    "color_letter",
    "parse_cards",
    "cards_to_text",
    "enumerate_hand_profiles",
    "stationary_probability",
    "count_decks_for_profile",
    "deal",
]

_BASE_LETTERS = "BRG"
_EXTRA_LETTERS = [c for c in string.ascii_uppercase if c not in _BASE_LETTERS]


def color_letter(index: int) -> str:
    if index < 3:
        return _BASE_LETTERS[index]
    return _EXTRA_LETTERS[index - 3]


_LETTER_TO_COLOR = {color_letter(i): i for i in range(26)}


def parse_cards(text: str) -> tuple[int, ...]:
    """Parse a deck string: colour letters, or comma-separated 1-based indices."""
    text = text.strip()
    if "," in text:
        values = [int(tok) for tok in text.split(",")]
        if any(v < 1 for v in values):
            raise ValueError("colour indices are 1-based")
        return tuple(v - 1 for v in values)
    try:
        return tuple(_LETTER_TO_COLOR[c] for c in text.upper())
    except KeyError as exc:
        raise ValueError(f"unknown colour letter {exc.args[0]!r}") from None


def cards_to_text(cards: Sequence[int]) -> str:
    return "".join(color_letter(c) for c in cards)


@dataclass(frozen=True)
class DeckComposition:
    color_counts: tuple[int, ...]
    players: int
    hand_size: int

    def __post_init__(self):
        object.__setattr__(self, "color_counts", tuple(self.color_counts))
        if not self.color_counts:
            raise ValueError("need at least one colour")
        if any(c < 1 for c in self.color_counts):
            raise ValueError("absent colours must be removed before construction")
        if self.players < 2:
            raise ValueError("need at least two players")
        if self.hand_size < 1:
            raise ValueError("hand size must be positive")
        if sum(self.color_counts) != self.players * self.hand_size:
            raise ValueError(
                f"colour counts sum to {sum(self.color_counts)}, "
                f"expected players*hand_size = {self.players * self.hand_size}"
            )

    @property
    def num_colors(self) -> int:
        return len(self.color_counts)

    @property
    def deck_size(self) -> int:
        return self.players * self.hand_size


@dataclass(frozen=True)
class Deck:
    composition: DeckComposition
    cards: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cards", tuple(self.cards))
        tallies = Counter(self.cards)
        expected = {i: c for i, c in enumerate(self.composition.color_counts)}
        if tallies != expected:
            raise ValueError("card tallies do not match the composition")

    @classmethod
    def ordered(cls, composition: DeckComposition) -> "Deck":
        cards = [i for i, c in enumerate(composition.color_counts) for _ in range(c)]
        return cls(composition, tuple(cards))

    @classmethod
    def from_text(cls, text: str, players: int, hand_size: int) -> "Deck":
        cards = parse_cards(text)
        if not cards:
            raise ValueError("empty deck")
        k = max(cards) + 1
        tallies = Counter(cards)
        counts = tuple(tallies.get(i, 0) for i in range(k))
        composition = DeckComposition(counts, players, hand_size)
        return cls(composition, cards)

    def to_text(self) -> str:
        return cards_to_text(self.cards)


@dataclass(frozen=True)
class HandProfile:
    """Per-colour, per-player card counts: counts[colour][player]."""

    counts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(tuple(row) for row in self.counts))

    @property
    def num_colors(self) -> int:
        return len(self.counts)

    @property
    def num_players(self) -> int:
        return len(self.counts[0])

    def color_row(self, color: int) -> tuple[int, ...]:
        return self.counts[color]

    def player_count(self, color: int, player: int) -> int:
        return self.counts[color][player]

    def to_text(self) -> str:
        return ";".join(",".join(str(c) for c in row) for row in self.counts)


def check_profile(comp: DeckComposition, profile: HandProfile) -> None:
    counts = profile.counts
    if len(counts) != comp.num_colors or any(len(r) != comp.players for r in counts):
        raise ValueError("profile shape does not match the composition")
    if any(c < 0 for row in counts for c in row):
        raise ValueError("negative count in hand profile")
    if any(sum(row) != p for row, p in zip(counts, comp.color_counts)):
        raise ValueError("per-colour totals do not match the composition")
    if any(
        sum(counts[i][j] for i in range(comp.num_colors)) != comp.hand_size
        for j in range(comp.players)
    ):
        raise ValueError("some player does not hold exactly hand_size cards")


def _splits(total: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All ways to write `total` as an ordered sum bounded by `caps`, lexicographic."""
    if len(caps) == 1:
        if 0 <= total <= caps[0]:
            yield (total,)
        return
    for first in range(min(total, caps[0]) + 1):
        for rest in _splits(total - first, caps[1:]):
            yield (first,) + rest


def enumerate_hand_profiles(comp: DeckComposition) -> Iterator[HandProfile]:
    """All hand profiles of the composition, lexicographic in the flattened matrix."""

    def rec(color: int, capacity: list[int], rows: list[tuple[int, ...]]):
        if color == comp.num_colors - 1:
            # last colour is forced by the per-player capacities
            row = tuple(capacity)
            if sum(row) == comp.color_counts[color]:
                yield HandProfile(tuple(rows) + (row,))
            return
        for row in _splits(comp.color_counts[color], capacity):
            rows.append(row)
            yield from rec(
                color + 1, [c - r for c, r in zip(capacity, row)], rows
            )
            rows.pop()

    yield from rec(0, [comp.hand_size] * comp.players, [])


def stationary_probability(comp: DeckComposition, profile: HandProfile) -> Fraction:
    """Probability of `profile` under the uniform-on-arrangements limit law."""
    check_profile(comp, profile)
    num = math.factorial(comp.hand_size) ** comp.players
    num *= math.prod(math.factorial(p) for p in comp.color_counts)
    den = math.factorial(comp.deck_size)
    den *= math.prod(math.factorial(c) for row in profile.counts for c in row)
    return Fraction(num, den)


def count_decks_for_profile(
    comp: DeckComposition, profile: HandProfile, method: DealingMethod | None = None
) -> int:
    """Number of deck arrangements that deal to `profile` (method-independent)."""
    check_profile(comp, profile)
    if method is not None and (method.players, method.hand_size) != (
        comp.players,
        comp.hand_size,
    ):
        raise ValueError("dealing method does not match the composition")
    num = math.factorial(comp.hand_size) ** comp.players
    den = math.prod(math.factorial(c) for row in profile.counts for c in row)
    return num // den


def deal(deck: Deck, method: DealingMethod) -> HandProfile:
    comp = deck.composition
    if len(method.assignment) != len(deck.cards):
        raise ValueError("dealing method length does not match the deck")
    counts = [[0] * comp.players for _ in range(comp.num_colors)]
    for card, player in zip(deck.cards, method.assignment):
        counts[card][player] += 1
    return HandProfile(tuple(tuple(row) for row in counts))
