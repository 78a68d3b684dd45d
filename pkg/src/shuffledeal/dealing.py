"""Dealing methods: canonical sequence generators and their pair statistics.

A dealing method assigns each position of the shuffled deck to a player.
Players are 0-indexed in code; deck positions are 1-based wherever a
position *value* enters a formula (position sums and closed forms).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "DealingMethod",
    "ordered_method",
    "cyclic_method",
    "back_and_forth_method",
    "conjectured_method",
    "CONJECTURED_SEQUENCE",
    "parse_method",
    "method_to_text",
    "dealing_z",
    "pair_matrix",
    "position_sum",
    "closed_form_position_term",
    "conjecture_metric",
]

NESW = "NESW"


@dataclass(frozen=True)
class DealingMethod:
    players: int
    hand_size: int
    assignment: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if self.players < 2:
            raise ValueError("need at least two players")
        if self.hand_size < 1:
            raise ValueError("hand size must be positive")
        if len(self.assignment) != self.players * self.hand_size:
            raise ValueError("assignment length must be players * hand_size")
        tallies = Counter(self.assignment)
        expected = {p: self.hand_size for p in range(self.players)}
        if tallies != expected:
            raise ValueError("each player must receive exactly hand_size positions")

    @property
    def deck_size(self) -> int:
        return self.players * self.hand_size

    def positions(self, player: int) -> tuple[int, ...]:
        """1-based deck positions dealt to `player`, in dealing order."""
        return tuple(t + 1 for t, p in enumerate(self.assignment) if p == player)

    def position_sum(self, player: int) -> int:
        return sum(self.positions(player))


def ordered_method(players: int, hand_size: int) -> DealingMethod:
    seq = [p for p in range(players) for _ in range(hand_size)]
    return DealingMethod(players, hand_size, tuple(seq))


def cyclic_method(players: int, hand_size: int) -> DealingMethod:
    seq = [t % players for t in range(players * hand_size)]
    return DealingMethod(players, hand_size, tuple(seq))


def back_and_forth_method(players: int, hand_size: int) -> DealingMethod:
    """Forward pass, backward pass, repeated; odd hand sizes end forward."""
    zigzag = list(range(players)) + list(reversed(range(players)))
    n = players * hand_size
    seq = [zigzag[t % len(zigzag)] for t in range(n)]
    return DealingMethod(players, hand_size, tuple(seq))


# 52-position, 4-player sequence conjectured to be the best two-colour
# dealing order; transcription validated below so a typo fails at import.
CONJECTURED_SEQUENCE = (
    "SNEWWSENNEWSWSENNESWWSENNESWWSEN"
    "NESWWSENNESWWSENNESW"
)


def conjectured_method() -> DealingMethod:
    if len(CONJECTURED_SEQUENCE) != 52 or any(
        CONJECTURED_SEQUENCE.count(c) != 13 for c in NESW
    ):
        raise AssertionError("conjectured dealing sequence is corrupted")
    return DealingMethod(4, 13, tuple(NESW.index(c) for c in CONJECTURED_SEQUENCE))


def _parse_sequence(text: str, players: int, hand_size: int) -> DealingMethod:
    text = text.strip().upper()
    if players == 4 and set(text) <= set(NESW):
        seq = [NESW.index(c) for c in text]
    else:
        symbols = "123456789"[:players]
        try:
            seq = [symbols.index(c) for c in text]
        except ValueError:
            raise ValueError(f"bad player symbol in dealing sequence {text!r}") from None
    return DealingMethod(players, hand_size, tuple(seq))


def parse_method(spec: str, players: int, hand_size: int) -> DealingMethod:
    """Parse `ordered|cyclic|backforth|conjectured|seq:<string>` (or a bare sequence)."""
    name = spec.strip()
    if name == "ordered":
        return ordered_method(players, hand_size)
    if name == "cyclic":
        return cyclic_method(players, hand_size)
    if name == "backforth":
        return back_and_forth_method(players, hand_size)
    if name == "conjectured":
        method = conjectured_method()
        if (players, hand_size) != (4, 13):
            raise ValueError("conjectured method is defined for 4 players, hand size 13")
        return method
    if name.startswith("seq:"):
        name = name[4:]
    return _parse_sequence(name, players, hand_size)


def method_to_text(method: DealingMethod) -> str:
    if method.players == 4:
        return "".join(NESW[p] for p in method.assignment)
    if method.players > 9:
        raise ValueError("no text form for more than 9 players")
    return "".join(str(p + 1) for p in method.assignment)


def pair_matrix(method: DealingMethod) -> list[list[int]]:
    """Signed pair counts: entry [j][i] = #(j before i) - #(i before j)."""
    ell = method.players
    before = [[0] * ell for _ in range(ell)]
    seen = [0] * ell
    for p in method.assignment:
        for q in range(ell):
            before[q][p] += seen[q]
        seen[p] += 1
    return [[before[j][i] - before[i][j] for i in range(ell)] for j in range(ell)]


def dealing_z(method: DealingMethod, j: int, i: int) -> int:
    """Signed count of j-before-i position pairs in the dealing sequence."""
    if j == i:
        return 0
    return pair_matrix(method)[j][i]


def position_sum(method: DealingMethod, player: int) -> int:
    return method.position_sum(player)


def closed_form_position_term(
    kind: str, players: int, hand_size: int, player: int
) -> Fraction:
    """Closed form of n + 1 - 2 * position_sum / hand_size for the canonical methods.

    `player` is 0-indexed; the formulas below use the 1-based rank.
    """
    if not 0 <= player < players:
        raise ValueError("player out of range")
    i = player + 1
    ell, s = players, hand_size
    if kind == "ordered":
        return Fraction(s * (ell - 2 * i + 1))
    if kind == "cyclic":
        return Fraction(ell - 2 * i + 1)
    if kind == "backforth":
        if s % 2 == 0:
            return Fraction(0)
        return Fraction(ell - 2 * i + 1, s)
    raise ValueError(f"unknown dealing kind {kind!r}")


def conjecture_metric(method: DealingMethod) -> Fraction:
    """Total deviation of per-player position sums from the balanced value."""
    target = Fraction((method.deck_size + 1) * method.hand_size, 2)
    return sum(
        (abs(method.position_sum(p) - target) for p in range(method.players)),
        Fraction(0),
    )
