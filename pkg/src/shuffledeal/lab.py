"""Method comparison experiments, dealing-sequence search, and GSR sampling."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .coefficients import CoefficientReport, leading_coefficient_ordered
from .dealing import (
    DealingMethod,
    back_and_forth_method,
    conjecture_metric,
    method_to_text,
)
from .deck import (
    Deck,
    DeckComposition,
    HandProfile,
    deal,
    enumerate_hand_profiles,
    stationary_probability,
)
from .errors import ScaleExceededError
from .shuffle_oracle import (
    DEFAULT_ORACLE_CAP,
    distinct_arrangements,
    exact_hand_variation_distance,
)

__all__ = [
    "compare_methods",
    "grid_three_types",
    "SearchResult",
    "search_dealing",
    "sample_a_shuffle",
    "sample_shuffle_mappings",
    "SimulationResult",
    "simulate_hand_distribution",
]

EXHAUSTIVE_SEARCH_CAP = 16


def compare_methods(
    comp: DeckComposition,
    methods: Sequence[DealingMethod],
    labels: Sequence[str] | None = None,
    keep_per_hand: bool = False,
) -> list[CoefficientReport]:
    """One coefficient report per method over a single shared hand enumeration."""
    if labels is None:
        labels = [method_to_text(m) for m in methods]
    profiles = list(enumerate_hand_profiles(comp))
    return [
        leading_coefficient_ordered(
            comp, m, keep_per_hand=keep_per_hand, profiles=profiles, method_label=label
        )
        for m, label in zip(methods, labels)
    ]


def grid_three_types(
    cards: int = 52,
    method: DealingMethod | None = None,
    cells: Sequence[tuple[int, int]] | None = None,
) -> list[tuple[int, int, Fraction]]:
    """Exact coefficient for three-colour compositions (b, r, g >= 1).

    By default every admissible (b, r) cell is computed; pass `cells` to
    restrict to chosen compositions (the full 52-card grid takes a while).
    """
    if cards % 4 != 0:
        raise ValueError("deck size must be divisible by four players")
    s = cards // 4
    if method is None or (method.players, method.hand_size) != (4, s):
        raise ValueError("dealing method must cover four players of this hand size")
    if cells is None:
        cells = [
            (b, r)
            for b in range(1, cards - 1)
            for r in range(1, cards - b - 1 + 1)
            if cards - b - r >= 1
        ]
    rows = []
    for b, r in cells:
        g = cards - b - r
        if b < 1 or r < 1 or g < 1:
            raise ValueError(f"inadmissible cell (b={b}, r={r}) for {cards} cards")
        comp = DeckComposition((b, r, g), 4, s)
        report = leading_coefficient_ordered(comp, method)
        rows.append((b, r, report.coefficient))
    return rows


@dataclass
class SearchResult:
    method: DealingMethod
    score: Fraction
    evaluations: int


def _objective(
    comp: DeckComposition, objective: str
) -> Callable[[DealingMethod], Fraction]:
    if objective == "coefficient":
        return lambda m: leading_coefficient_ordered(comp, m).coefficient
    if objective == "metric":
        return conjecture_metric
    raise ValueError(f"unknown objective {objective!r}")


def _random_swap(method: DealingMethod, rng: random.Random) -> DealingMethod:
    seq = list(method.assignment)
    n = len(seq)
    while True:
        t = rng.randrange(n)
        u = rng.randrange(n)
        if seq[t] != seq[u]:
            break
    seq[t], seq[u] = seq[u], seq[t]
    return DealingMethod(method.players, method.hand_size, tuple(seq))


def search_dealing(
    comp: DeckComposition,
    objective: str = "coefficient",
    strategy: str = "local",
    budget: int = 1000,
    seed: int = 0,
    initial: DealingMethod | None = None,
) -> SearchResult:
    """Search dealing sequences for a small objective value.

    Local moves swap two positions held by different players; ties break
    toward the lexicographically smaller sequence, so results are
    deterministic for a fixed seed.
    """
    score_of = _objective(comp, objective)
    start = initial if initial is not None else back_and_forth_method(
        comp.players, comp.hand_size
    )

    if strategy == "exhaustive":
        if comp.deck_size > EXHAUSTIVE_SEARCH_CAP:
            raise ScaleExceededError(
                f"exhaustive search refused: {comp.deck_size} positions > "
                f"cap {EXHAUSTIVE_SEARCH_CAP}"
            )
        best = None
        evaluations = 0
        for seq in distinct_arrangements(sorted(start.assignment)):
            cand = DealingMethod(comp.players, comp.hand_size, seq)
            key = (score_of(cand), cand.assignment)
            evaluations += 1
            if best is None or key < best:
                best = key
        return SearchResult(
            DealingMethod(comp.players, comp.hand_size, best[1]), best[0], evaluations
        )

    rng = random.Random(seed)
    current = start
    current_key = (score_of(current), current.assignment)
    best_key = current_key
    evaluations = 1

    if strategy == "local":
        for _ in range(budget):
            cand = _random_swap(current, rng)
            key = (score_of(cand), cand.assignment)
            evaluations += 1
            if key < current_key:
                current, current_key = cand, key
                if key < best_key:
                    best_key = key
    elif strategy == "anneal":
        t_hi, t_lo = 1.0, 1e-3
        for step in range(budget):
            temp = t_hi * (t_lo / t_hi) ** (step / max(budget - 1, 1))
            cand = _random_swap(current, rng)
            key = (score_of(cand), cand.assignment)
            evaluations += 1
            delta = float(key[0] - current_key[0])
            if key < current_key or rng.random() < math.exp(-delta / temp):
                current, current_key = cand, key
                if key < best_key:
                    best_key = key
    else:
        raise ValueError(f"unknown search strategy {strategy!r}")

    return SearchResult(
        DealingMethod(comp.players, comp.hand_size, best_key[1]),
        best_key[0],
        evaluations,
    )


def sample_a_shuffle(deck: Deck, a: int, seed: int) -> Deck:
    """One exact draw from the a-shuffle law via the digit-sort construction.

    The stable argsort of the digit sequence is the position mapping of a
    forward a-shuffle: the card in position i moves to position mapping[i].
    """
    if a < 1:
        raise ValueError("need a >= 1")
    rng = random.Random(seed)
    digits = [rng.randrange(a) for _ in deck.cards]
    mapping = sorted(range(len(digits)), key=digits.__getitem__)
    out = [0] * len(digits)
    for i, target in enumerate(mapping):
        out[target] = deck.cards[i]
    return Deck(deck.composition, tuple(out))


def sample_shuffle_mappings(n: int, a: int, samples: int, seed: int) -> np.ndarray:
    """(samples, n) a-shuffle position mappings: row[i] is where position i goes."""
    if a < 1:
        raise ValueError("need a >= 1")
    gen = np.random.Generator(np.random.Philox(seed))
    digits = gen.integers(0, a, size=(samples, n))
    return np.argsort(digits, axis=1, kind="stable")


@dataclass
class SimulationResult:
    counts: dict[HandProfile, int]
    samples: int
    a: int
    seed: int
    empirical_tv: Fraction
    exact_tv: Fraction | None


def simulate_hand_distribution(
    deck: Deck,
    method: DealingMethod,
    a: int,
    samples: int,
    seed: int,
    cap: int = DEFAULT_ORACLE_CAP,
) -> SimulationResult:
    """Empirical dealt-hand distribution from seeded a-shuffle sampling."""
    if samples < 1:
        raise ValueError("need at least one sample")
    comp = deck.composition
    if (method.players, method.hand_size) != (comp.players, comp.hand_size):
        raise ValueError("dealing method does not match the deck")
    n = comp.deck_size
    mappings = sample_shuffle_mappings(n, a, samples, seed)
    # scatter: the card in position i lands in position mappings[row, i]
    shuffled = np.empty_like(mappings)
    rows = np.arange(samples)[:, None]
    shuffled[rows, mappings] = np.asarray(deck.cards)[None, :]
    assign = np.asarray(method.assignment)

    # mixed-radix encode the per-sample profile so counting is one unique()
    radix = comp.hand_size + 1
    ids = np.zeros(samples, dtype=np.int64)
    base = 1
    for color in range(comp.num_colors):
        is_color = shuffled == color
        for player in range(comp.players):
            cnt = is_color[:, assign == player].sum(axis=1)
            ids += cnt.astype(np.int64) * base
            base *= radix
    uniq, freq = np.unique(ids, return_counts=True)
    by_id = dict(zip(uniq.tolist(), freq.tolist()))

    counts: dict[HandProfile, int] = {}
    empirical_tv = Fraction(0)
    for omega in enumerate_hand_profiles(comp):
        oid = 0
        base = 1
        for row in omega.counts:
            for c in row:
                oid += c * base
                base *= radix
        observed = by_id.get(oid, 0)
        if observed:
            counts[omega] = observed
        empirical_tv += abs(
            Fraction(observed, samples) - stationary_probability(comp, omega)
        )
    empirical_tv /= 2

    exact_tv = None
    if n <= cap:
        exact_tv = exact_hand_variation_distance(deck, method, a, cap)
    return SimulationResult(counts, samples, a, seed, empirical_tv, exact_tv)
