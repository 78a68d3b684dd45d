import random
from fractions import Fraction

import pytest

from shuffledeal import (
    Deck,
    DeckComposition,
    deal,
    enumerate_hand_profiles,
    leading_coefficient_arbitrary,
    leading_coefficient_ordered,
    sum_z_over_profile,
    two_type_closed_form,
)
from shuffledeal.dealing import (
    DealingMethod,
    back_and_forth_method,
    cyclic_method,
    ordered_method,
)
from shuffledeal.pair_stats import z_statistic
from shuffledeal.shuffle_oracle import distinct_arrangements


def brute_force_sum_z(comp, profile, method, x, y):
    deck = Deck.ordered(comp)
    total = 0
    for arr in distinct_arrangements(deck.cards):
        if deal(Deck(comp, arr), method) == profile:
            total += z_statistic(arr, x, y)
    return total


@pytest.mark.parametrize(
    "counts,ell,s",
    [((2, 2), 2, 2), ((1, 3), 2, 2), ((2, 2, 2), 3, 2), ((3, 2, 3), 2, 4)],
)
def test_sum_z_matches_brute_force(counts, ell, s):
    comp = DeckComposition(counts, ell, s)
    for method in (ordered_method(ell, s), cyclic_method(ell, s)):
        for profile in enumerate_hand_profiles(comp):
            for x in range(comp.num_colors):
                for y in range(comp.num_colors):
                    if x == y:
                        continue
                    assert sum_z_over_profile(
                        comp, profile, method, x, y
                    ) == brute_force_sum_z(comp, profile, method, x, y)


def test_sum_z_rejects_equal_colors():
    comp = DeckComposition((2, 2), 2, 2)
    profile = next(enumerate_hand_profiles(comp))
    with pytest.raises(ValueError):
        sum_z_over_profile(comp, profile, cyclic_method(2, 2), 0, 0)


def test_single_color_coefficient_zero():
    comp = DeckComposition((8,), 2, 4)
    assert leading_coefficient_ordered(comp, cyclic_method(2, 4)).coefficient == 0


def test_backforth_even_s_zero():
    comp = DeckComposition((5, 3), 4, 2)
    assert leading_coefficient_ordered(comp, back_and_forth_method(4, 2)).coefficient == 0


def test_arbitrary_matches_ordered_on_ordered_deck():
    comp = DeckComposition((3, 4, 5), 4, 3)
    deck = Deck.ordered(comp)
    for method in (ordered_method(4, 3), cyclic_method(4, 3)):
        assert (
            leading_coefficient_arbitrary(deck, method).coefficient
            == leading_coefficient_ordered(comp, method).coefficient
        )


def test_color_reversal_preserves_coefficient():
    comp = DeckComposition((3, 5), 2, 4)
    reversed_comp = DeckComposition((5, 3), 2, 4)
    reversed_deck = Deck(
        reversed_comp, tuple(1 - c for c in Deck.ordered(comp).cards)
    )
    method = cyclic_method(2, 4)
    assert (
        leading_coefficient_arbitrary(reversed_deck, method).coefficient
        == leading_coefficient_ordered(comp, method).coefficient
    )


def test_per_hand_terms_sum_to_zero():
    comp = DeckComposition((4, 4, 4), 3, 4)
    report = leading_coefficient_ordered(
        comp, cyclic_method(3, 4), keep_per_hand=True
    )
    assert sum(report.per_hand.values(), Fraction(0)) == 0
    total = sum((abs(v) for v in report.per_hand.values()), Fraction(0))
    n = comp.deck_size
    import math

    prefactor = Fraction(
        n * math.prod(math.factorial(p) for p in comp.color_counts),
        4 * math.factorial(n),
    )
    assert report.coefficient == prefactor * total


def test_player_relabeling_preserves_coefficient():
    comp = DeckComposition((5, 7), 4, 3)
    method = cyclic_method(4, 3)
    rotated = DealingMethod(
        4, 3, tuple((p + 2) % 4 for p in method.assignment)
    )
    assert (
        leading_coefficient_ordered(comp, rotated).coefficient
        == leading_coefficient_ordered(comp, method).coefficient
    )


@pytest.mark.parametrize("b", [1, 2, 5, 7])
def test_two_type_closed_form_matches_engine_small(b):
    cards = 8
    comp = DeckComposition((b, cards - b), 4, 2)
    for method in (ordered_method(4, 2), cyclic_method(4, 2)):
        assert (
            two_type_closed_form(b, cards, method)
            == leading_coefficient_ordered(comp, method).coefficient
        )


def test_two_type_closed_form_rejects_degenerate():
    with pytest.raises(ValueError):
        two_type_closed_form(0, 52, back_and_forth_method(4, 13))
    with pytest.raises(ValueError):
        two_type_closed_form(52, 52, back_and_forth_method(4, 13))


def test_two_type_symmetric_in_b():
    method = back_and_forth_method(4, 3)
    for b in range(1, 6):
        assert two_type_closed_form(b, 12, method) == two_type_closed_form(
            12 - b, 12, method
        )


def test_s_factor_small_sample():
    random.seed(3)
    for counts, ell, s in [((4, 4), 2, 4), ((3, 3, 3), 3, 3), ((5, 5, 10), 4, 5)]:
        comp = DeckComposition(counts, ell, s)
        co = leading_coefficient_ordered(comp, ordered_method(ell, s)).coefficient
        cc = leading_coefficient_ordered(comp, cyclic_method(ell, s)).coefficient
        cb = leading_coefficient_ordered(
            comp, back_and_forth_method(ell, s)
        ).coefficient
        assert co == s * cc
        if s % 2 == 0:
            assert cb == 0
        else:
            assert cc == s * cb
