"""Exact randomness analysis of shuffled-and-dealt decks with repeated cards."""

from .dealing import (
    DealingMethod,
    back_and_forth_method,
    closed_form_position_term,
    conjecture_metric,
    conjectured_method,
    cyclic_method,
    dealing_z,
    method_to_text,
    ordered_method,
    parse_method,
    position_sum,
)
from .deck import (
    Deck,
    DeckComposition,
    HandProfile,
    count_decks_for_profile,
    deal,
    enumerate_hand_profiles,
    stationary_probability,
)
from .errors import ScaleExceededError
from .pair_stats import w_statistic, z_positional, z_statistic
from .shuffle_oracle import (
    DEFAULT_ORACLE_CAP,
    bayer_diaconis_prob,
    c1_formula,
    descents,
    exact_hand_variation_distance,
    first_order_coefficient_oracle,
    oracle_leading_coefficient,
    transition_probability,
)
from .coefficients import (
    CoefficientReport,
    leading_coefficient_arbitrary,
    leading_coefficient_ordered,
    sum_z_over_profile,
    two_type_closed_form,
)
from .lab import (
    SearchResult,
    SimulationResult,
    compare_methods,
    grid_three_types,
    sample_a_shuffle,
    search_dealing,
    simulate_hand_distribution,
)

__version__ = "0.1.0"
