from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from shuffledeal.dealing import (
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


def first_dealt_sign(method, j, i):
    for p in method.assignment:
        if p == j:
            return 1
        if p == i:
            return -1
    raise AssertionError


def test_canonical_texts():
    assert method_to_text(ordered_method(4, 2)) == "NNEESSWW"
    assert method_to_text(cyclic_method(4, 2)) == "NESWNESW"
    assert method_to_text(back_and_forth_method(4, 2)) == "NESWWSEN"
    assert method_to_text(back_and_forth_method(4, 3)) == "NESWWSENNESW"


def test_paper_position_sums():
    expected = {
        ordered_method: (91, 260, 429, 598),
        cyclic_method: (325, 338, 351, 364),
        back_and_forth_method: (343, 344, 345, 346),
    }
    for gen, sums in expected.items():
        m = gen(4, 13)
        assert tuple(position_sum(m, p) for p in range(4)) == sums


def test_dealing_z_examples():
    m = ordered_method(4, 13)
    assert dealing_z(m, 0, 1) == 13**2
    m = cyclic_method(4, 13)
    assert dealing_z(m, 0, 1) == 13
    assert dealing_z(m, 1, 1) == 0
    even = back_and_forth_method(4, 4)
    assert all(
        dealing_z(even, j, i) == 0 for j in range(4) for i in range(4)
    )
    odd = back_and_forth_method(4, 13)
    assert all(
        abs(dealing_z(odd, j, i)) == 1 for j in range(4) for i in range(4) if i != j
    )


@pytest.mark.parametrize("ell", range(2, 7))
@pytest.mark.parametrize("s", range(1, 16))
def test_closed_forms_match_sequences(ell, s):
    methods = {
        "ordered": ordered_method(ell, s),
        "cyclic": cyclic_method(ell, s),
        "backforth": back_and_forth_method(ell, s),
    }
    expected_z = {
        "ordered": s * s,
        "cyclic": s,
        "backforth": 0 if s % 2 == 0 else 1,
    }
    for kind, m in methods.items():
        for i in range(ell):
            from_sequence = ell * s + 1 - Fraction(2 * m.position_sum(i), s)
            assert closed_form_position_term(kind, ell, s, i) == from_sequence
            for j in range(ell):
                if i == j:
                    continue
                want = expected_z[kind] * first_dealt_sign(m, j, i)
                assert dealing_z(m, j, i) == want


@st.composite
def random_methods(draw):
    ell = draw(st.integers(2, 4))
    s = draw(st.integers(1, 5))
    seq = [p for p in range(ell) for _ in range(s)]
    perm = draw(st.permutations(seq))
    return DealingMethod(ell, s, tuple(perm))


@given(random_methods())
def test_dealing_z_antisymmetric(method):
    for j in range(method.players):
        for i in range(method.players):
            assert dealing_z(method, j, i) == -dealing_z(method, i, j)


@given(random_methods())
def test_position_sums_total(method):
    n = method.deck_size
    assert sum(method.position_sum(p) for p in range(method.players)) == n * (
        n + 1
    ) // 2


@given(random_methods())
def test_metric_invariant_under_relabeling(method):
    relabeled = DealingMethod(
        method.players,
        method.hand_size,
        tuple((p + 1) % method.players for p in method.assignment),
    )
    assert conjecture_metric(relabeled) == conjecture_metric(method)


def test_conjectured_sequence_shape():
    m = conjectured_method()
    assert m.deck_size == 52
    assert sorted(m.position_sum(p) for p in range(4)) == [344, 344, 345, 345]
    assert conjecture_metric(m) == 2


def test_metric_values():
    assert conjecture_metric(back_and_forth_method(4, 13)) == 4
    assert conjecture_metric(ordered_method(4, 13)) == 676


def test_parse_round_trip():
    for spec in ("ordered", "cyclic", "backforth"):
        m = parse_method(spec, 4, 13)
        assert parse_method("seq:" + method_to_text(m), 4, 13) == m
    m = parse_method("1212", 2, 2)
    assert m.assignment == (0, 1, 0, 1)
    with pytest.raises(ValueError):
        parse_method("12321", 3, 2)
