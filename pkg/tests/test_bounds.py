import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monoap.apcount import count_mono_cyclic
from monoap.bounds import (
    claim_constant, frame_sums, lower_bound_for, m3_closed_form, verify_case2_formula,
    verify_case3_inequality, verify_frame_identities, verify_lemma1_formula,
    verify_m3_closed_form, verify_mix_identity,
)
from monoap.core import Coloring


def coloring(n):
    return st.lists(st.integers(0, 1), min_size=n, max_size=n).map(lambda b: Coloring(tuple(b)))


def test_mix_identity_all_red():
    rep = verify_mix_identity(Coloring((0,) * 9))
    assert rep.holds and rep.left == 4 * 81


@pytest.mark.parametrize("n", [10, 12, 13])
def test_mix_identity_random(rng, n):
    for _ in range(20):
        assert verify_mix_identity(Coloring(tuple(int(b) for b in rng.integers(0, 2, n))))


def test_case2_all_red():
    rep = verify_case2_formula(Coloring((0,) * 6))
    assert rep.holds
    assert rep.left[0] == 36


@pytest.mark.parametrize("n", [10, 14, 18])
def test_case2_random(rng, n):
    for _ in range(20):
        assert verify_case2_formula(Coloring(tuple(int(b) for b in rng.integers(0, 2, n))))


def test_case2_rejects_other_residues():
    with pytest.raises(ValueError):
        verify_case2_formula(Coloring((0,) * 8))


def test_m3_closed_form_examples():
    assert m3_closed_form(7, 0) == 49
    assert m3_closed_form(7, 3) == 13
    assert m3_closed_form(11, 5) == 31
    with pytest.raises(ValueError):
        m3_closed_form(9, 2)
    with pytest.raises(ValueError):
        m3_closed_form(7, 8)


def test_m3_all_three_red_sets_of_z7():
    for reds in itertools.combinations(range(7), 3):
        c = Coloring(tuple(0 if v in reds else 1 for v in range(7)))
        assert count_mono_cyclic(c, 3) == 13


def test_m3_random_z11(rng):
    for _ in range(30):
        reds = set(rng.choice(11, 5, replace=False).tolist())
        c = Coloring(tuple(0 if v in reds else 1 for v in range(11)))
        assert verify_m3_closed_form(c)


def test_lower_bounds():
    assert lower_bound_for(21, 4).value == Fraction(7, 96)
    assert lower_bound_for(22, 4).value == Fraction(7, 96)
    assert lower_bound_for(24, 4).value == Fraction(2, 33)
    assert lower_bound_for(101, 3).value == Fraction(1, 4)
    assert lower_bound_for(24, 4).note
    with pytest.raises(ValueError):
        lower_bound_for(20, 5)


def test_claim_constant():
    assert claim_constant() == Fraction(1, 12)
    assert Fraction(27, 648) == Fraction(1, 24)


def test_frame_sums_all_red():
    fs = frame_sums(Coloring((0,) * 5))
    assert fs["p"] == 2 * 25 and fs["q"] == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 30).flatmap(coloring))
def test_frame_identities(c):
    assert all(verify_frame_identities(c))


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 30).flatmap(coloring), st.integers(3, 5))
def test_pair_formula_identity(c, k):
    assert verify_lemma1_formula(c, k)


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 30).flatmap(coloring))
def test_case3_inequality(c):
    assert verify_case3_inequality(c)


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 30).flatmap(coloring))
def test_mix_identity_property(c):
    assert verify_mix_identity(c)
