from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from rationalgenus.homology import Manifold
from rationalgenus.dinvariant import d, translate
from rationalgenus.simpleknot import gradings_via_d
from rationalgenus.vhprofile import (
    Column, Label, ProfileViolation, VHProfile, classify_column, conjugate_labels,
    conjugate_profile, label_of, labels_str, law_failures, middle_structure, nu_plus,
    nu_plus_max, profile_from_json, profile_to_json, random_profile, simple_knot_profile,
    validate_profile,
)

EXAMPLE = VHProfile({(0,): Column(F(0), -2, (2, 1, 1, 0, 0), (0, 0, 1, 1, 2))})
ZERO = VHProfile({(0,): Column(F(1, 3), 0, (0,), (0,))})


def test_labels():
    assert [label_of(0, 0), label_of(0, 2), label_of(3, 0), label_of(1, 1)] == [
        Label.CIRCLE, Label.PLUS, Label.MINUS, Label.STAR]
    assert labels_str(conjugate_labels([Label.PLUS, Label.CIRCLE, Label.MINUS])) == "+o-"


def test_example_profile():
    assert validate_profile(EXAMPLE) is None
    mid = middle_structure(EXAMPLE, (0,))
    assert mid.grading == 0 and mid.offset == 0
    assert nu_plus(EXAMPLE, (0,)) == 1
    assert classify_column(EXAMPLE, (0,)) == "ii"
    assert labels_str(EXAMPLE.column((0,)).labels()) == "--*++"


def test_zero_profile():
    assert middle_structure(ZERO, (0,)).grading == F(1, 3)
    assert nu_plus(ZERO, (0,)) == F(1, 3)
    assert classify_column(ZERO, (0,)) == "i"
    assert conjugate_profile(VHProfile({(0,): Column(F(0), 0, (0,), (0,))})) == \
        VHProfile({(0,): Column(F(0), 0, (0,), (0,))})


@pytest.mark.parametrize("V, H, law", [
    ((2, 0, 0), (0, 1, 2), "V monotonicity"),
    ((0, 0, 0), (0, 1, 3), "H monotonicity"),
    ((2, 1, 0), (0, 0, 1), "V-H difference"),  # V-H steps -1 then -2
])
def test_violations(V, H, law):
    v = validate_profile(VHProfile({(0,): Column(F(0), 0, V, H)}))
    assert v is not None and law in v.law
    with pytest.raises(ProfileViolation):
        classify_column(VHProfile({(0,): Column(F(0), 0, V, H)}), (0,))


def test_tail_violation():
    # V must vanish above the window
    v = validate_profile(VHProfile({(0,): Column(F(0), 0, (2, 2), (0, 1))}))
    assert v is not None


def test_random_profiles_pass_all_laws():
    for seed in range(2000):
        P = random_profile(seed)
        assert law_failures(P) == [], seed


def test_validate_iff_conjugate_validates():
    bad = VHProfile({(0,): Column(F(0), 0, (2, 0, 0), (0, 1, 2))})
    assert validate_profile(bad) is not None
    assert validate_profile(conjugate_profile(bad)) is not None


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=0, max_size=10), st.integers(-5, 5), st.integers(-20, 20))
def test_hypothesis_staircases(steps, lo, num):
    V = [0]
    for s in reversed(steps):
        V.insert(0, V[0] + s)
    H = [V[j] - V[0] + j for j in range(len(V))]
    P = VHProfile({(0,): Column(F(num, 3), lo, tuple(V), tuple(H))})
    assert law_failures(P) == []


def test_json_roundtrip():
    for seed in range(50):
        P = random_profile(seed)
        assert profile_from_json(profile_to_json(P)) == P


def test_simple_knot_profile_middle_matches_d():
    Y = Manifold.lens(7, 3)
    for a in range(7):
        g = gradings_via_d((Y, (a,)))
        P = simple_knot_profile(g)
        for s in Y.spinc_structures():
            expected = (d(Y, s) - d(Y, translate(Y, s, (a,)))) / 2
            assert middle_structure(P, s).grading == expected
            assert nu_plus(P, s) == expected
        assert nu_plus_max(P).grading == g.a_max


def test_nu_plus_max_tie_breaks_to_smallest_base():
    P = VHProfile({(1,): Column(F(0), 0, (0,), (0,)), (0,): Column(F(0), 0, (0,), (0,))})
    assert nu_plus_max(P).base == (0,)
