import math
from collections import Counter
from fractions import Fraction as F

import pytest

from rationalgenus.dinvariant import (
    check_conjugation_symmetry, d, d_gap, d_lens, d_values, lens_multiset, self_linking,
)
from rationalgenus.errors import InputError
from rationalgenus.homology import LensSpace, Manifold, negate
from rationalgenus.lattice import (
    disk_bundle_d_values, hj_continued_fraction, lattice_d_values, lens_d_values,
)

from test_homology import small_manifolds


def coprime(pmax, pmin=2):
    return [(p, q) for p in range(pmin, pmax + 1) for q in range(1, p) if math.gcd(p, q) == 1]


def test_base_case_and_small_examples():
    assert d_lens(1, 1, 0) == 0
    assert d(Manifold(()), ()) == 0
    assert Counter(d_lens(2, 1, i) for i in range(2)) == Counter({F(1, 4): 1, F(-1, 4): 1})
    vals = [d_lens(3, 1, i) for i in range(3)]
    assert max(vals) - min(vals) == F(2, 3)
    with pytest.raises(InputError):
        d_lens(4, 2, 0)


def test_connected_sum_additivity():
    Y = Manifold.parse("L(2,1)#L(2,1)")
    assert Counter(d_values(Y).values()) == Counter({F(1, 2): 1, F(0): 2, F(-1, 2): 1})


def test_disk_bundle_oracle_matches_recursion_for_lp1():
    for p in range(1, 21):
        assert sorted(disk_bundle_d_values(p)) == lens_multiset(LensSpace(p, 1))


def test_disk_bundle_oracle_pinned_values():
    # (p - (2i - p)^2) / (4p) for the negative definite (-p)-framed disk bundle
    assert sorted(disk_bundle_d_values(2)) == [F(-1, 4), F(1, 4)]
    assert sorted(disk_bundle_d_values(3)) == [F(-1, 2), F(1, 6), F(1, 6)]


def test_continued_fraction():
    assert hj_continued_fraction(7, 2) == [4, 2]
    assert hj_continued_fraction(5, 1) == [5]
    assert hj_continued_fraction(13, 5) == [3, 3, 2]


def test_linear_plumbing_oracle_matches_recursion_general_q():
    checked = 0
    for p, q in coprime(24):
        box = math.prod(2 * a + 1 for a in hj_continued_fraction(p, q))
        if box > 5000:
            continue
        assert sorted(lens_d_values(p, q)) == lens_multiset(LensSpace(p, q)), (p, q)
        checked += 1
    assert checked > 100


def test_plumbing_values_with_explicit_weights():
    # (-2)-(-2) chain is L(3,2)
    assert sorted(lattice_d_values([2, 2])) == lens_multiset(LensSpace(3, 2))


def test_conjugation_symmetry():
    for p, q in coprime(20):
        assert check_conjugation_symmetry(Manifold.lens(p, q)) == []
    for Y in small_manifolds(60):
        assert check_conjugation_symmetry(Y) == []


def test_denominators_divide_4_h1():
    for Y in small_manifolds(60):
        for v in d_values(Y).values():
            assert (4 * Y.h1_order * v).denominator == 1


def test_d_gap_examples_and_symmetry():
    assert d_gap(Manifold.lens(2, 1), (1,)) == F(1, 2)
    for Y in small_manifolds(40):
        for a in Y.spinc_structures():
            if not any(a):
                assert d_gap(Y, a) == 0
            g = d_gap(Y, a)
            assert g >= 0
            assert g == d_gap(Y, negate(Y, a))


def test_self_linking_lens():
    # lk(a, a) = +-q* a^2 / p with q q* = 1 mod p; only the denominator is convention free
    for p, q in coprime(20):
        Y = Manifold.lens(p, q)
        for a in range(p):
            lk = self_linking(Y, (a,))
            assert lk.denominator == p // math.gcd(p, a * a)
