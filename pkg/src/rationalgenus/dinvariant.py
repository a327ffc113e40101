"""Heegaard Floer correction terms of lens spaces and their connected sums.

Values come from the Ozsvath-Szabo recursion

    d(L(p,q), i) = (pq - (2i + 1 - p - q)^2) / (4pq) - d(L(q, r), j),

with r = p mod q and j = i mod q.  In this orientation L(p, q) bounds the
negative-definite linear plumbing, so the recursion agrees on the nose with
the lattice maximization in :mod:`rationalgenus.lattice`.  The recursion's
native index i in 0..p-1 *is* the Spin^c label used everywhere else; this
module is the single place that identification is made.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import InputError
from .homology import (
    KnotClass,
    LensSpace,
    Longitude,
    Manifold,
    conjugate,
    order_of_class,
    translate,
)


@lru_cache(maxsize=None)
def _d_lens(p: int, q: int, i: int) -> Fraction:
    if p == 1:
        return Fraction(0)
    q %= p
    return Fraction(p * q - (2 * i + 1 - p - q) ** 2, 4 * p * q) - _d_lens(q, p % q, i % q)


def d_lens(p: int, q: int, i: int) -> Fraction:
    """Correction term d(L(p,q), i) for 0 <= i < p."""
    if p < 1 or math.gcd(p, q) != 1:
        raise InputError(f"d_lens: need p >= 1 and gcd(p,q) = 1, got ({p}, {q})")
    if not 0 <= i < p:
        raise InputError(f"d_lens: index {i} out of range 0..{p - 1}")
    return _d_lens(p, q % p if p > 1 else 1, i)


def d(Y: Manifold, s) -> Fraction:
    """d(Y, s), additive over connected summands."""
    s = Y.check(s)
    return sum((_d_lens(L.p, L.q, i) for L, i in zip(Y.summands, s)), Fraction(0))


def d_values(Y: Manifold) -> dict[tuple[int, ...], Fraction]:
    return {s: d(Y, s) for s in Y.spinc_structures()}


def _cls(Y: Manifold, a):
    if isinstance(a, KnotClass):
        if a.ambient != Y:
            raise InputError(f"knot class lives in {a.ambient}, not {Y}")
        return a.cls
    return Y.check(a)


def d_differences(Y: Manifold, a) -> dict[tuple[int, ...], Fraction]:
    """s -> d(Y, s) - d(Y, s + PD[a])."""
    a = _cls(Y, a)
    table = d_values(Y)
    return {s: v - table[translate(Y, s, a)] for s, v in table.items()}


def d_gap(Y: Manifold, a) -> Fraction:
    """max over s of d(Y, s) - d(Y, s + PD[a])."""
    return max(d_differences(Y, a).values())


def check_conjugation_symmetry(Y: Manifold) -> list[tuple[int, ...]]:
    """Spin^c structures where d(Y, s) != d(Y, Js); empty when the convention is right."""
    return [s for s in Y.spinc_structures() if d(Y, s) != d(Y, conjugate(Y, s))]


def self_linking(Y: Manifold, a) -> Fraction:
    """Linking form value lk(a, a) in [0, 1), up to a global orientation sign.

    Read off the correction terms: for any bounding lattice the characteristic
    representatives c, c + 2x, c + 4x of s, s + a, s + 2a have second difference
    of squares 8 x.x, and d is (c.c + n) / 4 mod 2, so the second difference of
    d is 2 x.x mod 2 while x.x = -lk(a, a) mod 1.
    """
    a = _cls(Y, a)
    s = next(iter(Y.spinc_structures()))
    s1 = translate(Y, s, a)
    s2 = translate(Y, s1, a)
    second = d(Y, s2) - 2 * d(Y, s1) + d(Y, s)
    return (second / 2) % 1


def default_longitude(Y: Manifold, a) -> Longitude:
    """Rational longitude data forced by the homology class.

    p' is the denominator of lk(a, a).  q' is only determined mod p' (it moves
    with the reference framing); the representative returned is the one whose
    slam-dunk lens summand L(p', n) makes K # O_{p'/n} framed when O_{p'/n} is
    recorded as the class 1 (see :func:`rationalgenus.genusbounds.morse_reduce`).
    """
    a = _cls(Y, a)
    order = order_of_class(Y, a)
    lk = self_linking(Y, a)
    p1 = lk.denominator
    if p1 == 1:
        return Longitude(1, 0, order)
    n = pow(lk.numerator, -1, p1)
    return Longitude(p1, p1 - n, order // p1)


def lens_multiset(L: LensSpace) -> list[Fraction]:
    return sorted(_d_lens(L.p, L.q, i) for i in range(L.p))
