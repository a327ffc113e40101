"""Alexander gradings and rational genus of Floer simple knots.

For a Floer simple knot each Spin^c structure carries exactly one generator,
sitting in the middle relative Spin^c structure, whose grading is
(d(s) - d(s + PD[K])) / 2.  That gives the full grading multiset without any
diagram combinatorics.  The U-knot closed form is the independent check.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .dinvariant import d_differences, d_gap, default_longitude
from .errors import InputError, InternalConsistencyError
from .homology import KnotClass, LensSpace, Manifold, order_of_class

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class SimpleKnot:
    """The simple knot K(p, q, k) in L(p, q) representing the class k."""

    ambient: LensSpace
    cls: int

    def __post_init__(self):
        if not 0 <= self.cls < self.ambient.p:
            raise InputError(f"class {self.cls} out of range for {self.ambient}")

    @classmethod
    def of(cls, p: int, q: int, k: int) -> "SimpleKnot":
        return cls(LensSpace(p, q), k % p)

    @property
    def manifold(self) -> Manifold:
        return Manifold((self.ambient,))

    @property
    def homology_class(self) -> tuple[int, ...]:
        return (self.cls,)

    @property
    def order_p(self) -> int:
        return order_of_class(self.manifold, self.homology_class)


@dataclass(frozen=True)
class GradingMultiset:
    """Alexander gradings of the middle relative Spin^c structures, keyed by s."""

    entries: dict = field(default_factory=dict)

    @property
    def values(self) -> list[Fraction]:
        return sorted(self.entries.values())

    @property
    def a_max(self) -> Fraction:
        return max(self.entries.values())

    @property
    def a_min(self) -> Fraction:
        return min(self.entries.values())

    @property
    def width(self) -> Fraction:
        return self.a_max - self.a_min

    def multiset(self) -> Counter:
        return Counter(self.entries.values())

    def is_symmetric(self) -> bool:
        c = self.multiset()
        return c == Counter({-v: m for v, m in c.items()})

    def parity_violations(self, order_p: int, boundary_components: int) -> list:
        """Entries where 2pA is not an integer congruent to p + k mod 2.

        <c_1(xi), [S]> has the parity of the number k of boundary components
        of a rational Seifert surface, and 2pA = <c_1, [S]> + p.
        """
        bad = []
        for s, a in self.entries.items():
            v = 2 * order_p * a
            if v.denominator != 1 or (v.numerator - order_p - boundary_components) % 2:
                bad.append(s)
        return bad

    def literal_parity_violations(self, order_p: int) -> list:
        """Entries where 2pA fails to be an integer of the same parity as p."""
        bad = []
        for s, a in self.entries.items():
            v = 2 * order_p * a
            if v.denominator != 1 or (v.numerator - order_p) % 2:
                bad.append(s)
        return bad


def _ambient_and_class(K) -> tuple[Manifold, tuple[int, ...]]:
    if isinstance(K, SimpleKnot):
        return K.manifold, K.homology_class
    if isinstance(K, KnotClass):
        return K.ambient, K.cls
    Y, a = K
    return Y, Y.check(a)


def gradings_via_d(K) -> GradingMultiset:
    """Grading multiset of a Floer simple knot from correction terms.

    K may be a SimpleKnot, a KnotClass, or a (Manifold, class) pair; in a
    connected sum of lens spaces the connected sum of simple knots is again
    Floer simple.
    """
    Y, a = _ambient_and_class(K)
    return GradingMultiset({s: HALF * diff for s, diff in d_differences(Y, a).items()})


def u_knot_gradings(p1: int, n: int) -> GradingMultiset:
    """Closed form for the U-knot O_{p'/n} in L(p', n): {(2j - (p'-1)) / (2p')}."""
    if p1 < 1:
        raise InputError(f"p' must be positive, got {p1}")
    if math.gcd(p1, n) != 1:
        raise InputError(f"U-knot needs gcd(p', n) = 1, got ({p1}, {n})")
    return GradingMultiset({(j,): Fraction(2 * j - (p1 - 1), 2 * p1) for j in range(p1)})


@dataclass(frozen=True)
class UKnotMatch:
    lens: LensSpace
    classes: tuple[int, ...]

    @property
    def chosen(self) -> int:
        return self.classes[0]


@lru_cache(maxsize=None)
def u_knot_class(p1: int, n: int) -> UKnotMatch:
    """Classes of L(p', n) whose d-route gradings equal the U-knot closed form.

    The smallest match is the recorded U-knot class.  Raises if nothing matches.
    """
    L = LensSpace(p1, n)
    target = u_knot_gradings(p1, n).multiset()
    Y = Manifold((L,))
    found = tuple(a for a in range(L.p) if gradings_via_d((Y, (a,))).multiset() == target)
    if not found:
        raise InternalConsistencyError(f"no class of {L} reproduces the U-knot gradings")
    return UKnotMatch(L, found)


def seifert_genus(K) -> Fraction:
    """Rational Seifert genus ||K|| = (A_max - A_min - 1) / 2 of a Floer simple knot."""
    g = gradings_via_d(K) if not isinstance(K, GradingMultiset) else K
    return (g.width - 1) / 2


def boundary_components(K) -> int:
    """k = p / p': components of the boundary of a rational Seifert surface."""
    Y, a = _ambient_and_class(K)
    return default_longitude(Y, a).k


@dataclass(frozen=True)
class ThetaRow:
    cls: int
    theta: Fraction
    d_gap: Fraction
    a_max: Fraction
    parity_ok: bool
    symmetry_ok: bool


def theta(Y: LensSpace, a: int) -> Fraction:
    """Turaev function Theta(a) = 2 ||K(p,q,a)||, cross-checked against d_gap - 1."""
    return theta_row(Y, a).theta


def theta_row(Y: LensSpace, a: int) -> ThetaRow:
    K = SimpleKnot(Y, a % Y.p)
    g = gradings_via_d(K)
    via_genus = 2 * seifert_genus(g)
    gap = d_gap(K.manifold, K.homology_class)
    if via_genus != gap - 1:
        raise InternalConsistencyError(
            f"Theta mismatch on {Y}, class {a}: 2||K|| = {via_genus}, d_gap - 1 = {gap - 1}"
        )
    order = K.order_p
    parity_ok = not g.parity_violations(order, boundary_components(K))
    symmetry_ok = g.is_symmetric() and g.a_min == -g.a_max
    return ThetaRow(K.cls, via_genus, gap, g.a_max, parity_ok, symmetry_ok)
