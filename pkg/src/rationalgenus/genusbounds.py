"""Rational Seifert / slice genus bounds and the Morse-surgery reduction."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .dinvariant import d_gap, self_linking
from .errors import InputError
from .homology import KnotClass, LensSpace, Longitude, Manifold, order_of_class
from .simpleknot import gradings_via_d, seifert_genus, u_knot_class
from .vhprofile import nu_plus_max, simple_knot_profile

HALF = Fraction(1, 2)


def slam_dunk(p1: int, q1: int) -> tuple[int, int]:
    """(m, n) with q'/p' = m - n/p' and 0 <= n < p'."""
    if p1 < 1:
        raise InputError(f"p' must be positive, got {p1}")
    if p1 > 1 and math.gcd(p1, q1) != 1:
        raise InputError(f"gcd(p', q') must be 1, got ({p1}, {q1})")
    m = -(-q1 // p1)
    return m, m * p1 - q1


@dataclass(frozen=True)
class MorseReduction:
    manifold: Manifold
    cls: tuple[int, ...]
    u_class: Optional[int]
    shift: Fraction
    framed: bool
    m: int

    @property
    def order_p(self) -> int:
        return order_of_class(self.manifold, self.cls)


def morse_reduce(K: KnotClass) -> MorseReduction:
    """Replace K by K # O_{p'/n} in Y # L(p', n), whose rational longitude is a framing.

    The U-knot class is taken among the classes matching the closed-form
    gradings, preferring one for which the composite has integral
    self-linking (that is, is actually framed).
    """
    p1, q1 = K.longitude.p1, K.longitude.q1
    m, n = slam_dunk(p1, q1)
    if p1 == 1:
        return MorseReduction(K.ambient, K.cls, None, Fraction(0), True, m)
    match = u_knot_class(p1, n)
    Y2 = K.ambient.connect(Manifold((match.lens,)))
    for u in match.classes:
        cls = K.cls + (u,)
        if self_linking(Y2, cls) == 0:
            return MorseReduction(Y2, cls, u, Fraction(p1 - 1, 2 * p1), True, m)
    u = match.chosen
    return MorseReduction(Y2, K.cls + (u,), u, Fraction(p1 - 1, 2 * p1), False, m)


def seifert_bound(Y: Manifold, a) -> Fraction:
    """Lower bound (d_gap - 1) / 2 for the rational Seifert genus of any knot in class a."""
    return (d_gap(Y, a) - 1) / 2


def slice_bound(Y: Manifold, a) -> Fraction:
    """Same right-hand side, read as a bound on the rational slice genus."""
    return (d_gap(Y, a) - 1) / 2


@dataclass(frozen=True)
class Conversions:
    framing: Fraction  # (g + p - 1) / p: p boundary components
    general: Fraction  # g/p + (p'+1)/(2p') - 1/p: k = p/p' boundary components
    from_chi: Fraction  # -chi/(2p) + 1/2 with -chi = 2g - 2 + k


def genus_conversions(g: int, p: int, p1: int) -> Conversions:
    """||.||^boundary + 1/2 for a surface of genus g, order p, longitude multiplicity p'."""
    if g < 0 or p < 1 or p1 < 1:
        raise InputError(f"need g >= 0, p >= 1, p' >= 1; got ({g}, {p}, {p1})")
    if p % p1:
        raise InputError(f"p'={p1} must divide p={p}")
    k = p // p1
    framing = Fraction(g + p - 1, p)
    general = Fraction(g, p) + Fraction(p1 + 1, 2 * p1) - Fraction(1, p)
    from_chi = Fraction(2 * g - 2 + k, 2 * p) + HALF
    return Conversions(framing, general, from_chi)


def nu_slice_bound(nu) -> Fraction:
    """nu^+ - 1/2, a lower bound for the rational slice genus."""
    return Fraction(nu) - HALF


def nu_plus_of_class(Y: Manifold, a) -> Fraction:
    """nu^+ of the Floer simple knot in class a, read off its V/H staircase profile."""
    return nu_plus_max(simple_knot_profile(gradings_via_d((Y, a)))).grading


@dataclass
class BoundReport:
    manifold: str
    cls: tuple[int, ...]
    order_p: int
    longitude: Longitude
    d_gap_bound: Fraction
    seifert_bound: Fraction
    slice_bound: Fraction
    nu_bound: Fraction
    nu_slice_bound: Fraction
    seifert_value: Optional[Fraction]
    slice_value_status: str
    equality_seifert: bool
    equality_slice: bool
    reduction: dict
    trail: list = field(default_factory=list)

    def check(self) -> list[str]:
        problems = []
        if self.nu_bound < self.d_gap_bound / 2:
            problems.append("nu^+ < d_gap / 2")
        if self.seifert_value is not None and self.seifert_value + HALF < self.nu_bound:
            problems.append("||K|| + 1/2 < nu^+")
        return problems

    def to_json(self) -> dict:
        return {
            "manifold": self.manifold,
            "class": list(self.cls),
            "order_p": self.order_p,
            "longitude": {"p_prime": self.longitude.p1, "q_prime": self.longitude.q1, "k": self.longitude.k},
            "d_gap_bound": self.d_gap_bound,
            "seifert_bound": self.seifert_bound,
            "slice_bound": self.slice_bound,
            "nu_bound": self.nu_bound,
            "nu_slice_bound": self.nu_slice_bound,
            "seifert_value": self.seifert_value,
            "slice_value_status": self.slice_value_status,
            "equality_seifert": self.equality_seifert,
            "equality_slice": self.equality_slice,
            "reduction": self.reduction,
            "trail": self.trail,
        }


def bound_report(Y: Manifold, a, longitude: Longitude | None = None) -> BoundReport:
    """All bounds for class a, with the Floer simple knot in that class as witness."""
    K = KnotClass.of(Y, a, longitude)
    gap = d_gap(Y, K.cls)
    g = gradings_via_d(K)
    genus = seifert_genus(g)
    nu = nu_plus_of_class(Y, K.cls)
    sb = seifert_bound(Y, K.cls)
    red = morse_reduce(K)
    nu_reduced = nu_plus_of_class(red.manifold, red.cls)
    trail = [
        "2||K||_Y + 1 >= max_s d(Y,s) - d(Y,s+PD[K]) (rational Seifert genus bound)",
        "2||K||^bdry_{YxI} + 1 >= same right-hand side (rational slice genus bound)",
        "nu^+_s >= A(xi^0_s) = d(Y,s)/2 - d(Y,s+PD[K])/2 (middle relative Spin^c structure)",
        "nu^+ <= ||K||^bdry_{YxI} + 1/2 (nu^+ slice genus bound)",
        "(-chi(S) + p)/p = A_max - A_min for a minimal rational Seifert surface",
        f"slam-dunk: q'/p' = {red.m} - {red.reduction_n if hasattr(red, 'reduction_n') else ''}".rstrip(" -")
        if False
        else f"slam-dunk reduction to {red.manifold}, class {list(red.cls)}, grading shift {red.shift}",
        "min_F' g(F') <= min_F g(F): band sum of k copies of the U-knot disk with F",
        "nu^+(Y',K') = nu^+(Y,K) + (p'-1)/(2p')",
    ]
    equality = genus == sb
    return BoundReport(
        manifold=str(Y),
        cls=K.cls,
        order_p=K.order_p,
        longitude=K.longitude,
        d_gap_bound=gap,
        seifert_bound=sb,
        slice_bound=slice_bound(Y, K.cls),
        nu_bound=nu,
        nu_slice_bound=nu_slice_bound(nu),
        seifert_value=genus,
        slice_value_status="lower-bound-only; attained by the Floer simple knot" if equality else "lower-bound-only",
        equality_seifert=equality,
        equality_slice=equality and nu_slice_bound(nu) == sb,
        reduction={
            "manifold": str(red.manifold),
            "class": list(red.cls),
            "u_class": red.u_class,
            "shift": red.shift,
            "framed": red.framed,
            "nu_shift_verified": nu_reduced == nu + red.shift,
        },
        trail=trail,
    )
