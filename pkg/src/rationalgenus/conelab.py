"""Circular mapping cones for rational-longitude surgery.

A cone of length p has cells A_0 .. A_{p-1} and B_0 .. B_{p-1}, each a copy
of the tower F[[U]].  The map D sends A_i to B_i by U^{V_i} (the v map) and
to B_{i+1 mod p} by U^{H_i} (the h map).  Going clockwise means increasing i.

Two ways to decide whether D is onto: the interval patterns on the Rasmussen
labels (one-directional, they only ever certify non-surjectivity) and a
truncated-module oracle doing linear algebra over F_2.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InputError, TruncationError
from .vhprofile import Label, label_of, labels_str

BAD_INTERVALS = {
    (Label.STAR, Label.STAR),
    (Label.PLUS, Label.MINUS),
    (Label.PLUS, Label.STAR),
    (Label.STAR, Label.MINUS),
}


@dataclass(frozen=True)
class CircularCone:
    cells: tuple[tuple[int, int], ...]
    a_cone: Fraction = Fraction(0)

    def __post_init__(self):
        cells = tuple((int(v), int(h)) for v, h in self.cells)
        if not cells:
            raise InputError("a circular cone needs at least one cell")
        if any(v < 0 or h < 0 for v, h in cells):
            raise InputError("V and H must be non-negative")
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "a_cone", Fraction(self.a_cone))

    @classmethod
    def from_labels(cls, labels: str, a_cone=0) -> "CircularCone":
        """Cone with unit V/H wherever the label demands a positive value."""
        table = {"o": (0, 0), "+": (0, 1), "-": (1, 0), "*": (1, 1)}
        return cls(tuple(table[c] for c in labels), Fraction(a_cone))

    @property
    def length(self) -> int:
        return len(self.cells)

    @property
    def labels(self) -> list[Label]:
        return [label_of(v, h) for v, h in self.cells]

    def to_json(self) -> dict:
        from .serialize import frac_str

        return {"length": self.length, "cells": [list(c) for c in self.cells], "A": frac_str(self.a_cone)}

    @classmethod
    def from_json(cls, data: dict) -> "CircularCone":
        from .serialize import parse_frac

        try:
            cone = cls(tuple(tuple(c) for c in data["cells"]), parse_frac(data.get("A", "0")))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed cone JSON: {exc}") from exc
        if "length" in data and data["length"] != cone.length:
            raise InputError(f"cone length {data['length']} != {cone.length} cells")
        return cone


@dataclass(frozen=True)
class Interval:
    """Positions (0-based, clockwise) of the two endpoints; all cells strictly between are circles."""

    start: int
    end: int
    kind: tuple[Label, Label]

    def __str__(self):
        return f"[{self.kind[0].value},{self.kind[1].value}]@({self.start},{self.end})"


def find_nonsurjective_interval(C: CircularCone) -> Optional[Interval]:
    """First interval of type [*,*], [+,-], [+,*] or [*,-], scanning start positions."""
    labels = C.labels
    p = len(labels)
    for i, left in enumerate(labels):
        if left is Label.CIRCLE:
            continue
        j = next((i + s) % p for s in range(1, p + 1) if labels[(i + s) % p] is not Label.CIRCLE)
        # j == i when every other cell is a circle: a self-interval
        kind = (left, labels[j])
        if kind in BAD_INTERVALS:
            return Interval(i, j, kind)
    return None


def star_nonsurjective(C: CircularCone) -> bool:
    return any(x is Label.STAR for x in C.labels)


@dataclass(frozen=True)
class SurjectivityVerdict:
    surjective: bool
    method: str
    witness: Optional[dict] = None
    depth: Optional[int] = None

    @property
    def verdict(self) -> str:
        return "surjective" if self.surjective else "not-surjective"


def pattern_verdict(C: CircularCone) -> Optional[SurjectivityVerdict]:
    """Non-surjectivity certified by a bad interval; None when the patterns make no claim."""
    iv = find_nonsurjective_interval(C)
    if iv is None:
        return None
    # the uncovered element is the tower generator under the right endpoint
    return SurjectivityVerdict(False, "pattern", {"interval": str(iv), "cell": iv.end, "degree": 0})


def minimum_depth(C: CircularCone) -> int:
    return sum(v for v, _ in C.cells) + sum(h for _, h in C.cells) + 2


def _image_vectors(C: CircularCone, depth: int, target: int):
    p = C.length
    for i, (v, h) in enumerate(C.cells):
        j = (i + 1) % p
        for deg in range(depth):
            vec = 0
            if deg + v < target:
                vec ^= 1 << ((deg + v) * p + i)
            if deg + h < target:
                vec ^= 1 << ((deg + h) * p + j)
            if vec:
                yield vec


def _reduce(vec: int, pivots: dict[int, int]) -> int:
    while vec:
        top = vec.bit_length() - 1
        piv = pivots.get(top)
        if piv is None:
            return vec
        vec ^= piv
    return 0


def oracle_surjective(C: CircularCone, depth: int | None = None) -> SurjectivityVerdict:
    """Decide surjectivity of D with towers truncated to U-degree < depth.

    Surjectivity is tested onto the degree < depth - max(V, H) part of the
    target, which the truncated domain sees completely.  Refuses depths at or
    below sum(V) + sum(H) + 1.
    """
    if depth is None:
        depth = minimum_depth(C)
    bound = sum(v for v, _ in C.cells) + sum(h for _, h in C.cells) + 1
    if depth <= bound:
        raise TruncationError(f"depth {depth} too shallow; need > {bound}")
    p = C.length
    target = depth - max(max(c) for c in C.cells)
    pivots: dict[int, int] = {}
    for vec in _image_vectors(C, depth, target):
        r = _reduce(vec, pivots)
        if r:
            pivots[r.bit_length() - 1] = r
    if len(pivots) == p * target:
        return SurjectivityVerdict(True, "oracle", depth=depth)
    for deg in range(target):
        for cell in range(p):
            if _reduce(1 << (deg * p + cell), pivots):
                return SurjectivityVerdict(False, "oracle", {"cell": cell, "degree": deg}, depth)
    raise AssertionError("rank deficient but every unit vector is covered")


@dataclass(frozen=True)
class GateResult:
    status: str  # "consistent" | "contradiction"
    reason: str


def adjunction_gate(C: CircularCone, genus_g: int, depth: int | None = None) -> GateResult:
    """Adjunction constraint: A_cone >= g/p forces D onto.

    A non-surjective cone with A_cone >= g/p is a contradiction, i.e. every
    slice surface capping this cone has g > p * A_cone.
    """
    if genus_g < 0:
        raise InputError(f"genus must be non-negative, got {genus_g}")
    p = C.length
    if C.a_cone < Fraction(genus_g, p):
        return GateResult("consistent", f"A_cone = {C.a_cone} < g/p = {Fraction(genus_g, p)}")
    pv = pattern_verdict(C)
    verdict = pv if pv is not None else oracle_surjective(C, depth)
    if verdict.surjective:
        return GateResult("consistent", "cone is surjective")
    return GateResult(
        "contradiction",
        f"non-surjective ({verdict.method}) with A_cone = {C.a_cone} >= g/p; requires g > {p * C.a_cone}",
    )


def random_cone(rng: random.Random, max_len: int = 12, max_vh: int = 5) -> CircularCone:
    """Random cone; each V, H is 0 half the time so every label shows up often."""

    def value():
        return 0 if rng.random() < 0.5 else rng.randint(1, max_vh)

    length = rng.randint(1, max_len)
    a = Fraction(rng.randint(-6, 6), length)
    return CircularCone(tuple((value(), value()) for _ in range(length)), a)


def random_cones(seed: int, count: int, max_len: int = 12, max_vh: int = 5) -> list[CircularCone]:
    rng = random.Random(seed)
    return [random_cone(rng, max_len, max_vh) for _ in range(count)]


def describe(C: CircularCone) -> str:
    return labels_str(C.labels)
