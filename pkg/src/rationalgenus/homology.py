"""Lens spaces, their connected sums, and the Spin^c bookkeeping on them.

Homology classes and Spin^c structures are both stored as tuples of residues,
one residue per lens summand.  Spin^c structures are a torsor over H_1, so the
same tuple shape serves both roles; which role a tuple plays is fixed by the
function receiving it.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterator

from .errors import InconsistencyError, InputError

SpincIndex = tuple[int, ...]
HomologyClass = tuple[int, ...]

_LENS_RE = re.compile(r"^L\((-?\d+),(-?\d+)\)$")


@dataclass(frozen=True, order=True)
class LensSpace:
    """L(p, q); L(1, 1) is S^3.

    Orientation convention: L(p, q) is the oriented boundary of the
    negative-definite linear plumbing for p/q, i.e. -p/q surgery on the unknot.
    """

    p: int
    q: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise InputError(f"lens parameters must be integers, got ({self.p!r}, {self.q!r})")
        if self.p < 1:
            raise InputError(f"L(p,q) needs p >= 1, got p={self.p}")
        if self.p == 1:
            object.__setattr__(self, "q", 1)
            return
        if math.gcd(self.p, self.q) != 1:
            raise InputError(f"L({self.p},{self.q}): gcd(p,q) must be 1")
        object.__setattr__(self, "q", self.q % self.p)

    def __str__(self):
        return f"L({self.p},{self.q})"


@dataclass(frozen=True)
class Manifold:
    """Ordered connected sum of lens spaces.  The empty sum is S^3."""

    summands: tuple[LensSpace, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))

    @classmethod
    def lens(cls, p: int, q: int) -> "Manifold":
        return cls((LensSpace(p, q),))

    @classmethod
    def parse(cls, text: str) -> "Manifold":
        """Parse ``"L(p,q)#L(p,q)#..."``; ``"S3"`` or ``""`` is the empty sum."""
        text = text.replace(" ", "")
        if text in ("", "S3", "S^3"):
            return cls(())
        parts = []
        for chunk in text.split("#"):
            m = _LENS_RE.match(chunk)
            if not m:
                raise InputError(f"cannot parse lens summand {chunk!r}")
            parts.append(LensSpace(int(m.group(1)), int(m.group(2))))
        return cls(tuple(parts))

    def __str__(self):
        if not self.summands:
            return "S3"
        return "#".join(str(L) for L in self.summands)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(L.p for L in self.summands)

    @property
    def h1_order(self) -> int:
        return math.prod(self.orders)

    def connect(self, other: "Manifold") -> "Manifold":
        return Manifold(self.summands + other.summands)

    def spinc_structures(self) -> Iterator[SpincIndex]:
        """All Spin^c indices in lexicographic order."""
        return itertools.product(*(range(p) for p in self.orders))

    def check(self, t) -> tuple[int, ...]:
        """Validate a residue tuple for this manifold and return it as a tuple."""
        t = tuple(t)
        if len(t) != len(self.summands):
            raise InputError(f"{self}: expected {len(self.summands)} residues, got {len(t)}")
        for r, p in zip(t, self.orders):
            if not isinstance(r, int) or not 0 <= r < p:
                raise InputError(f"{self}: residue {r!r} out of range 0..{p - 1}")
        return t

    def reduce(self, t) -> tuple[int, ...]:
        """Reduce arbitrary integers componentwise into canonical residues."""
        t = tuple(t)
        if len(t) != len(self.summands):
            raise InputError(f"{self}: expected {len(self.summands)} residues, got {len(t)}")
        return tuple(r % p for r, p in zip(t, self.orders))


def parse_tuple(text: str) -> tuple[int, ...]:
    """Parse comma separated residues; the empty string is the empty tuple."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"cannot parse residue tuple {text!r}") from exc


def format_tuple(t) -> str:
    return ",".join(str(x) for x in t)


def order_of_class(Y: Manifold, a) -> int:
    """Additive order of a in H_1(Y)."""
    a = Y.check(a)
    order = 1
    for r, p in zip(a, Y.orders):
        order = math.lcm(order, p // math.gcd(p, r))
    return order


def negate(Y: Manifold, a) -> HomologyClass:
    return Y.reduce(-x for x in Y.check(a))


def translate(Y: Manifold, s, a) -> SpincIndex:
    """s + PD[a]: the free transitive action of H_1 on the Spin^c indices."""
    s, a = Y.check(s), Y.check(a)
    return tuple((x + y) % p for x, y, p in zip(s, a, Y.orders))


def conjugate(Y: Manifold, s) -> SpincIndex:
    """Spin^c conjugation J.

    Tied to the labelling used by the d-invariant recursion, where J acts on
    L(p, q) as i -> p + q - 1 - i (mod p).  This is affine negation, so
    J(s + a) = J(s) - a.
    """
    s = Y.check(s)
    return tuple((L.p + L.q - 1 - i) % L.p for i, L in zip(s, Y.summands))


@dataclass(frozen=True)
class Longitude:
    """Rational longitude lambda_r = p1 * lambda + q1 * mu, with k * p1 = order."""

    p1: int
    q1: int
    k: int

    @property
    def is_framing(self) -> bool:
        return self.p1 == 1


def rational_longitude(order_p: int, p1: int, q1: int) -> Longitude:
    if order_p < 1 or p1 < 1:
        raise InputError(f"order and p' must be positive, got order={order_p}, p'={p1}")
    if order_p % p1:
        raise InconsistencyError(f"p'={p1} does not divide the knot order {order_p}")
    if p1 > 1 and math.gcd(p1, q1) != 1:
        raise InputError(f"gcd(p', q') must be 1, got ({p1}, {q1})")
    return Longitude(p1, q1, order_p // p1)


@dataclass(frozen=True)
class KnotClass:
    """A torsion class in H_1 together with its order and rational longitude."""

    ambient: Manifold
    cls: HomologyClass
    order_p: int
    longitude: Longitude

    @classmethod
    def of(cls, Y: Manifold, a, longitude: Longitude | None = None) -> "KnotClass":
        """Build a knot class; the longitude defaults to the one forced by the linking form."""
        a = Y.check(a)
        order = order_of_class(Y, a)
        if longitude is None:
            # deferred import: the linking form is read off the d-invariants
            from .dinvariant import default_longitude

            longitude = default_longitude(Y, a)
        elif longitude.p1 * longitude.k != order:
            raise InconsistencyError(
                f"longitude {longitude} incompatible with class order {order}"
            )
        return cls(Y, a, order, longitude)
