"""V/H profiles over relative Spin^c structures and Rasmussen labels.

A profile stores, for each underlying Spin^c structure (its *base*), a finite
window of consecutive PD[mu] offsets with their (V, H) values.  Outside the
window the values are forced: above it V = 0 and H grows by one per step,
below it H = 0 and V grows by one per step going down.  The Alexander grading
of offset o is a0 + o, with a0 supplied by whoever builds the profile.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .errors import InputError


class Label(str, enum.Enum):
    CIRCLE = "o"
    PLUS = "+"
    MINUS = "-"
    STAR = "*"


_SWAP = {Label.CIRCLE: Label.CIRCLE, Label.STAR: Label.STAR, Label.PLUS: Label.MINUS, Label.MINUS: Label.PLUS}


def label_of(V: int, H: int) -> Label:
    if V == 0:
        return Label.CIRCLE if H == 0 else Label.PLUS
    return Label.MINUS if H == 0 else Label.STAR


def conjugate_labels(labels) -> list[Label]:
    """Labels of the conjugate structures, listed in ascending grading."""
    return [_SWAP[Label(x)] for x in reversed(list(labels))]


def labels_str(labels) -> str:
    return "".join(Label(x).value for x in labels)


@dataclass(frozen=True)
class Column:
    """One base: offsets lo .. lo + len(V) - 1 with their V and H values."""

    a0: Fraction
    lo: int
    V: tuple[int, ...]
    H: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a0", Fraction(self.a0))
        object.__setattr__(self, "V", tuple(self.V))
        object.__setattr__(self, "H", tuple(self.H))
        if len(self.V) != len(self.H) or not self.V:
            raise InputError("column needs equally long, non-empty V and H")

    @property
    def hi(self) -> int:
        return self.lo + len(self.V) - 1

    @property
    def offsets(self) -> range:
        return range(self.lo, self.hi + 1)

    def grading(self, offset: int) -> Fraction:
        return self.a0 + offset

    def v_at(self, o: int) -> int:
        if o > self.hi:
            return 0
        if o < self.lo:
            return self.V[0] - self.H[0] + (self.lo - o)
        return self.V[o - self.lo]

    def h_at(self, o: int) -> int:
        if o < self.lo:
            return 0
        if o > self.hi:
            return self.H[-1] - self.V[-1] + (o - self.hi)
        return self.H[o - self.lo]

    def labels(self, lo: int | None = None, hi: int | None = None) -> list[Label]:
        lo = self.lo if lo is None else lo
        hi = self.hi if hi is None else hi
        return [label_of(self.v_at(o), self.h_at(o)) for o in range(lo, hi + 1)]


@dataclass(frozen=True)
class VHProfile:
    columns: dict = field(default_factory=dict)

    def bases(self) -> list:
        return sorted(self.columns)

    def column(self, base) -> Column:
        try:
            return self.columns[tuple(base)]
        except KeyError:
            raise InputError(f"profile has no base {base!r}") from None


@dataclass(frozen=True)
class RelSpincIndex:
    base: tuple
    offset: int
    grading: Fraction


@dataclass(frozen=True)
class Violation:
    base: tuple
    offset: int
    law: str
    detail: str


class ProfileViolation(InputError):
    def __init__(self, violation: Violation):
        super().__init__(f"{violation.law} at base {violation.base}, offset {violation.offset}: {violation.detail}")
        self.violation = violation


def _column_violation(base, col: Column) -> Optional[Violation]:
    # one forced tail step on each side
    lo, hi = col.lo - 1, col.hi + 1
    for v, h, o in zip(col.V, col.H, col.offsets):
        if v < 0 or h < 0:
            return Violation(base, o, "non-negativity", f"V={v}, H={h}")
    if col.V[-1] > 1:
        return Violation(base, col.hi, "upper tail", f"V={col.V[-1]} cannot drop to the V=0 tail")
    if col.H[0] > 1:
        return Violation(base, col.lo, "lower tail", f"H={col.H[0]} cannot drop to the H=0 tail")
    for o in range(lo, hi):
        v0, v1 = col.v_at(o), col.v_at(o + 1)
        h0, h1 = col.h_at(o), col.h_at(o + 1)
        if not v0 >= v1 >= v0 - 1:
            return Violation(base, o, "V monotonicity", f"V steps {v0} -> {v1}")
        if not h0 <= h1 <= h0 + 1:
            return Violation(base, o, "H monotonicity", f"H steps {h0} -> {h1}")
        if (v1 - h1) - (v0 - h0) != -1:
            return Violation(base, o, "V-H difference", f"V-H steps {v0 - h0} -> {v1 - h1}")
    return None


def validate_profile(P: VHProfile) -> Optional[Violation]:
    """First violated law, scanning bases in order and offsets upward; None if valid."""
    for base in P.bases():
        v = _column_violation(base, P.columns[base])
        if v is not None:
            return v
    return None


def _require_valid(P: VHProfile, base) -> Column:
    col = P.column(base)
    v = _column_violation(tuple(base), col)
    if v is not None:
        raise ProfileViolation(v)
    return col


def middle_structure(P: VHProfile, base) -> RelSpincIndex:
    """The unique offset with V = H."""
    col = _require_valid(P, base)
    # V - H is strictly decreasing by one, so it hits 0 exactly once
    o = col.lo + (col.V[0] - col.H[0])
    assert col.v_at(o) == col.h_at(o)
    return RelSpincIndex(tuple(base), o, col.grading(o))


def nu_plus_witness(P: VHProfile, base) -> RelSpincIndex:
    col = _require_valid(P, base)
    # the lower tail can hold a V = 0 entry one step below the window when H[lo] = 1
    o = next(o for o in range(col.lo - 1, col.hi + 2) if col.v_at(o) == 0)
    return RelSpincIndex(tuple(base), o, col.grading(o))


def nu_plus(P: VHProfile, base) -> Fraction:
    """Least grading in the base with V = 0."""
    return nu_plus_witness(P, base).grading


def nu_plus_max(P: VHProfile) -> RelSpincIndex:
    """Overall nu^+ with its witness; ties go to the smallest base."""
    best = None
    for base in P.bases():
        w = nu_plus_witness(P, base)
        if best is None or w.grading > best.grading:
            best = w
    if best is None:
        raise InputError("empty profile")
    return best


def classify_column(P: VHProfile, base) -> str:
    """'i' (a single circle, no stars) or 'ii' (one contiguous block of stars, no circle)."""
    col = _require_valid(P, base)
    labels = col.labels(col.lo - 1, col.hi + 1)
    circles = [i for i, x in enumerate(labels) if x is Label.CIRCLE]
    stars = [i for i, x in enumerate(labels) if x is Label.STAR]
    if len(circles) == 1 and not stars:
        return "i"
    if stars and not circles and stars == list(range(stars[0], stars[-1] + 1)):
        return "ii"
    raise ProfileViolation(Violation(tuple(base), col.lo, "type classification", labels_str(labels)))


def conjugate_column(col: Column) -> Column:
    """xi -> J~xi: grading negates, V and H swap, order reverses."""
    return Column(-col.a0, -col.hi, tuple(reversed(col.H)), tuple(reversed(col.V)))


def conjugate_profile(P: VHProfile, base_map: Callable | None = None) -> VHProfile:
    """Mirror profile.  base_map sends s to the base of J~xi (J s - PD[K]); identity if omitted."""
    out = {}
    for base, col in P.columns.items():
        nb = tuple(base_map(base)) if base_map else base
        out[nb] = conjugate_column(col)
    return VHProfile(out)


def random_column(rng: random.Random, max_len: int = 8, a0: Fraction = Fraction(0)) -> Column:
    """A random valid column: V descends to 0 by steps of 0 or 1, H is then forced."""
    length = rng.randint(1, max_len)
    V = [0] * length
    for j in range(length - 2, -1, -1):
        V[j] = V[j + 1] + rng.randint(0, 1)
    H = [V[j] - V[0] + j for j in range(length)]
    return Column(a0, rng.randint(-4, 4), tuple(V), tuple(H))


def random_profile(seed: int, n_bases: int = 3, max_len: int = 8) -> VHProfile:
    rng = random.Random(seed)
    cols = {}
    for b in range(rng.randint(1, n_bases)):
        a0 = Fraction(rng.randint(-12, 12), rng.randint(1, 6))
        cols[(b,)] = random_column(rng, max_len, a0)
    return VHProfile(cols)


def simple_knot_profile(gradings) -> VHProfile:
    """Staircase profile of a Floer simple knot: one circle at each middle grading."""
    return VHProfile({tuple(s): Column(a, -1, (1, 0, 0), (0, 0, 1)) for s, a in gradings.entries.items()})


def profile_to_json(P: VHProfile) -> dict:
    from .serialize import frac_str

    return {
        "bases": [
            {
                "base": list(base),
                "a0": frac_str(col.a0),
                "rows": [[o, col.V[o - col.lo], col.H[o - col.lo]] for o in col.offsets],
                "labels": labels_str(col.labels()),
            }
            for base, col in sorted(P.columns.items())
        ]
    }


def profile_from_json(data: dict) -> VHProfile:
    from .serialize import parse_frac

    cols = {}
    try:
        for entry in data["bases"]:
            rows = sorted(entry["rows"])
            offsets = [r[0] for r in rows]
            if offsets != list(range(offsets[0], offsets[0] + len(offsets))):
                raise InputError(f"offsets of base {entry['base']} are not consecutive")
            cols[tuple(entry["base"])] = Column(
                parse_frac(entry["a0"]), offsets[0], tuple(r[1] for r in rows), tuple(r[2] for r in rows)
            )
    except (KeyError, IndexError, TypeError) as exc:
        raise InputError(f"malformed profile JSON: {exc}") from exc
    return VHProfile(cols)


def law_failures(P: VHProfile) -> list[str]:
    """Brute-force recheck of the profile laws on a window two steps past each tail.

    Returns human-readable failures; empty means every law held.
    """
    bad = validate_profile(P)
    if bad is not None:
        return [f"invalid profile: {bad}"]
    out = []
    conj = conjugate_profile(P)
    if validate_profile(conj) is not None:
        out.append("conjugate profile rejected")
    elif conjugate_profile(conj) != P:
        out.append("conjugation is not an involution")
    for base in P.bases():
        col = P.column(base)
        span = range(col.lo - 2, col.hi + 3)
        diffs = {col.v_at(o + 1) - col.h_at(o + 1) - col.v_at(o) + col.h_at(o) for o in span}
        if diffs != {-1}:
            out.append(f"{base}: V-H steps {sorted(diffs)}")
        middles = [o for o in span if col.v_at(o) == col.h_at(o)]
        mid = middle_structure(P, base)
        if middles != [mid.offset]:
            out.append(f"{base}: V=H at {middles}, expected only {mid.offset}")
        w = nu_plus_witness(P, base)
        if w.grading < mid.grading or (w.grading == mid.grading) != (col.h_at(w.offset) == 0):
            out.append(f"{base}: nu+ {w.grading} vs A(xi0) {mid.grading} breaks the dichotomy")
        labels = col.labels(col.lo - 1, col.hi + 1)
        n_circ = labels.count(Label.CIRCLE)
        n_star = labels.count(Label.STAR)
        kind = classify_column(P, base)
        if (kind == "i") != (n_circ == 1 and n_star == 0):
            out.append(f"{base}: classified {kind} with labels {labels_str(labels)}")
        cc = conj.column(base)
        if cc.labels(cc.lo - 1, cc.hi + 1) != conjugate_labels(labels):
            out.append(f"{base}: conjugate labels do not swap + and -")
    return out
