"""Exact text forms: rationals as reduced "num/den" strings, never floats."""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .errors import InputError


def frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputError(f"rationals must be given as strings, got {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse rational {text!r}") from exc


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([frac_str(x) if isinstance(x, Fraction) else x for x in row])
    return buf.getvalue()


def _default(o):
    if isinstance(o, Fraction):
        return frac_str(o)
    if isinstance(o, tuple):
        return list(o)
    raise TypeError(f"not JSON serializable: {o!r}")


def to_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True, default=_default) + "\n"
