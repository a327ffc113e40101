"""Independent lattice oracle for lens-space correction terms.

L(p, q) bounds the negative-definite linear plumbing X whose weights are
-a_1, ..., -a_n with p/q = [a_1, ..., a_n] (Hirzebruch-Jung continued
fraction).  Linear plumbings are sharp, so

    d(L(p,q), t) = max { (c.c + n) / 4 : c characteristic, c restricts to t },

where c.c = c^T Q^{-1} c.  Nothing here touches the recursion in
:mod:`rationalgenus.dinvariant`.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .errors import InputError


def hj_continued_fraction(p: int, q: int) -> list[int]:
    """[a_1, ..., a_n] with p/q = a_1 - 1/(a_2 - 1/(...)), all a_i >= 2."""
    if p < 2 or not 0 < q < p or math.gcd(p, q) != 1:
        raise InputError(f"need p >= 2, 0 < q < p, gcd 1; got ({p}, {q})")
    out = []
    while q:
        a = -(-p // q)
        out.append(a)
        p, q = q, a * q - p
    return out


def plumbing_matrix(weights: list[int]) -> list[list[int]]:
    """Intersection form of the linear plumbing with self-intersections -a_i."""
    n = len(weights)
    Q = [[0] * n for _ in range(n)]
    for i, a in enumerate(weights):
        Q[i][i] = -a
        if i + 1 < n:
            Q[i][i + 1] = Q[i + 1][i] = 1
    return Q


def _inverse(Q: list[list[int]]) -> list[list[Fraction]]:
    n = len(Q)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(Q)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [row[n:] for row in M]


def lattice_d_values(weights: list[int]) -> list[Fraction]:
    """Sorted multiset of d-invariants of the boundary of the linear plumbing.

    If some |c_i| > a_i, subtracting 2 Q (sign c_i) e_i stays in the class and
    raises c.c by 4(|c_i| - a_i) > 0, so every class attains its maximum on the
    box |c_i| <= a_i.  The box is therefore exhaustive.
    """
    Q = plumbing_matrix(weights)
    n = len(weights)
    det = abs(int(_det(Q)))
    # integer adjugate: det * Q^{-1}
    adj = [[int(x * det) for x in row] for row in _inverse(Q)]
    best: dict[tuple[int, ...], Fraction] = {}
    ranges = [range(-a, a + 1, 2) for a in weights]  # c_i = a_i mod 2
    for c in itertools.product(*ranges):
        y = [sum(r[j] * c[j] for j in range(n)) for r in adj]
        sq = sum(ci * yi for ci, yi in zip(c, y))
        # c ~ c' iff Q^{-1}(c - c') / 2 is integral
        key = tuple(yi % (2 * det) for yi in y)
        val = Fraction(sq + n * det, 4 * det)
        if key not in best or val > best[key]:
            best[key] = val
    if len(best) != det:
        raise RuntimeError(f"lattice oracle found {len(best)} classes, expected {det}")
    return sorted(best.values())


def _det(Q: list[list[int]]) -> Fraction:
    n = len(Q)
    M = [[Fraction(x) for x in row] for row in Q]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = -det
        det *= M[col][col]
        for r in range(col + 1, n):
            f = M[r][col] / M[col][col]
            M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return det


def disk_bundle_d_values(p: int) -> list[Fraction]:
    """Rank-one case: the disk bundle of Euler number -p, boundary L(p, 1).

    Characteristic covectors are integers c = p mod 2, the class of c is
    c mod 2p, and c.c = -c^2 / p.
    """
    if p < 1:
        raise InputError(f"p must be positive, got {p}")
    if p == 1:
        return [Fraction(0)]
    best: dict[int, Fraction] = {}
    for c in range(-3 * p, 3 * p + 1):
        if (c - p) % 2:
            continue
        val = (Fraction(-c * c, p) + 1) / 4
        key = c % (2 * p)
        if key not in best or val > best[key]:
            best[key] = val
    return sorted(best.values())


def lens_d_values(p: int, q: int) -> list[Fraction]:
    if p == 1:
        return [Fraction(0)]
    return lattice_d_values(hj_continued_fraction(p, q % p))
