"""Summation by parts in its modified-Abel form, truncated to a finite
cutoff, plus the two Reed Dawson-like identities it produces here.

With backward difference (del A)_i = A_i - A_{i-1} and forward-style
difference (del' B)_i = B_i - B_{i+1}, the finite transform

    sum_{i=1}^{M} B_i (A_i - A_{i-1})
      = A_M B_{M+1} - A_0 B_1 + sum_{i=1}^{M} A_i (B_i - B_{i+1})

is an algebraic identity for arbitrary sequences; the boundary term
A_M B_{M+1} plays the role of the limit term, and equals it whenever A has
compact support below the cutoff.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .core import gbinom, pochhammer


@dataclass(frozen=True)
class SequencePair:
    """Two sequences A, B (total on 0..cutoff+1) and a truncation index."""

    A: Callable[[int], Fraction]
    B: Callable[[int], Fraction]
    cutoff: int


def transform_residual(pair: SequencePair) -> Fraction:
    """Left side minus right side of the finite summation-by-parts identity.

    Always exactly 0; exposed as a residual so the telescoping structure
    itself is checkable on arbitrary sequences.
    """
    a = [pair.A(i) for i in range(pair.cutoff + 1)]
    b = [pair.B(i) for i in range(pair.cutoff + 2)]
    m = pair.cutoff
    lhs = sum((b[i] * (a[i] - a[i - 1]) for i in range(1, m + 1)), Fraction(0))
    rhs = a[m] * b[m + 1] - a[0] * b[1]
    rhs += sum((a[i] * (b[i] - b[i + 1]) for i in range(1, m + 1)), Fraction(0))
    return lhs - rhs


def first_pair(n: int, ell: Fraction | int, cutoff: int | None = None) -> SequencePair:
    """The compactly supported pair behind the weighted shifted sum:

        A_i = -(i-n)(-n)_i / (n i!)      (zero for i >= n)
        B_i = 2^i (l+1/2)_i / (2l+1)_i
    """
    if n < 1:
        raise ValueError(f"pair requires n >= 1, got {n}")
    ell = Fraction(ell)

    def a(i: int) -> Fraction:
        return Fraction(-(i - n)) * pochhammer(-n, i) / (n * math.factorial(i))

    def b(i: int) -> Fraction:
        den = pochhammer(2 * ell + 1, i)
        if den == 0:
            raise ValueError(f"(2l+1)_i vanishes for l={ell}, i={i}")
        return 2**i * pochhammer(ell + Fraction(1, 2), i) / den

    return SequencePair(a, b, n if cutoff is None else cutoff)


def abel1_valid(n: int, ell: Fraction | int) -> bool:
    """k+2l+1 must stay nonzero on 0..n and l must avoid the negative
    integers >= -n where the binomials' Gamma form degenerates."""
    ell = Fraction(ell)
    if ell.denominator == 1 and -n <= ell < 0:
        return False
    for k in range(n + 1):
        if k + 2 * ell + 1 == 0:
            return False
    return True


def abel1_lhs(n: int, ell: Fraction | int) -> Fraction:
    """sum_{k=0}^n (-1/2)^k choose(n+l, k+l) choose(2k+2l, k) k(n-k)/(k+2l+1)."""
    ell = Fraction(ell)
    a = n + ell
    fall = [Fraction(1)]
    for m in range(1, n + 1):
        fall.append(fall[-1] * (a - m + 1))
    total = Fraction(0)
    b2k = Fraction(1)
    for k in range(n + 1):
        if k:
            den = (k + 2 * ell) * k
            if b2k == 0 or den == 0:
                b2k = gbinom(2 * k + 2 * ell, k)
            else:
                b2k = b2k * (2 * k + 2 * ell - 1) * (2 * k + 2 * ell) / den
        weight = Fraction(k * (n - k)) / (k + 2 * ell + 1)
        if weight == 0:
            continue
        upper = fall[n - k] / math.factorial(n - k)
        total += Fraction(-1, 2) ** k * upper * b2k * weight
    return total


def abel1_rhs(n: int, ell: Fraction | int) -> Fraction:
    """-2^(-n) n choose(n+l, n/2) for even n, else 0."""
    if n % 2:
        return Fraction(0)
    return -Fraction(n, 2**n) * gbinom(n + Fraction(ell), n // 2)


def abel2_lhs(n: int) -> Fraction:
    """sum_{k=0}^n (-1/2)^k C(2k,k) C(n,k) (2k+1)(k^2+3k+3)(n-k) / ((k+1)^2 (k+2)(k+3))."""
    total = Fraction(0)
    for k in range(n + 1):
        num = (2 * k + 1) * (k * k + 3 * k + 3) * (n - k)
        if num == 0:
            continue
        num *= (-1) ** k * math.comb(2 * k, k) * math.comb(n, k)
        den = 2**k * (k + 1) ** 2 * (k + 2) * (k + 3)
        total += Fraction(num, den)
    return total


def abel2_rhs(n: int) -> Fraction:
    """1/2 - C(n, n/2)(n+1) / (2^n (n+2)) for even n, else 1/2."""
    if n % 2:
        return Fraction(1, 2)
    return Fraction(1, 2) - Fraction(math.comb(n, n // 2) * (n + 1), 2**n * (n + 2))
