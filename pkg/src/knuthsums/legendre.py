"""Shifted Legendre polynomials on [0,1], their exact moments, and the
odd-harmonic analogue of the Reed Dawson sum.

P_n(2x-1) is expanded into monomial coefficients by exact polynomial
multiplication of the product form

    P_n(2x-1) = sum_k C(n,k)^2 (x-1)^(n-k) x^k,

which gives integer coefficients c_j = (-1)^(n-j) C(n,j) C(n+j,j).  The
x^p moments over [0,1] reduce to a three-factor Gamma product; the
log-weighted moment against 1/sqrt(x) is a finite rational because
int_0^1 x^(j-1/2) ln(x) dx = -4/(2j+1)^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import gammaprod
from .core import harmonic, odd_harmonic


@dataclass(frozen=True)
class ShiftedLegendre:
    """Monomial coefficients of P_n(2x-1): coeffs[j] multiplies x^j."""

    n: int
    coeffs: tuple[int, ...]

    def value_at_one(self) -> int:
        return sum(self.coeffs)

    def value_at_zero(self) -> int:
        return self.coeffs[0]


def shifted_legendre(n: int) -> ShiftedLegendre:
    """Expand sum_k C(n,k)^2 (x-1)^(n-k) x^k into monomial coefficients."""
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    coeffs = [0] * (n + 1)
    for k in range(n + 1):
        w = math.comb(n, k) ** 2
        p = n - k
        # (x-1)^p contributes C(p,i) (-1)^(p-i) x^i
        for i in range(p + 1):
            coeffs[k + i] += w * math.comb(p, i) * (-1) ** (p - i)
    return ShiftedLegendre(n, tuple(coeffs))


def moment(p: Fraction | int, n: int) -> gammaprod.GammaValue:
    """int_0^1 x^p P_n(2x-1) dx as the reduced Gamma product
    Gamma(p+1)^2 / (Gamma(p-n+1) Gamma(p+n+2)), for rational p > -1."""
    p = Fraction(p)
    if p <= -1:
        raise ValueError(f"moment requires p > -1, got {p}")
    expr = gammaprod.GammaExpr([(p + 1, 2), (p - n + 1, -1), (p + n + 2, -1)])
    return gammaprod.reduce(expr)


def moment_by_expansion(p: Fraction | int, n: int) -> Fraction:
    """Brute-force oracle for moment(): integrate the monomial expansion
    term by term, sum_j coeffs[j] / (p + j + 1)."""
    p = Fraction(p)
    if p <= -1:
        raise ValueError(f"moment requires p > -1, got {p}")
    poly = shifted_legendre(n)
    return sum((Fraction(c) / (p + j + 1) for j, c in enumerate(poly.coeffs)), Fraction(0))


def log_moment_sqrt_lhs(n: int) -> Fraction:
    """int_0^1 ln(x)/sqrt(x) P_n(2x-1) dx, exactly: each monomial x^j
    contributes coeffs[j] * (-4/(2j+1)^2)."""
    poly = shifted_legendre(n)
    return sum(
        (Fraction(-4 * c, (2 * j + 1) ** 2) for j, c in enumerate(poly.coeffs)),
        Fraction(0),
    )


def log_moment_sqrt_rhs(n: int) -> Fraction:
    """Closed form 4(-1)^n H_n/(2n+1) - 8(-1)^n H_{2n}/(2n+1) - 4(-1)^n/(2n+1)^2."""
    sign = (-1) ** n
    return (
        4 * sign * harmonic(n) / (2 * n + 1)
        - 8 * sign * harmonic(2 * n) / (2 * n + 1)
        - Fraction(4 * sign, (2 * n + 1) ** 2)
    )


def odd_knuth_lhs(n: int) -> Fraction:
    """sum_{k=0}^n (-1/4)^k C(n,k) C(2k,k) O_k over exact rationals."""
    total = Fraction(0)
    for k in range(n + 1):
        o = odd_harmonic(k)
        if o:
            total += Fraction((-1) ** k * math.comb(n, k) * math.comb(2 * k, k), 4**k) * o
    return total


def odd_knuth_rhs(n: int) -> Fraction:
    """Closed form -(1/4)^n C(2n,n) O_n."""
    return -Fraction(math.comb(2 * n, n), 4**n) * odd_harmonic(n)
