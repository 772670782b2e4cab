"""Terminating generalized hypergeometric series over exact rationals.

A series here is a pFq whose upper parameter list contains a nonpositive
integer, so the sum has finitely many nonzero terms and is meaningful even
at arguments (like z = 2) far outside the convergence disk.  Alongside the
generic evaluator live the two classical 2F1(2) closed forms this package
leans on:

    2F1[-2n,     a; 2a | 2] = (1/2)_n / (a+1/2)_n
    2F1[-(2n+1), a; 2a | 2] = 0

(the odd case follows from the z -> z/(z-1) reflection, whose fixed point
is z = 2: with lower parameter exactly 2a the series maps to minus itself
for odd upper index).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import is_nonpositive_integer, pochhammer


@dataclass(frozen=True)
class HyperSeries:
    """A terminating pFq: upper/lower rational parameters and argument.

    At least one upper parameter must be a nonpositive integer (the
    termination witness); no lower parameter may be a nonpositive integer
    >= -N where N is the termination index, since its Pochhammer would
    vanish inside the summation range.
    """

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    argument: Fraction

    def __init__(self, upper, lower, argument) -> None:
        object.__setattr__(self, "upper", tuple(Fraction(u) for u in upper))
        object.__setattr__(self, "lower", tuple(Fraction(l) for l in lower))
        object.__setattr__(self, "argument", Fraction(argument))
        witnesses = [-int(u) for u in self.upper if is_nonpositive_integer(u)]
        if not witnesses:
            raise ValueError("series does not terminate: no nonpositive integer upper parameter")
        n = min(witnesses)
        for b in self.lower:
            if is_nonpositive_integer(b) and -int(b) <= n:
                raise ValueError(
                    f"lower parameter {b} makes a denominator Pochhammer vanish within range"
                )

    @property
    def termination_index(self) -> int:
        """Smallest N with (-N) among the upper parameters; the sum stops at k = N."""
        return min(-int(u) for u in self.upper if is_nonpositive_integer(u))


def eval_terminating(series: HyperSeries) -> Fraction:
    """Sum the series exactly: sum_{k=0}^{N} prod(upper)_k / prod(lower)_k * z^k / k!.

    Each term is built from the previous one with a single multiplication
    per parameter, so the whole evaluation is O(N * (p+q)) rational ops.
    """
    n = series.termination_index
    z = series.argument
    total = Fraction(1)
    term = Fraction(1)
    for k in range(1, n + 1):
        for u in series.upper:
            term *= u + k - 1
        for l in series.lower:
            d = l + k - 1
            if d == 0:
                raise ValueError(f"lower parameter {l} vanishes at term {k}")
            term /= d
        term = term * z / k
        total += term
    return total


def kummer_even(n: int, a: Fraction | int) -> Fraction:
    """Closed form (1/2)_n / (a+1/2)_n for 2F1[-2n, a; 2a | 2]."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    a = Fraction(a)
    den = pochhammer(a + Fraction(1, 2), n)
    if den == 0:
        raise ValueError(f"(a+1/2)_n vanishes for a={a}, n={n}")
    if is_nonpositive_integer(2 * a) and -int(2 * a) <= 2 * n:
        raise ValueError(f"lower parameter 2a={2 * a} hits a vanishing Pochhammer")
    return pochhammer(Fraction(1, 2), n) / den


def kummer_odd_zero(n: int, a: Fraction | int) -> Fraction:
    """The vanishing evaluation 2F1[-(2n+1), a; 2a | 2] = 0 for n >= 0.

    With the lower parameter exactly twice the free upper parameter, every
    odd-index terminating series at argument 2 vanishes; this is the closed
    form the odd rows of the shifted sums reduce to.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    a = Fraction(a)
    c = 2 * a
    if is_nonpositive_integer(c) and -int(c) <= 2 * n + 1:
        raise ValueError(f"lower parameter 2a={c} hits a vanishing Pochhammer")
    return Fraction(0)


def prop2_as_2f1(n: int, ell: Fraction | int) -> HyperSeries:
    """The normalized shifted sum written hypergeometrically: 2F1[-n, l+1/2; 2l+1 | 2]."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    ell = Fraction(ell)
    return HyperSeries((-n, ell + Fraction(1, 2)), (2 * ell + 1,), 2)
