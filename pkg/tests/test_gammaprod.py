"""Gamma-product reduction: half-integer closed forms, pole bookkeeping,
and the balanced 2F1(1/2) right-hand side."""

import random
from fractions import Fraction as F

import pytest

from knuthsums import hyper
from knuthsums.gammaprod import (
    Finite,
    GammaExpr,
    Irreducible,
    Pole,
    Zero,
    gamma_half,
    gauss_second_rhs,
    reduce,
)

HALF = F(1, 2)


def test_half_integer_values():
    assert reduce(GammaExpr([(F(5, 2), 1)])) == Finite(F(3, 4), 1)
    assert reduce(GammaExpr([(F(-1, 2), 1)])) == Finite(F(-2), 1)
    assert gamma_half(HALF) == 1
    assert gamma_half(F(7, 2)) == F(15, 8)
    with pytest.raises(ValueError):
        gamma_half(F(1, 3))


def test_integer_ratio_pairs_to_pochhammer():
    x = F(1, 3)
    assert reduce(GammaExpr([(x + 3, 1), (x, -1)])) == Finite(F(28, 27), 0)


def test_positive_integers_are_factorials():
    assert reduce(GammaExpr([(5, 1)])) == Finite(F(24), 0)
    assert reduce(GammaExpr([(5, 1), (3, -1)])) == Finite(F(12), 0)
    assert reduce(GammaExpr([(1, 1)], scalar=F(7, 2))) == Finite(F(7, 2), 0)


def test_pole_semantics():
    assert reduce(GammaExpr([(0, 1)])) == Pole()
    assert reduce(GammaExpr([(0, -1)])) == Zero()
    assert reduce(GammaExpr([(-3, 1), (2, 1)])) == Pole()
    assert reduce(GammaExpr([(-3, -1), (F(1, 2), 1)])) == Zero()
    # numerator pole against denominator pole at a different argument is a
    # 0*inf the engine refuses to resolve
    assert isinstance(reduce(GammaExpr([(0, 1), (-2, -1)])), Irreducible)
    # ... but identical arguments cancel outright at merge time
    assert reduce(GammaExpr([(0, 1), (0, -1), (2, 1)])) == Finite(F(1), 0)


def test_irreducible_keeps_residual():
    val = reduce(GammaExpr([(F(1, 3), 1)], scalar=F(2)))
    assert isinstance(val, Irreducible)
    assert val.residual.factors == ((F(1, 3), 1),)
    assert val.residual.scalar == 2


def test_scalar_must_be_nonzero():
    with pytest.raises(ValueError):
        GammaExpr([(1, 1)], scalar=0)


def test_reduce_invariant_under_reordering_and_splitting():
    factors = [(F(5, 2), 1), (F(1, 3), 2), (F(7, 3), -1), (4, 1), (F(-1, 2), -1)]
    base = reduce(GammaExpr(factors, scalar=F(3, 7)))
    random.Random(7).shuffle(factors)
    assert reduce(GammaExpr(factors, scalar=F(3, 7))) == base
    # split the squared factor into two unit factors
    split = [(F(5, 2), 1), (F(1, 3), 1), (F(1, 3), 1), (F(7, 3), -1), (4, 1), (F(-1, 2), -1)]
    assert reduce(GammaExpr(split, scalar=F(3, 7))) == base


def test_reflection_products():
    # Gamma(m+1/2) Gamma(1/2-m) = (-1)^m pi
    for m in range(21):
        val = reduce(GammaExpr([(m + HALF, 1), (HALF - m, 1)]))
        assert val == Finite(F((-1) ** m), 2)


def test_gauss_second_rhs_examples():
    assert gauss_second_rhs(-2, 2) == Finite(F(-1), 0)
    assert gauss_second_rhs(0, 0) == Finite(F(1), 0)
    for b in (F(1, 3), F(7, 5), F(-9, 4)):
        assert gauss_second_rhs(-3, b) == Zero()


def _random_b_values(count, seed):
    rng = random.Random(seed)
    values = []
    while len(values) < count:
        b = F(rng.randint(-40, 40), rng.choice([2, 3, 4, 5, 7, 9]))
        if b.denominator > 1:  # non-integers dodge every Gamma pole here
            values.append(b)
    return values


def test_gauss_second_matches_brute_force():
    for m in range(16):
        a = F(-2 * m)
        for b in _random_b_values(50, seed=100 + m):
            series = hyper.HyperSeries((a, b), ((a + b + 1) / 2,), HALF)
            value = hyper.eval_terminating(series)
            rhs = gauss_second_rhs(a, b)
            assert isinstance(rhs, Finite) and rhs.s == 0
            assert rhs.q == value


def test_gauss_second_odd_cases_reduce_to_zero():
    for m in range(12):
        a = F(-(2 * m + 1))
        for b in _random_b_values(8, seed=300 + m):
            series = hyper.HyperSeries((a, b), ((a + b + 1) / 2,), HALF)
            assert hyper.eval_terminating(series) == 0
            assert gauss_second_rhs(a, b) == Zero()
