"""The identity registry: every closed-form summation identity this
package verifies, as (brute-force LHS, closed-form RHS, validity) triples
over a typed parameter space.

Each identity is registered under a stable kebab-case key.  The LHS
evaluator is always the plain finite sum over exact rationals -- the
universal oracle -- and the RHS is the closed form; verification is exact
equality, no tolerances anywhere.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from . import abel, legendre
from .core import format_rational, gbinom, harmonic, odd_harmonic

HALF = Fraction(1, 2)

# Mixes integers, half-integers and generic rationals; identities skip the
# grid points their validity predicate excludes.
DEFAULT_ELL_GRID: tuple[Fraction, ...] = (
    Fraction(-1, 3),
    Fraction(-1, 4),
    Fraction(0),
    Fraction(1, 4),
    Fraction(1, 3),
    Fraction(1, 2),
    Fraction(1),
    Fraction(3, 2),
    Fraction(2),
    Fraction(7, 5),
)


@dataclass(frozen=True)
class Identity:
    """A named pair of evaluators over a parameter space.

    space is one of "int" (a single integer parameter swept 0..n_max),
    "int-ell" (integer crossed with the rational shift grid), or
    "int-points" (integer plus a per-n set of 2n+1 rational sample points,
    enough to pin down a degree-2n polynomial identity).
    """

    name: str
    summary: str
    param_names: tuple[str, ...]
    space: str
    lhs: Callable[..., Fraction]
    rhs: Callable[..., Fraction]
    validity: Callable[..., bool] = field(default=lambda **params: True)

    def evaluate(self, **params) -> tuple[Fraction, Fraction]:
        return self.lhs(**params), self.rhs(**params)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one (identity, parameter assignment) check."""

    identity: str
    params: tuple[tuple[str, int | Fraction], ...]
    lhs: Fraction | None
    rhs: Fraction | None
    status: str  # "pass" | "fail" | "skip"
    reason: str = ""
    micros: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_record(self) -> dict:
        params = {
            name: value if isinstance(value, int) else format_rational(value)
            for name, value in self.params
        }
        rec = {
            "identity": self.identity,
            "params": params,
            "lhs": None if self.lhs is None else format_rational(self.lhs),
            "rhs": None if self.rhs is None else format_rational(self.rhs),
            "status": self.status,
            "micros": self.micros,
        }
        if self.reason:
            rec["reason"] = self.reason
        return rec


# ---------------------------------------------------------------------------
# Alternating central-binomial sums with a rational shift parameter.
# ---------------------------------------------------------------------------


def knuth_lhs(n: int) -> Fraction:
    """sum_{k=0}^n (-1/2)^k C(n,k) C(2k,k)."""
    s = sum(
        (-1) ** k * math.comb(n, k) * math.comb(2 * k, k) * 2 ** (n - k)
        for k in range(n + 1)
    )
    return Fraction(s, 2**n)


def knuth_rhs(n: int) -> Fraction:
    """2^(-n) C(n, n/2) for even n, else 0."""
    if n % 2:
        return Fraction(0)
    return Fraction(math.comb(n, n // 2), 2**n)


def _guarded_b2k(prev: Fraction, k: int, ell: Fraction) -> Fraction:
    """choose(2k+2l, k) from choose(2k-2+2l, k-1).

    The one-step ratio (2k+2l-1)(2k+2l) / ((k+2l) k) is exact whenever the
    previous value and the denominator are nonzero; in the rare degenerate
    cases (l a negative half-integer crossing the window) fall back to the
    direct product.
    """
    den = (k + 2 * ell) * k
    if prev == 0 or den == 0:
        return gbinom(2 * k + 2 * ell, k)
    return prev * (2 * k + 2 * ell - 1) * (2 * k + 2 * ell) / den


def prop1_valid(n: int, ell: Fraction) -> bool:
    """The shift must avoid the negative integers >= -n, where the Gamma
    form of choose(n+l, k+l) degenerates."""
    return not (ell.denominator == 1 and -n <= ell <= -1)


def prop1_lhs(n: int, ell: Fraction) -> Fraction:
    """sum_{k=0}^n (-1/2)^k choose(n+l, k+l) choose(2k+2l, k)."""
    a = n + ell
    fall = [Fraction(1)]
    for m in range(1, n + 1):
        fall.append(fall[-1] * (a - m + 1))
    total = Fraction(0)
    b2k = Fraction(1)
    for k in range(n + 1):
        if k:
            b2k = _guarded_b2k(b2k, k, ell)
        upper = fall[n - k] / math.factorial(n - k)
        total += (-HALF) ** k * upper * b2k
    return total


def prop1_rhs(n: int, ell: Fraction) -> Fraction:
    """2^(-n) choose(n+l, n/2) for even n, else 0."""
    if n % 2:
        return Fraction(0)
    return gbinom(n + ell, n // 2) / 2**n


def prop2_valid(n: int, ell: Fraction) -> bool:
    """choose(k+l, k) must stay nonzero for k <= n, and for even n the
    closed form's choose(n/2+l, n/2) must not vanish."""
    if ell.denominator == 1 and -n <= ell <= -1:
        return False
    if n % 2 == 0 and gbinom(n // 2 + ell, n // 2) == 0:
        return False
    return True


def prop2_lhs(n: int, ell: Fraction) -> Fraction:
    """sum_{k=0}^n (-1/2)^k C(n,k) choose(2k+2l, k) / choose(k+l, k)."""
    total = Fraction(0)
    b2k = Fraction(1)
    dk = Fraction(1)  # choose(k+l, k) = (l+1)_k / k!
    for k in range(n + 1):
        if k:
            b2k = _guarded_b2k(b2k, k, ell)
            dk = dk * (ell + k) / k
        if dk == 0:
            raise ValueError(f"choose(k+l,k) vanishes at k={k} for l={ell}")
        total += (-HALF) ** k * math.comb(n, k) * b2k / dk
    return total


def prop2_rhs(n: int, ell: Fraction) -> Fraction:
    """2^(-n) C(n, n/2) / choose(n/2+l, n/2) for even n, else 0."""
    if n % 2:
        return Fraction(0)
    return Fraction(math.comb(n, n // 2), 2**n) / gbinom(n // 2 + ell, n // 2)


# ---------------------------------------------------------------------------
# Binomial-harmonic sums.
# ---------------------------------------------------------------------------


def hkmix_lhs(n: int) -> Fraction:
    """sum_{k=0}^{2n} (-1/2)^k C(2k,k) C(2n,k) (3 H_k - 2 H_{2k})."""
    total = Fraction(0)
    for k in range(2 * n + 1):
        w = 3 * harmonic(k) - 2 * harmonic(2 * k)
        if w:
            total += Fraction((-1) ** k * math.comb(2 * k, k) * math.comb(2 * n, k), 2**k) * w
    return total


def hkmix_rhs(n: int) -> Fraction:
    """4^(-n) C(2n,n) H_n."""
    return Fraction(math.comb(2 * n, n), 4**n) * harmonic(n)


def oddh_corollary_lhs(m: int) -> Fraction:
    """sum_{k=0}^m (-2)^k C(m,k) H_k / (k+1)."""
    total = Fraction(0)
    for k in range(1, m + 1):
        total += Fraction((-2) ** k * math.comb(m, k), k + 1) * harmonic(k)
    return total


def oddh_corollary_rhs(m: int) -> Fraction:
    """-(2/(m+1)) O_((m+1)/2) for odd m, else 0."""
    if m % 2 == 0:
        return Fraction(0)
    return Fraction(-2, m + 1) * odd_harmonic((m + 1) // 2)


def intermediate_lhs(n: int) -> Fraction:
    """sum_{k=0}^{2n} (-2)^k C(2n+1,k) H_k / (k+1)."""
    total = Fraction(0)
    for k in range(1, 2 * n + 1):
        total += Fraction((-2) ** k * math.comb(2 * n + 1, k), k + 1) * harmonic(k)
    return total


def intermediate_rhs(n: int) -> Fraction:
    """(4^n - 1) H_{2n}/(n+1) + H_n/(2(n+1)) + (4^n - 1)/((n+1)(2n+1))."""
    p = 4**n - 1
    return (
        p * harmonic(2 * n) / (n + 1)
        + harmonic(n) / (2 * (n + 1))
        + Fraction(p, (n + 1) * (2 * n + 1))
    )


def gfpoly_lhs(n: int, x: Fraction) -> Fraction:
    """sum_{k=0}^{2n} (-1/2)^k C(2n,k) 4^k x^k / (k+1)  (equals (-2x)^k terms)."""
    total = Fraction(0)
    power = Fraction(1)
    for k in range(2 * n + 1):
        if k:
            power *= -2 * x
        total += math.comb(2 * n, k) * power / (k + 1)
    return total


def gfpoly_rhs(n: int, x: Fraction) -> Fraction:
    """(1 - (1-2x)^(2n+1)) / (2(2n+1)x) for x != 0; the x -> 0 limit is 1."""
    if x == 0:
        return Fraction(1)
    return (1 - (1 - 2 * x) ** (2 * n + 1)) / (2 * (2 * n + 1) * x)


def tauraso_lhs(n: int) -> Fraction:
    """sum_{k=0}^{2n} (-1)^k C(2n,k) C(2n+k,k) C(2k,k) 4^(2n-k) H_k."""
    total = Fraction(0)
    for k in range(1, 2 * n + 1):
        c = (
            (-1) ** k
            * math.comb(2 * n, k)
            * math.comb(2 * n + k, k)
            * math.comb(2 * k, k)
            * 4 ** (2 * n - k)
        )
        total += c * harmonic(k)
    return total


def tauraso_rhs(n: int) -> Fraction:
    """C(2n,n)^2 H_{2n}."""
    return math.comb(2 * n, n) ** 2 * harmonic(2 * n)


# ---------------------------------------------------------------------------
# Registry.
# ---------------------------------------------------------------------------


def _ident(name, summary, params, space, lhs, rhs, validity=None) -> Identity:
    if validity is None:
        return Identity(name, summary, params, space, lhs, rhs)
    return Identity(name, summary, params, space, lhs, rhs, validity)


REGISTRY: dict[str, Identity] = {
    ident.name: ident
    for ident in (
        _ident(
            "knuth-old-sum",
            "sum (-1/2)^k C(n,k) C(2k,k) = [n even] 2^-n C(n,n/2)",
            ("n",),
            "int",
            knuth_lhs,
            knuth_rhs,
        ),
        _ident(
            "prop1-general-ell",
            "sum (-1/2)^k C(n+l,k+l) C(2k+2l,k) = [n even] 2^-n C(n+l,n/2)",
            ("n", "ell"),
            "int-ell",
            prop1_lhs,
            prop1_rhs,
            prop1_valid,
        ),
        _ident(
            "prop2-general-ell",
            "sum (-1/2)^k C(n,k) C(2k+2l,k)/C(k+l,k) = [n even] 2^-n C(n,n/2)/C(n/2+l,n/2)",
            ("n", "ell"),
            "int-ell",
            prop2_lhs,
            prop2_rhs,
            prop2_valid,
        ),
        _ident(
            "example-3hk-2h2k",
            "sum_{k<=2n} (-1/2)^k C(2k,k) C(2n,k) (3H_k - 2H_2k) = 4^-n C(2n,n) H_n",
            ("n",),
            "int",
            hkmix_lhs,
            hkmix_rhs,
        ),
        _ident(
            "corollary-odd-harmonic",
            "sum (-2)^k C(m,k) H_k/(k+1) = [m odd] -(2/(m+1)) O_((m+1)/2)",
            ("m",),
            "int",
            oddh_corollary_lhs,
            oddh_corollary_rhs,
        ),
        _ident(
            "corollary-intermediate",
            "sum_{k<=2n} (-2)^k C(2n+1,k) H_k/(k+1) = (4^n-1)H_2n/(n+1) + H_n/(2n+2) + (4^n-1)/((n+1)(2n+1))",
            ("n",),
            "int",
            intermediate_lhs,
            intermediate_rhs,
        ),
        _ident(
            "gf-polynomial",
            "sum_{k<=2n} C(2n,k) (-2x)^k/(k+1) = (1-(1-2x)^(2n+1))/(2(2n+1)x)",
            ("n", "x"),
            "int-points",
            gfpoly_lhs,
            gfpoly_rhs,
        ),
        _ident(
            "tauraso-h2n",
            "sum_{k<=2n} (-1)^k C(2n,k) C(2n+k,k) C(2k,k) 4^(2n-k) H_k = C(2n,n)^2 H_2n",
            ("n",),
            "int",
            tauraso_lhs,
            tauraso_rhs,
        ),
        _ident(
            "odd-knuth-sum",
            "sum (-1/4)^k C(n,k) C(2k,k) O_k = -(1/4)^n C(2n,n) O_n",
            ("n",),
            "int",
            legendre.odd_knuth_lhs,
            legendre.odd_knuth_rhs,
        ),
        _ident(
            "legendre-log-moment",
            "int_0^1 ln(x)/sqrt(x) P_n(2x-1) dx = 4(-1)^n (H_n - 2 H_2n - 1/(2n+1))/(2n+1)",
            ("n",),
            "int",
            legendre.log_moment_sqrt_lhs,
            legendre.log_moment_sqrt_rhs,
        ),
        _ident(
            "abel-first",
            "sum (-1/2)^k C(n+l,k+l) C(2k+2l,k) k(n-k)/(k+2l+1) = [n even] -2^-n n C(n+l,n/2)",
            ("n", "ell"),
            "int-ell",
            abel.abel1_lhs,
            abel.abel1_rhs,
            abel.abel1_valid,
        ),
        _ident(
            "abel-second",
            "sum (-1/2)^k C(2k,k) C(n,k) (2k+1)(k^2+3k+3)(n-k)/((k+1)^2(k+2)(k+3)) = 1/2 - [n even] C(n,n/2)(n+1)/(2^n(n+2))",
            ("n",),
            "int",
            abel.abel2_lhs,
            abel.abel2_rhs,
        ),
    )
}


def iter_cases(
    ident: Identity, n_max: int, ell_grid: tuple[Fraction, ...] = DEFAULT_ELL_GRID
) -> Iterator[dict]:
    """All parameter assignments for a sweep up to n_max (validity-excluded
    points are still yielded; verify() reports them as skipped)."""
    first = ident.param_names[0]
    if ident.space == "int":
        for n in range(n_max + 1):
            yield {first: n}
    elif ident.space == "int-ell":
        for n in range(n_max + 1):
            for ell in ell_grid:
                yield {first: n, "ell": ell}
    elif ident.space == "int-points":
        for n in range(n_max + 1):
            for j in range(1, 2 * n + 2):
                yield {first: n, "x": Fraction(j, 2 * n + 1)}
    else:
        raise ValueError(f"unknown parameter space {ident.space!r}")


def verify(ident: Identity, params: dict) -> VerificationReport:
    """Evaluate both sides on one parameter assignment and compare exactly.

    Validity-excluded cases are reported as skipped, never as passes;
    evaluator errors become failures carrying the error text.
    """
    flat = tuple((name, params[name]) for name in ident.param_names)
    if not ident.validity(**params):
        return VerificationReport(ident.name, flat, None, None, "skip", "validity excluded")
    start = time.perf_counter_ns()
    try:
        lhs = ident.lhs(**params)
        rhs = ident.rhs(**params)
    except Exception as exc:  # captured, not propagated: the report is the API
        micros = (time.perf_counter_ns() - start) // 1000
        return VerificationReport(
            ident.name, flat, None, None, "fail", f"evaluator error: {exc}", micros
        )
    micros = (time.perf_counter_ns() - start) // 1000
    status = "pass" if lhs == rhs else "fail"
    reason = "" if status == "pass" else "lhs != rhs"
    return VerificationReport(ident.name, flat, lhs, rhs, status, reason, micros)


def _verify_case(name: str, params: dict) -> VerificationReport:
    return verify(REGISTRY[name], params)


def run_sweep(
    names: list[str],
    n_max: int,
    ell_grid: tuple[Fraction, ...] = DEFAULT_ELL_GRID,
    jobs: int = 1,
    fail_fast: bool = False,
) -> list[VerificationReport]:
    """Verify every case of the named identities; reports come back sorted
    by (identity, parameters) so output is deterministic regardless of the
    degree of parallelism."""
    unknown = [n for n in names if n not in REGISTRY]
    if unknown:
        raise KeyError(f"unknown identities: {', '.join(unknown)}; valid keys: {', '.join(sorted(REGISTRY))}")
    cases = [
        (name, params)
        for name in sorted(names)
        for params in iter_cases(REGISTRY[name], n_max, ell_grid)
    ]
    reports: list[VerificationReport] = []
    if jobs <= 1:
        for name, params in cases:
            rep = _verify_case(name, params)
            reports.append(rep)
            if fail_fast and rep.status == "fail":
                break
    else:
        from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            pending = {pool.submit(_verify_case, name, params) for name, params in cases}
            stop = False
            while pending and not stop:
                done, pending = wait(pending, return_when=FIRST_COMPLETED)
                for fut in done:
                    rep = fut.result()
                    reports.append(rep)
                    if fail_fast and rep.status == "fail":
                        stop = True
            for fut in pending:
                fut.cancel()
    reports.sort(key=lambda r: (r.identity, tuple(v for _, v in r.params)))
    return reports
