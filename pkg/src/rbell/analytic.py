"""Numeric-side verification: Dobinski sums, generating-function coefficients,
confluent hypergeometric series with Kummer's transformation, the Cesaro-type
integral representation, Sturm-certified root structure, and the
maximizing-index bound.

Series summation is done in exact rational arithmetic and only converted to
float at the very end, so the reported error bounds consist of a provable
geometric tail bound plus the exactly-computed float representation error.
The quadrature error is estimated from successive Simpson refinements (not
certified); the e^{-x} factors rely on libm's exp being within a few ulp.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .algebra import ApproxReal, RationalSeries, pochhammer, series_exp, sturm_root_count
from .bell import rbell_number, rbell_poly
from .errors import ConvergenceError, DomainError, InconsistencyError
from .stirling import _check_natural, _s2r

# rational upper bound for 2e, used by the Dobinski stopping rule
_TWO_E_UPPER = Fraction(543657, 100000)

# relative slack allowed to one libm exp call plus float argument conversion
def _exp_rel_bound(xf: float) -> Fraction:
    return (Fraction(abs(xf)) + 4) * Fraction(23, 10**17)


def _float_upper(q: Fraction) -> float:
    """Smallest float >= q (q nonnegative)."""
    f = float(q)
    if Fraction(f) < q:
        f = math.nextafter(f, math.inf)
    return f


def _check_tol(tol: float) -> Fraction:
    if not (isinstance(tol, (int, float)) and math.isfinite(tol)) or tol <= 0:
        raise DomainError(f"tolerance must be a positive finite number, got {tol!r}")
    return Fraction(tol)


# ---------------------------------------------------------------------------
# Dobinski's formula


def dobinski_series_sum(n: int, r: int, x, tol: float) -> ApproxReal:
    """The bare series sum_k (k+r)^n x^k / k! with a certified error bound.

    Terms are accumulated exactly; summation continues until the index passes
    max(n+r, ceil(2 e x)), beyond which the term ratio is provably <= 1/2,
    and the geometric tail bound 2 t_{K+1} has dropped below
    tol/4 * max(1, partial sum).  err is that tail bound plus the exact float
    representation error of the returned value.
    """
    _check_natural(n=n, r=r)
    tol_f = _check_tol(tol)
    xq = Fraction(x)
    if xq <= 0:
        raise DomainError("dobinski evaluation needs x > 0")

    k_min = max(n + r, math.ceil(_TWO_E_UPPER * xq))
    total = Fraction(0)
    power = Fraction(1)  # x^k / k!
    k = 0
    while True:
        total += (k + r) ** n * power
        power_next = power * xq / (k + 1)
        t_next = (k + 1 + r) ** n * power_next
        if k + 1 >= k_min and 4 * (2 * t_next) <= tol_f * max(Fraction(1), total):
            break
        power = power_next
        k += 1

    value = float(total)
    rep_err = abs(Fraction(value) - total)
    return ApproxReal(value, _float_upper(2 * t_next + rep_err))


def dobinski_eval(n: int, r: int, x, tol: float) -> ApproxReal:
    """B_{n,r}(x) by Dobinski's formula e^{-x} sum_k (k+r)^n x^k / k!.

    The reported err covers the series tail, all float representation errors,
    and the e^{-x} multiplication; it stays below tol * max(1, B_{n,r}(x))
    at the tolerances the acceptance grid uses.
    """
    s = dobinski_series_sum(n, r, x, tol)
    xf = float(Fraction(x))
    w = math.exp(-xf)
    value = s.value * w
    d = _exp_rel_bound(xf)
    bound = (
        Fraction(w) * (Fraction(s.err) * (1 + d) + Fraction(abs(s.value)) * d)
        + Fraction(math.ulp(value))
    )
    return ApproxReal(value, _float_upper(bound))


# ---------------------------------------------------------------------------
# generating functions


def egf_coeffs(n_max: int, r: int, x) -> list[Fraction]:
    """Exact Taylor coefficients of e^{x(e^z - 1) + r z} up to order n_max.

    Contract: n! * coeff_n = B_{n,r}(x).
    """
    _check_natural(n_max=n_max, r=r)
    xq = Fraction(x)
    coeffs = [Fraction(0)] * (n_max + 1)
    fact = 1
    for k in range(1, n_max + 1):
        fact *= k
        coeffs[k] = xq / fact
    if n_max >= 1:
        coeffs[1] += r
    return list(series_exp(RationalSeries(n_max, tuple(coeffs))).coeffs)


def ogf_coefficient_pair(m: int, r: int, z) -> tuple[Fraction, Fraction]:
    """Both closed forms of the ordinary generating function coefficient
    identity for the column {n+r, m+r}_r, evaluated exactly at rational z:

        lhs = z^m / prod_{j=r..m+r} (1 - j z)
        rhs = (-1/(r z - 1)) * (-1)^m / ((r z + z - 1)/z)_m

    Contract: lhs = rhs away from z = 0 and the poles z = 1/j.
    """
    _check_natural(m=m, r=r)
    zq = Fraction(z)
    if zq == 0:
        raise DomainError("z = 0 is outside the Pochhammer form's domain")
    for j in range(r, m + r + 1):
        if j * zq == 1:
            raise DomainError(f"z = 1/{j} is a pole of the generating function")

    denom = Fraction(1)
    for j in range(r, m + r + 1):
        denom *= 1 - j * zq
    lhs = zq**m / denom

    poch = pochhammer((r * zq + zq - 1) / zq, m)
    rhs = Fraction(-1, 1) / (r * zq - 1) * Fraction((-1) ** m) / poch
    return lhs, rhs


# ---------------------------------------------------------------------------
# confluent hypergeometric series


def hypergeom_1f1(a, b, x, tol: float) -> ApproxReal:
    """Kummer's function 1F1(a; b; x) = sum_k (a)_k/(b)_k x^k/k!, summed
    exactly with the term recurrence.

    Summation stops once the term ratio is provably <= 1/2 for every later
    index and twice the next term has magnitude below tol/2; err is that
    geometric tail bound plus the exact representation error.
    """
    tol_f = _check_tol(tol)
    aq, bq, xq = Fraction(a), Fraction(b), Fraction(x)
    if bq <= 0 and bq.denominator == 1:
        raise DomainError("1F1 is undefined for b a nonpositive integer")

    # For k >= k_min: |a+k|/|b+k| <= 2 and |x|/(k+1) <= 1/4, so ratio <= 1/2.
    k_min = max(math.ceil(abs(aq - bq) - bq), math.ceil(4 * abs(xq)), 1)
    total = Fraction(0)
    term = Fraction(1)
    k = 0
    while True:
        total += term
        term_next = term * (aq + k) * xq / ((bq + k) * (k + 1))
        if k + 1 >= k_min and 4 * abs(term_next) <= tol_f:
            break
        term = term_next
        k += 1

    value = float(total)
    rep_err = abs(Fraction(value) - total)
    return ApproxReal(value, _float_upper(2 * abs(term_next) + rep_err))


def kummer_residual(a, b, x, tol: float) -> ApproxReal:
    """|e^{-x} 1F1(a;b;x) - 1F1(b-a;b;-x)| with a combined error bound.

    Contract (Kummer's transformation): the value is at most err + tol.
    """
    aq, bq, xq = Fraction(a), Fraction(b), Fraction(x)
    left = hypergeom_1f1(aq, bq, xq, tol)
    right = hypergeom_1f1(bq - aq, bq, -xq, tol)

    xf = float(xq)
    w = math.exp(-xf)
    lhs_value = w * left.value
    d = _exp_rel_bound(xf)
    lhs_err = (
        Fraction(w) * (Fraction(left.err) * (1 + d) + Fraction(abs(left.value)) * d)
        + Fraction(math.ulp(lhs_value))
    )
    value = abs(lhs_value - right.value)
    bound = lhs_err + Fraction(right.err) + Fraction(math.ulp(max(value, abs(lhs_value))))
    return ApproxReal(value, _float_upper(bound))


# ---------------------------------------------------------------------------
# quadrature


@dataclass(frozen=True)
class QuadratureResult:
    """A quadrature value whose err is the last Simpson refinement difference."""

    value: ApproxReal
    nodes_used: int


_BASE_INTERVALS = 16
_MAX_INTERVALS = 1 << 20


def cesaro_integrand_forms(theta: float, n: int, r: int) -> tuple[float, float]:
    """Both integrand forms of the integral representation at one angle.

    The first is the complex-exponential form Im(e^{e^{e^{i theta}}}
    e^{r e^{i theta}}) sin(n theta); the second is its expanded real form
    e^{e^{cos t} cos(sin t) + r cos t} [cos(B) sin(r sin t) + sin(B) cos(r sin t)]
    sin(n t) with B = e^{cos t} sin(sin t).
    """
    c = math.cos(theta)
    s = math.sin(theta)
    sn = math.sin(n * theta)
    w = complex(c, s)
    u = cmath.exp(w)
    complex_form = cmath.exp(u + r * w).imag * sn
    ec = math.exp(c)
    big_a = ec * math.cos(s)
    big_b = ec * math.sin(s)
    real_form = (
        math.exp(big_a + r * c)
        * (math.cos(big_b) * math.sin(r * s) + math.sin(big_b) * math.cos(r * s))
        * sn
    )
    return complex_form, real_form


def _simpson(f, n_intervals: int) -> float:
    h = math.pi / n_intervals
    total = f(0.0) + f(math.pi)
    for i in range(1, n_intervals):
        total += f(i * h) * (4.0 if i % 2 else 2.0)
    return total * h / 3.0


def cesaro_integral(n: int, r: int, tol: float) -> QuadratureResult:
    """B_{n,r} via the integral representation

        B_{n,r} = (2 n! / (pi e)) Im int_0^pi e^{e^{e^{i t}}} e^{r e^{i t}} sin(n t) dt

    by composite Simpson with node doubling until successive scaled estimates
    differ by at most tol/2 * max(1, |estimate|).  At every node both
    integrand forms are evaluated and must agree within 1e-12 * max(1, |f|)
    (the scale factor keeps the check meaningful where |f| is so large that
    1e-12 falls below one ulp); disagreement raises InconsistencyError.

    The representation needs n >= 1: the sin(n theta) factor makes the
    integral vanish identically at n = 0 while B_{0,r} = 1.
    """
    _check_natural(n=n, r=r)
    if n < 1:
        raise DomainError("the integral representation needs n >= 1")
    _check_tol(tol)

    def integrand(theta: float) -> float:
        complex_form, real_form = cesaro_integrand_forms(theta, n, r)
        if abs(complex_form - real_form) > 1e-12 * max(1.0, abs(complex_form)):
            raise InconsistencyError(
                f"integrand forms disagree at theta={theta!r}: "
                f"{complex_form!r} vs {real_form!r}"
            )
        return complex_form

    scale = 2.0 * math.factorial(n) / (math.pi * math.e)
    previous = None
    intervals = _BASE_INTERVALS
    while intervals <= _MAX_INTERVALS:
        estimate = _simpson(integrand, intervals) * scale
        if previous is not None:
            diff = abs(estimate - previous)
            if diff <= 0.5 * tol * max(1.0, abs(estimate)):
                err = diff + 1e-13 * max(1.0, abs(estimate))
                return QuadratureResult(ApproxReal(estimate, err), intervals)
        previous = estimate
        intervals *= 2
    raise ConvergenceError(
        f"Simpson refinement hit the {_MAX_INTERVALS}-interval cap for (n={n}, r={r})"
    )


def sin_moment(j: int, n: int, tol: float) -> ApproxReal:
    """Im int_0^pi e^{j e^{i t}} sin(n t) dt, i.e.
    int_0^pi e^{j cos t} sin(j sin t) sin(n t) dt.

    Contract: equals (pi/2) j^n / n! within tol (absolute).
    """
    _check_natural(j=j, n=n)
    if n < 1:
        raise DomainError("sin_moment needs n >= 1")
    _check_tol(tol)

    def integrand(theta: float) -> float:
        return (
            math.exp(j * math.cos(theta))
            * math.sin(j * math.sin(theta))
            * math.sin(n * theta)
        )

    previous = None
    intervals = _BASE_INTERVALS
    while intervals <= _MAX_INTERVALS:
        estimate = _simpson(integrand, intervals)
        if previous is not None:
            diff = abs(estimate - previous)
            if diff <= 0.5 * tol:
                return ApproxReal(estimate, diff + 1e-13 * max(1.0, abs(estimate)))
        previous = estimate
        intervals *= 2
    raise ConvergenceError(
        f"Simpson refinement hit the {_MAX_INTERVALS}-interval cap for (j={j}, n={n})"
    )


# ---------------------------------------------------------------------------
# root structure and the maximizing index


class RootednessReport(NamedTuple):
    degree: int
    distinct_neg_roots: int
    root_at_zero: bool


def real_rootedness_report(n: int, r: int) -> RootednessReport:
    """Sturm-certified root structure of B_{n,r}(x).

    Contract: for r >= 1 there are n distinct negative roots and no zero
    root; for r = 0 the root 0 is present and there are n - 1 distinct
    negative roots (none when n = 1).
    """
    _check_natural(n=n, r=r)
    if n == 0:
        raise DomainError("constant polynomial: no root report for n = 0")
    poly = rbell_poly(n, r).poly
    root_at_zero = poly.constant_term == 0
    nonpositive = sturm_root_count(poly, -math.inf, 0)
    return RootednessReport(poly.degree, nonpositive - int(root_at_zero), root_at_zero)


@dataclass(frozen=True)
class MaxIndexReport:
    """Maximizers of k -> {n+r, k}_r over the Broder range [r, n+r], with the
    ratio estimate B_{n+1,r}/B_{n,r} - (r+1) they should track.

    The estimate is centered on the coefficient index of B_{n,r}(x), which
    runs from 0 to n, so bound_holds is true iff at least one maximizer K
    satisfies |(K - r) - ratio_estimate| < 1 (exact rational comparison);
    with a tie the bound can genuinely fail for the other maximizer.
    """

    n: int
    r: int
    maximizers: tuple[int, ...]
    ratio_estimate: Fraction
    bound_holds: bool


def max_index(n: int, r: int) -> MaxIndexReport:
    _check_natural(n=n, r=r)
    if n < 1:
        raise DomainError("max_index needs n >= 1")
    row = {k: _s2r(n + r, k, r) for k in range(r, n + r + 1)}
    best = max(row.values())
    maximizers = tuple(k for k, v in row.items() if v == best)
    ratio = Fraction(rbell_number(n + 1, r), rbell_number(n, r)) - (r + 1)
    holds = any(abs(k - r - ratio) < 1 for k in maximizers)
    return MaxIndexReport(n, r, maximizers, ratio, holds)
