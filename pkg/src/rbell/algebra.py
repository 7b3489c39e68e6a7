"""Exact-arithmetic substrate: integer polynomials, truncated rational power
series, fraction-free determinants, Sturm root counting and factorial symbols.

Integers are plain Python ints and rationals are `fractions.Fraction`, so every
value here is exact.  The one float-bearing type, :class:`ApproxReal`, never
participates in arithmetic; it only reports results of the numeric routines in
:mod:`rbell.analytic` together with a rigorous absolute error bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DomainError, InconsistencyError

Scalar = Union[int, Fraction]


class IntPolynomial:
    """Dense univariate polynomial over int, coefficients lowest degree first.

    The coefficient tuple is canonical: trailing zeros are stripped and the
    zero polynomial is the empty tuple, with degree -1 by convention.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise DomainError(f"integer coefficient expected, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        if degree < 0:
            raise DomainError("monomial degree must be nonnegative")
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def coefficient(self, k: int) -> int:
        """Coefficient of x^k, 0 beyond the degree."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self == IntPolynomial((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPolynomial", self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if not isinstance(n, int) or n < 0:
            raise DomainError("polynomial exponent must be a natural number")
        result = IntPolynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def __call__(self, x: Scalar) -> Scalar:
        """Evaluate by Horner's rule; exact for int or Fraction arguments."""
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divide_by_x(self) -> "IntPolynomial":
        """Exact division by x; a nonzero constant term is an identity failure."""
        if self.constant_term != 0:
            raise InconsistencyError(
                f"polynomial {self.coeffs} has nonzero constant term, not divisible by x"
            )
        return IntPolynomial(self.coeffs[1:])

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"


def _as_poly(v) -> "IntPolynomial":
    if isinstance(v, IntPolynomial):
        return v
    if isinstance(v, int) and not isinstance(v, bool):
        return IntPolynomial((v,))
    return NotImplemented


@dataclass(frozen=True)
class RationalSeries:
    """Power series over Fraction truncated at a fixed order.

    ``coeffs[k]`` is the coefficient of z^k and has length ``order + 1``;
    arithmetic truncates to the shorter order and never reads beyond it.
    """

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise DomainError("series order must be a natural number")
        if len(self.coeffs) != self.order + 1:
            raise DomainError(
                f"series of order {self.order} needs {self.order + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def build(cls, values: Iterable[Scalar], order: int | None = None) -> "RationalSeries":
        """Series from leading coefficients, zero-padded up to ``order``."""
        cs = [Fraction(v) for v in values]
        if order is None:
            order = len(cs) - 1
            if order < 0:
                raise DomainError("empty coefficient list and no order given")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        return cls(order, tuple(cs))

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        if not isinstance(other, RationalSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return RationalSeries(
            n, tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1]))
        )

    def __neg__(self) -> "RationalSeries":
        return RationalSeries(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        if not isinstance(other, RationalSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return RationalSeries(n, tuple(out))


def series_exp(f: RationalSeries) -> RationalSeries:
    """exp(f) to the truncation order of f, for series with zero constant term.

    Uses the derivative recurrence g' = f'.g, i.e.
    n.g_n = sum_{k=1..n} k.f_k.g_{n-k} with g_0 = 1.
    """
    if f.coeffs[0] != 0:
        raise DomainError("series_exp requires a zero constant term")
    n_max = f.order
    g = [Fraction(1)] + [Fraction(0)] * n_max
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            fk = f.coeffs[k]
            if fk:
                acc += k * fk * g[n - k]
        g[n] = acc / n
    return RationalSeries(n_max, tuple(g))


@dataclass(frozen=True)
class ApproxReal:
    """A float paired with an absolute error bound.

    Contract: the true mathematical value lies in [value - err, value + err].
    """

    value: float
    err: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.value) or not math.isfinite(self.err) or self.err < 0:
            raise DomainError(f"ApproxReal needs finite value and err >= 0, got {self}")

    def encloses(self, exact: Scalar) -> bool:
        """Exact-rational membership test of ``exact`` in the certified interval."""
        return abs(Fraction(self.value) - Fraction(exact)) <= Fraction(self.err)


def pochhammer(x: Scalar, n: int) -> Fraction:
    """Rising factorial (x)_n = x(x+1)...(x+n-1), with (x)_0 = 1."""
    if n < 0:
        raise DomainError("pochhammer index must be a natural number")
    acc = Fraction(1)
    xf = Fraction(x)
    for i in range(n):
        acc *= xf + i
    return acc


def falling_factorial_poly(n: int) -> IntPolynomial:
    """The polynomial x(x-1)...(x-n+1); the empty product for n = 0."""
    if n < 0:
        raise DomainError("falling factorial index must be a natural number")
    acc = IntPolynomial((1,))
    for i in range(n):
        acc = acc * IntPolynomial((-i, 1))
    return acc


# ---------------------------------------------------------------------------
# determinants


def fraction_free_det(rows: Sequence[Sequence[int | IntPolynomial]]):
    """Exact determinant of a square matrix of ints or of IntPolynomials.

    Integer matrices go through Bareiss fraction-free elimination; polynomial
    matrices (only ever small here) through cofactor expansion.
    """
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise DomainError("determinant requires a nonempty square matrix")
    if any(isinstance(e, IntPolynomial) for row in rows for e in row):
        m = [[_as_poly(e) for e in row] for row in rows]
        return _det_cofactor(m)
    return _det_bareiss([list(row) for row in rows])


def _det_bareiss(m: list[list[int]]) -> int:
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            head = row_i[k]
            for j in range(k + 1, n):
                # Bareiss: the division by the previous pivot is always exact.
                row_i[j] = (pivot * row_i[j] - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _det_cofactor(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    acc = None
    for j in range(n):
        e = m[0][j]
        if not e:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = e * _det_cofactor(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc if acc is not None else IntPolynomial()


# ---------------------------------------------------------------------------
# Sturm chains over Fraction coefficient lists


def _frac_coeffs(p: IntPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _trim(cs: list[Fraction]) -> list[Fraction]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = _trim(a[:])
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while _trim(rem) and len(rem) >= len(b):
        shift = len(rem) - len(b)
        factor = rem[-1] / lead
        quo[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        rem.pop()
    return _trim(quo), _trim(rem)


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(a[:]), _trim(b[:])
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _poly_deriv(a: list[Fraction]) -> list[Fraction]:
    return [k * c for k, c in enumerate(a) if k > 0]


def _eval_fracs(cs: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """p / gcd(p, p'), normalized to a primitive integer polynomial with
    positive leading coefficient.  Equals p (up to content) iff all roots of p
    are simple."""
    if p.is_zero():
        raise DomainError("zero polynomial has no square-free part")
    cs = _frac_coeffs(p)
    g = _poly_gcd(cs, _poly_deriv(cs))
    quo, rem = _poly_divmod(cs, g)
    if rem:
        raise InconsistencyError("gcd does not divide its polynomial")
    lcm_den = 1
    for c in quo:
        lcm_den = lcm_den * c.denominator // math.gcd(lcm_den, c.denominator)
    ints = [int(c * lcm_den) for c in quo]
    content = 0
    for c in ints:
        content = math.gcd(content, c)
    if ints[-1] < 0:
        content = -content
    return IntPolynomial([c // content for c in ints])


def _sturm_chain(p0: list[Fraction]) -> list[list[Fraction]]:
    chain = [p0, _poly_deriv(p0)]
    while chain[-1]:
        _, r = _poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _sign_at(cs: list[Fraction], point) -> int:
    if point == math.inf:
        v = cs[-1]
    elif point == -math.inf:
        v = cs[-1] if (len(cs) - 1) % 2 == 0 else -cs[-1]
    else:
        v = _eval_fracs(cs, Fraction(point))
    return (v > 0) - (v < 0)


def _variations(chain: list[list[Fraction]], point) -> int:
    signs = [s for s in (_sign_at(c, point) for c in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_root_count(p: IntPolynomial, lo, hi) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi].

    Endpoints may be Fractions, ints, or +/-math.inf.  The chain is built on
    the square-free part of p, so multiple roots count once.
    """
    if p.is_zero():
        raise DomainError("root counting needs a nonzero polynomial")
    for e in (lo, hi):
        if isinstance(e, float) and math.isfinite(e):
            raise DomainError("finite endpoints must be exact (int or Fraction)")
    if not _lt(lo, hi):
        raise DomainError(f"empty interval ({lo}, {hi}]")
    if p.degree == 0:
        return 0
    sf = squarefree_part(p)
    chain = _sturm_chain(_frac_coeffs(sf))
    return _variations(chain, lo) - _variations(chain, hi)


def _lt(a, b) -> bool:
    if a == -math.inf:
        return b != -math.inf
    if b == math.inf:
        return a != math.inf
    if a == math.inf or b == -math.inf:
        return False
    return Fraction(a) < Fraction(b)
