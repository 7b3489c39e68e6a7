"""r-Bell numbers and polynomials via several independent routes.

The r-Bell polynomial is B_{n,r}(x) = sum_k {n+r, k+r}_r x^k and the r-Bell
number is its value at x = 1.  Besides the defining coefficient route, the
polynomials are rebuilt from the derivative recurrence, from ordinary Bell
polynomials, and from the corrected cross-parameter step, so that the verify
suites can compare genuinely different computations.

Identity operations (Carlitz composition/inversion, the Whitehead-table
recurrence) return the computed right-hand side and leave the comparison to
the caller; that keeps the verification plumbing uniform.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import IntPolynomial
from .errors import DomainError
from .stirling import _check_natural, _s1r, _s2r, binomial


@dataclass(frozen=True)
class RBellPoly:
    """An r-Bell polynomial tagged with its indices.

    Invariants (asserted by the test suite, not at construction): monic of
    degree n, constant term r^n, and all coefficients positive for n >= 1
    except the constant term when r = 0.
    """

    n: int
    r: int
    poly: IntPolynomial


def rbell_poly(n: int, r: int) -> RBellPoly:
    """B_{n,r}(x) directly from its r-Stirling coefficients."""
    _check_natural(n=n, r=r)
    return RBellPoly(n, r, IntPolynomial([_s2r(n + r, k + r, r) for k in range(n + 1)]))


def rbell_poly_rec(n: int, r: int) -> RBellPoly:
    """B_{n,r}(x) built solely from the derivative recurrence

        B_{n,r}(x) = x (B'_{n-1,r}(x) + B_{n-1,r}(x)) + r B_{n-1,r}(x)

    starting at B_{0,r} = 1.
    """
    _check_natural(n=n, r=r)
    x = IntPolynomial((0, 1))
    p = IntPolynomial((1,))
    for _ in range(n):
        p = x * (p.derivative() + p) + r * p
    return RBellPoly(n, r, p)


def rbell_number(n: int, r: int) -> int:
    """B_{n,r} = B_{n,r}(1)."""
    poly = rbell_poly(n, r).poly
    return poly(1)


def bell_poly(n: int) -> IntPolynomial:
    """Ordinary Bell polynomial B_n(x), the r = 0 case."""
    return rbell_poly(n, 0).poly


def rbell_from_bell(n: int, r: int) -> IntPolynomial:
    """B_{n,r}(x) as a binomial sum of ordinary Bell polynomials:

        B_{n,r}(x) = sum_k r^k C(n, k) B_{n-k}(x).
    """
    _check_natural(n=n, r=r)
    acc = IntPolynomial()
    for k in range(n + 1):
        acc = acc + (r**k * binomial(n, k)) * bell_poly(n - k)
    return acc


def cross_r_step(n: int, r: int) -> IntPolynomial:
    """B_{n,r}(x) reconstructed from the (r-1)-row via

        x B_{n,r}(x) = B_{n+1,r-1}(x) - (r-1) B_{n,r-1}(x),

    the polynomial consequence of Broder's Stirling-level cross-parameter
    identity.  A frequently printed simplified form omits the factor x on the
    left; see :func:`cross_r_printed` and the verify suite's KNOWN-ERRATUM
    check for that misprint.
    """
    _check_natural(n=n, r=r)
    if r < 1:
        raise DomainError("cross_r_step needs r >= 1")
    numerator = rbell_poly(n + 1, r - 1).poly - (r - 1) * rbell_poly(n, r - 1).poly
    return numerator.divide_by_x()


def cross_r_printed(n: int, r: int) -> IntPolynomial:
    """The misprinted cross-parameter step B_{n,r-1}(x) - (r-1) B_{n-1,r-1}(x).

    Retained only so the verify suite can document that this commonly printed
    form contradicts the tables (it yields 3 instead of 10 for n = r = 2).
    """
    _check_natural(n=n, r=r)
    if n < 1 or r < 1:
        raise DomainError("cross_r_printed needs n >= 1 and r >= 1")
    return rbell_poly(n, r - 1).poly - (r - 1) * rbell_poly(n - 1, r - 1).poly


def carlitz_compose(n: int, m: int, r: int) -> int:
    """Carlitz's composition sum_{j=0..m} {m+r, j+r}_r B_{n,r+j}.

    Contract: equals rbell_number(n + m, r).
    """
    _check_natural(n=n, m=m, r=r)
    return sum(_s2r(m + r, j + r, r) * rbell_number(n, r + j) for j in range(m + 1))


def carlitz_inverse(n: int, m: int, r: int) -> int:
    """Carlitz's inversion sum_{j=0..m} (-1)^(m-j) [m+r, j+r]_r B_{n+j,r}.

    Contract: equals rbell_number(n, r + m).
    """
    _check_natural(n=n, m=m, r=r)
    total = 0
    for j in range(m + 1):
        term = _s1r(m + r, j + r, r) * rbell_number(n + j, r)
        total += term if (m - j) % 2 == 0 else -term
    return total


def whitehead_step(n: int, r: int) -> int:
    """r B_{n,r} + B_{n,r+1}; contract: equals rbell_number(n + 1, r)."""
    _check_natural(n=n, r=r)
    return r * rbell_number(n, r) + rbell_number(n, r + 1)


def whitehead_row_sum(n: int) -> int:
    """The anti-diagonal row sum sum_{i=1..n} B_{i,n-i}."""
    _check_natural(n=n)
    if n < 1:
        raise DomainError("whitehead_row_sum needs n >= 1")
    return sum(rbell_number(i, n - i) for i in range(1, n + 1))


def rbell_table(n_max: int, r_max: int) -> list[list[int]]:
    """Matrix with entry (r, n) = B_{n,r}, rows r = 0..r_max, columns n = 0..n_max."""
    _check_natural(n_max=n_max, r_max=r_max)
    return [[rbell_number(n, r) for n in range(n_max + 1)] for r in range(r_max + 1)]
