"""r-Stirling numbers of both kinds, binomial coefficients, and the
horizontal generating-function identity.

Conventions follow Broder's triangles.  {n, k}_r counts partitions of
{1, ..., n} into k nonempty blocks with the elements 1..r in distinct blocks;
[n, k]_r counts permutations with k cycles and 1..r in distinct cycles.
Out-of-range indices yield 0, so identity sums can run over natural ranges
without guards.  The sole exception to the unshifted convention is
:func:`stirling2r_explicit`, which takes the shifted indices (n, k, r) and
returns {n+r, k+r}_r; keeping the shift explicit avoids off-by-r bugs.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .algebra import IntPolynomial, falling_factorial_poly
from .errors import DomainError, InconsistencyError


def _check_natural(**kwargs: int) -> None:
    for name, v in kwargs.items():
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise DomainError(f"{name} must be a natural number, got {v!r}")


def binomial(n: int, k: int) -> int:
    """C(n, k); 0 when k > n."""
    _check_natural(n=n, k=k)
    return math.comb(n, k)


@lru_cache(maxsize=None)
def _s2r(n: int, k: int, r: int) -> int:
    if n < r or k < r or k > n:
        return 0
    if n == r:
        return 1 if k == r else 0
    return k * _s2r(n - 1, k, r) + _s2r(n - 1, k - 1, r)


def stirling2r(n: int, k: int, r: int) -> int:
    """r-Stirling number of the second kind {n, k}_r (unshifted indices)."""
    _check_natural(n=n, k=k, r=r)
    return _s2r(n, k, r)


@lru_cache(maxsize=None)
def _s1r(n: int, k: int, r: int) -> int:
    if n < r or k < r or k > n:
        return 0
    if n == r:
        return 1 if k == r else 0
    return (n - 1) * _s1r(n - 1, k, r) + _s1r(n - 1, k - 1, r)


def stirling1r(n: int, k: int, r: int) -> int:
    """Unsigned r-Stirling number of the first kind [n, k]_r (unshifted)."""
    _check_natural(n=n, k=k, r=r)
    return _s1r(n, k, r)


def stirling2r_explicit(n: int, k: int, r: int) -> int:
    """{n+r, k+r}_r by the alternating sum

        k! {n+r, k+r}_r = sum_{j=0..k} (-1)^(k-j) C(k, j) (j+r)^n.

    Note the SHIFTED index convention: arguments (n, k, r) address the entry
    whose unshifted form is stirling2r(n + r, k + r, r).
    """
    _check_natural(n=n, k=k, r=r)
    total = 0
    for j in range(k + 1):
        term = math.comb(k, j) * (j + r) ** n
        total += term if (k - j) % 2 == 0 else -term
    quot, rem = divmod(total, math.factorial(k))
    if rem:
        raise InconsistencyError(
            f"alternating sum for (n={n}, k={k}, r={r}) is not divisible by k!"
        )
    return quot


def horizontal_check(n: int, r: int) -> IntPolynomial:
    """Residual of the horizontal generating function

        (x+r)^n = sum_k {n+r, k+r}_r x^(k falling)

    as a polynomial; the contract is the zero polynomial.
    """
    _check_natural(n=n, r=r)
    lhs = IntPolynomial((r, 1)) ** n
    rhs = IntPolynomial()
    for k in range(n + 1):
        c = _s2r(n + r, k + r, r)
        if c:
            rhs = rhs + c * falling_factorial_poly(k)
    return lhs - rhs
