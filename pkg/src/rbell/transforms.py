"""Binomial and Hankel transforms, log-convexity, and Cigler's determinants.

The transforms accept sequences of ints or of IntPolynomials; both rings
support the integer scalar multiples and sums the definitions need.
"""

from __future__ import annotations

import math

from .algebra import IntPolynomial, fraction_free_det, pochhammer
from .bell import rbell_number, rbell_poly
from .errors import DomainError
from .stirling import _check_natural, binomial


def binomial_transform(seq):
    """b_n = sum_k (-1)^(n-k) C(n, k) a_k, termwise over the given prefix."""
    out = []
    for n in range(len(seq)):
        acc = 0
        for k in range(n + 1):
            term = binomial(n, k) * seq[k]
            acc = acc + term if (n - k) % 2 == 0 else acc - term
        out.append(acc)
    return out


def inverse_binomial_transform(seq):
    """a_n = sum_k C(n, k) b_k, the inverse of :func:`binomial_transform`."""
    return [
        sum(binomial(n, k) * seq[k] for k in range(n + 1)) for n in range(len(seq))
    ]


def hankel_det(seq, n: int, k: int = 0):
    """Determinant of the n x n matrix with entry (i, j) = seq[i + j + k]."""
    _check_natural(n=n, k=k)
    if n < 1:
        raise DomainError("hankel_det needs a positive matrix size")
    if len(seq) < 2 * (n - 1) + k + 1:
        raise DomainError(
            f"need at least {2 * (n - 1) + k + 1} terms for size {n} offset {k}, "
            f"got {len(seq)}"
        )
    return fraction_free_det([[seq[i + j + k] for j in range(n)] for i in range(n)])


def hankel_transform_rbell(r: int, n_max: int) -> list[int]:
    """Hankel transform of (B_{m,r})_m: term n is the (n+1) x (n+1) determinant.

    Contract: term n equals 0! 1! ... n! regardless of r.
    """
    _check_natural(r=r, n_max=n_max)
    seq = [rbell_number(m, r) for m in range(2 * n_max + 1)]
    return [hankel_det(seq, n + 1) for n in range(n_max + 1)]


def log_convexity_check(seq) -> bool:
    """True iff seq[n-1] seq[n+1] >= seq[n]^2 for every interior index."""
    if len(seq) < 3:
        raise DomainError("log-convexity needs at least three terms")
    return all(
        seq[n - 1] * seq[n + 1] >= seq[n] ** 2 for n in range(1, len(seq) - 1)
    )


def cigler_d(n: int, k: int, r: int) -> tuple[IntPolynomial, IntPolynomial]:
    """Cigler's shifted Hankel determinant d(n, k) = det(B_{i+j+k,r}(x)) and
    its closed form, as a (computed, expected) pair.

    Closed forms, with (r)_i the rising factorial:

        d(n, 0) = x^C(n,2) prod_{j<n} j!
        d(n, 1) = x^C(n,2) prod_{j<n} j! . sum_{j=0..n} C(n, j) x^j (r)_{n-j}
    """
    _check_natural(n=n, k=k, r=r)
    if n < 1:
        raise DomainError("cigler_d needs n >= 1")
    if k not in (0, 1):
        raise DomainError("cigler_d is stated for k in {0, 1} only")
    polys = [rbell_poly(m, r).poly for m in range(2 * (n - 1) + k + 1)]
    computed = hankel_det(polys, n, k)

    prefactor = math.prod(math.factorial(j) for j in range(n))
    expected = IntPolynomial.monomial(n * (n - 1) // 2, prefactor)
    if k == 1:
        series = IntPolynomial(
            [binomial(n, j) * int(pochhammer(r, n - j)) for j in range(n + 1)]
        )
        expected = expected * series
    return computed, expected
