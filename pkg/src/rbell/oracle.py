"""Brute-force ground truth: enumerate every partition of {1, ..., n+r} whose
first r elements lie in distinct blocks, histogrammed by block count.

Partitions are walked as restricted growth strings: element i may join any
block used so far or open block max+1, with the first r elements pre-pinned to
blocks 0..r-1.  Each partition is visited individually; no counting shortcut
shared with the Stirling recurrences is used, so this module stays an
independent check on them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .stirling import _check_natural

_MAX_ELEMENTS = 13


@dataclass(frozen=True)
class PartitionCounts:
    """Histogram of restricted partitions by total block count."""

    n: int
    r: int
    by_blocks: dict[int, int]
    total: int


def enumerate_restricted_partitions(n: int, r: int) -> PartitionCounts:
    """Counts of partitions of an (n+r)-set keeping the first r elements apart.

    Contract: by_blocks[k+r] = stirling2r(n+r, k+r, r) and total = B_{n,r}.
    Guarded at n + r <= 13 (about 27.6M partitions in the worst case).
    """
    _check_natural(n=n, r=r)
    if n + r > _MAX_ELEMENTS:
        raise DomainError(f"enumeration guard: n + r must stay <= {_MAX_ELEMENTS}")

    counts = [0] * (n + r + 2)

    def walk(i: int, m: int) -> None:
        # m is the largest block label used so far; choices are 0..m+1.
        if i == n - 1:
            c = counts
            for _ in range(m + 1):
                c[m + 1] += 1
            c[m + 2] += 1
            return
        for label in range(m + 2):
            walk(i + 1, m if label <= m else m + 1)

    if n == 0:
        counts[r] = 1
    else:
        walk(0, r - 1)

    lo = max(r, 1) if n + r >= 1 else 0
    by_blocks = {k: counts[k] for k in range(lo, n + r + 1)}
    return PartitionCounts(n, r, by_blocks, sum(by_blocks.values()))
