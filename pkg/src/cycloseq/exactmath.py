"""Arbitrary-precision integer kernel.

Binomials, falling factorials, Stirling numbers of the second kind,
composition counts (ordered partitions, De Moivre numbers) and
exact-part partition counts.  Everything here is a pure function of its
arguments and exact at any magnitude; Python ints carry the arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


def binomial(a: int, b: int) -> int:
    """C(a, b), total on its domain: 0 whenever b < 0 or b > a.

    Out-of-range indices vanish instead of erroring because the counting
    sums freely run indices past their natural bounds and rely on the
    vanishing terms.
    """
    if a < 0:
        raise ValueError(f"binomial needs a >= 0, got a={a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def falling_factorial(x: int, k: int) -> int:
    """x(x-1)...(x-k+1), with the empty product equal to 1."""
    if k < 0:
        raise ValueError(f"falling_factorial needs k >= 0, got k={k}")
    out = 1
    for i in range(k):
        out *= x - i
    return out


@lru_cache(maxsize=None)
def stirling2(r: int, l: int) -> int:
    """Stirling number of the second kind S(r, l).

    S(0,0) = 1, S(r,0) = 0 for r > 0 and S(r,l) = 0 for l > r.
    """
    if r < 0 or l < 0:
        raise ValueError("stirling2 needs nonnegative arguments")
    if r == 0 and l == 0:
        return 1
    if r == 0 or l == 0 or l > r:
        return 0
    return l * stirling2(r - 1, l) + stirling2(r - 1, l - 1)


def demoivre(h: int, w: int) -> int:
    """Number of compositions of w into exactly h ordered positive parts.

    Equals C(w-1, h-1).  The empty composition counts once: M(0, 0) = 1.
    This corner convention makes the column-deletion coefficients a single
    formula with no zero-index case split (see coeffs).
    """
    if h == 0 and w == 0:
        return 1
    if h <= 0 or w <= 0:
        return 0
    return binomial(w - 1, h - 1)


@lru_cache(maxsize=None)
def partition_count(h: int, w: int) -> int:
    """Number of partitions of w into exactly h positive parts, order ignored."""
    if h == 0 and w == 0:
        return 1
    if h <= 0 or w <= 0 or h > w:
        return 0
    # parts >= 1: either a part equal to 1 exists, or subtract 1 from every part
    return partition_count(h - 1, w - 1) + partition_count(h, w - h)


def compositions(w: int, h: int) -> Iterator[tuple[int, ...]]:
    """All compositions of w into exactly h ordered positive parts."""
    if h == 0:
        if w == 0:
            yield ()
        return
    if h == 1:
        if w >= 1:
            yield (w,)
        return
    for first in range(1, w - h + 2):
        for rest in compositions(w - first, h - 1):
            yield (first,) + rest


def partitions_exact(w: int, h: int, _max: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of w into exactly h parts, in descending part order."""
    if _max is None:
        _max = w
    if h == 0:
        if w == 0:
            yield ()
        return
    upper = min(_max, w - h + 1)
    for first in range(upper, 0, -1):
        for rest in partitions_exact(w - first, h - 1, first):
            yield (first,) + rest


@dataclass(frozen=True)
class SequenceFamily:
    """The pair (m zeros, n ones) classifying the C(m+n, n) cyclic sequences."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise ValueError(f"need m, n >= 0 and m + n >= 1, got ({self.m}, {self.n})")

    @property
    def N(self) -> int:
        return self.m + self.n

    @property
    def is_degenerate(self) -> bool:
        """True when one digit is absent and the family holds a single constant sequence."""
        return self.m == 0 or self.n == 0

    def size(self) -> int:
        return binomial(self.N, self.m)
