"""Jump-count distributions over a family of cyclic binary sequences.

A sequence of m zeros and n ones, read cyclically, has an even number tau
of boundaries between unequal adjacent digits.  The count of sequences with
a given tau has the closed form (tau/2) * (1/m + 1/n) * C(m, tau/2) * C(n, tau/2);
this module evaluates it exactly, together with its recurrence form, the
all-words row sums, and the census of sequences by block-structure type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateFamily, InvalidTau
from .exactmath import SequenceFamily, binomial, partitions_exact


@dataclass(frozen=True)
class CountDistribution:
    """Exact map from an integer index to a count, with declared index semantics."""

    family: SequenceFamily
    index_kind: str  # "tau" | "occurrences" | "weight"
    entries: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def __getitem__(self, index: int) -> int:
        return self.entries.get(index, 0)


@dataclass(frozen=True)
class SequenceType:
    """Descending block-length partitions of the zero runs and the one runs."""

    zero_blocks: tuple[int, ...]
    one_blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.zero_blocks) != len(self.one_blocks):
            raise ValueError("zero and one partitions must share their height")

    @property
    def height(self) -> int:
        return len(self.zero_blocks)


def _check_family(m: int, n: int) -> None:
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError(f"need m, n >= 0 and m + n >= 1, got ({m}, {n})")
    if m == 0 or n == 0:
        raise DegenerateFamily(
            f"family ({m}, {n}) holds a single constant sequence with zero jumps"
        )


def _check_tau(tau: int) -> int:
    if tau < 2 or tau % 2 != 0:
        raise InvalidTau(f"jump count must be even and >= 2, got {tau}")
    return tau // 2


def t_number(m: int, n: int, tau: int) -> int:
    """Number of sequences with m zeros, n ones and exactly tau cyclic jumps."""
    _check_family(m, n)
    h = _check_tau(tau)
    if h > min(m, n):
        return 0
    num = (m + n) * h * binomial(m, h) * binomial(n, h)
    q, r = divmod(num, m * n)
    assert r == 0, "jump count formula must divide exactly"
    return q


def t_number_by_recurrence(m: int, n: int, tau: int) -> int:
    """Same contract as t_number, via the ratio recurrence seeded at tau = 2."""
    _check_family(m, n)
    h = _check_tau(tau)
    if h > min(m, n):
        return 0
    value = m + n  # tau = 2: the N rotations of 0..01..1
    t = 2
    while t < tau:
        num = value * 4 * (m - t // 2) * (n - t // 2)
        q, r = divmod(num, t * (t + 2))
        assert r == 0, "recurrence step must divide exactly"
        value = q
        t += 2
    return value


def t_distribution(m: int, n: int) -> CountDistribution:
    """Full jump distribution of the family; degenerate families give {0: 1}."""
    family = SequenceFamily(m, n)
    if family.is_degenerate:
        return CountDistribution(family, "tau", {0: 1})
    entries = {tau: t_number(m, n, tau) for tau in range(2, 2 * min(m, n) + 1, 2)}
    return CountDistribution(family, "tau", entries)


def t_sum_over_n(N: int, tau: int) -> int:
    """Sequences with tau jumps among all 2^N words: 2 * C(N, tau).

    tau = 0 is allowed and counts the two constant words.
    """
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    if tau < 0 or tau % 2 != 0:
        raise InvalidTau(f"jump count must be even and >= 0, got {tau}")
    return 2 * binomial(N, tau)


def _type_multiplicity(N: int, t: SequenceType) -> int:
    """Sequences carrying a given type: N h! (h-1)! over the block-repetition factorials."""
    h = t.height
    denom = 1
    for blocks in (t.zero_blocks, t.one_blocks):
        count = 1
        for a, b in zip(blocks, blocks[1:]):
            if a == b:
                count += 1
            else:
                denom *= math.factorial(count)
                count = 1
        denom *= math.factorial(count)
    num = N * math.factorial(h) * math.factorial(h - 1)
    q, r = divmod(num, denom)
    assert r == 0, "type multiplicity must be integral"
    return q


def type_census(m: int, n: int) -> list[tuple[SequenceType, int]]:
    """All block-structure types of the family with their sequence multiplicities.

    Types are listed in lexicographic order of (height, zero blocks, one blocks);
    multiplicities sum to C(m+n, m).
    """
    _check_family(m, n)
    N = m + n
    out: list[tuple[SequenceType, int]] = []
    for h in range(1, min(m, n) + 1):
        for zeros in partitions_exact(m, h):
            for ones in partitions_exact(n, h):
                t = SequenceType(zeros, ones)
                out.append((t, _type_multiplicity(N, t)))
    out.sort(key=lambda pair: (pair[0].height, pair[0].zero_blocks, pair[0].one_blocks))
    return out
