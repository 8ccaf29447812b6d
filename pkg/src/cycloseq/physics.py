"""Ring partition functions and memory-walk weight polynomials.

A ring of N two-state sites with nearest-neighbour coupling has energy
J(-N + 2 tau), tau being the number of antiparallel adjacent pairs, so the
Boltzmann sum factors through the exact jump counts.  The same counts split
a walk's binomial path count by the number of direction changes, which is
what a one-step memory weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateFamily, InvalidDisplacement
from .tnumbers import t_distribution


def ising_partition_fixed(N: int, n: int, nu: float) -> float:
    """Boltzmann sum over the C(N, n) configurations with n down spins.

    nu is the dimensionless coupling J/kT; the weight of a configuration
    with tau antiparallel pairs is exp((N - 2 tau) nu).
    """
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    if n <= 0 or n >= N:
        raise DegenerateFamily(
            f"n = {n} leaves a single aligned configuration with Z = exp({N}*nu)"
        )
    dist = t_distribution(N - n, n)
    return math.fsum(
        count * math.exp((N - 2 * tau) * nu) for tau, count in dist.entries.items()
    )


def ising_partition_total(N: int, nu: float) -> float:
    """Closed-form Boltzmann sum over all 2^N ring configurations."""
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    return (2 * math.cosh(nu)) ** N + (2 * math.sinh(nu)) ** N


@dataclass(frozen=True)
class WalkPolynomial:
    """Path counts of fixed displacement, split by number of direction changes."""

    N: int
    k: int
    coefficients: dict[int, int]  # direction-change count -> path count

    def scalar(self, alpha: float) -> float:
        """Total memory weight: sum of count * alpha^changes * (1-alpha)^(N-changes)."""
        beta = 1.0 - alpha
        return math.fsum(
            count * alpha**tau * beta ** (self.N - tau)
            for tau, count in sorted(self.coefficients.items())
        )


def walk_weight_polynomial(N: int, k: int) -> WalkPolynomial:
    """Split C(N, (N+k)/2) by cyclic direction changes of the step sequence.

    k is the net displacement of an N-step walk; it must share N's parity.
    The coefficients sum to the binomial path count.
    """
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    if abs(k) > N or (N + k) % 2 != 0:
        raise InvalidDisplacement(f"displacement {k} unreachable in {N} steps")
    m, n = (N + k) // 2, (N - k) // 2
    if m == 0 or n == 0:
        return WalkPolynomial(N, k, {0: 1})
    dist = t_distribution(m, n)
    return WalkPolynomial(N, k, dict(dist.entries))


def walk_weight_total(N: int, k: int, alpha: float) -> float:
    """Convenience wrapper: the scalar weight at a given memory strength alpha."""
    return walk_weight_polynomial(N, k).scalar(alpha)
