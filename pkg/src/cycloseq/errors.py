"""Domain errors raised by the counting engine.

All of these map to CLI exit code 3; usage errors are argparse's exit code 2.
"""


class DomainError(Exception):
    """Base class for errors in the mathematical domain of a query."""


class InvalidTau(DomainError):
    """Jump counts on a cycle come in pairs; odd values are meaningless."""


class DegenerateFamily(DomainError):
    """Raised for point queries on a family with no zeros or no ones."""


class UnsupportedPattern(DomainError):
    """No closed form is shipped for this pattern; the oracle still handles it."""


class CapExceeded(DomainError):
    """Brute-force enumeration request above the configured size cap."""


class ConstantSequence(DomainError):
    """An all-zeros or all-ones sequence has no block decomposition into both digits."""


class InvalidDisplacement(DomainError):
    """Walk displacement must have the same parity as the step count."""
