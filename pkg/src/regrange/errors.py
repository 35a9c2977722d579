"""Exception types shared across the package."""


class RegRangeError(Exception):
    """Base class for all package-specific errors."""


class InputError(RegRangeError, ValueError):
    """Malformed or out-of-domain user input (CLI exit code 2)."""


class OutOfRangeError(InputError):
    """A requested regularity lies outside the achievable interval."""

    def __init__(self, m, lo, hi):
        self.m = m
        self.lo = lo
        self.hi = hi
        super().__init__(
            f"regularity {m} is outside the achievable interval [{lo}, {hi}]"
        )


class InfeasibleVectorsError(InputError):
    """No Borel set can realize the requested height/growth vectors."""


class NotBorelError(InputError):
    """A term set fails closure under exchanges toward larger variables."""


class NotCertifiableError(InputError):
    """An infinite condition cannot be reduced to a finite check."""


class CertificationError(RegRangeError):
    """An internal postcondition failed; output cannot be certified (CLI exit code 3)."""
