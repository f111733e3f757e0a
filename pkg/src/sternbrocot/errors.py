"""Exception types shared across the library.

Every domain failure raises a subclass of :class:`SternBrocotError`, so
callers (notably the CLI) can distinguish domain errors from plain usage
mistakes, which surface as ``ValueError``.
"""


class SternBrocotError(Exception):
    """Base class for all domain errors raised by this library."""


class ZeroDenominator(SternBrocotError):
    """A fraction was constructed with denominator zero."""


class NegativeInput(SternBrocotError):
    """Negative numerators, denominators, or integers are out of domain."""


class BothZero(SternBrocotError):
    """gcd(0, 0) is undefined."""


class Overflow(SternBrocotError):
    """A value or product left the signed 64-bit range; never wrapped silently."""


class LimitExceeded(SternBrocotError):
    """A size guard (row order, tree depth, path length) was exceeded."""


class NotInRow(SternBrocotError):
    """The fraction does not appear in the requested Farey row."""


class Endpoint(SternBrocotError):
    """0/1 and 1/1 bound the structures but have no two-sided neighbors."""


class OutOfRange(SternBrocotError):
    """Tree operations require a reduced fraction strictly between 0 and 1."""


class NotCoprime(SternBrocotError):
    """A Bezout certificate m*x + n*y = 1 exists only for coprime m, n."""
