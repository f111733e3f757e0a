"""Exact arithmetic on nonnegative rationals.

The building blocks here are deliberately small: reduced fractions with
cross-multiplication ordering, the unreduced mediant, and the Euclidean
remainder recursion in plain and extended form.  Everything is integer
arithmetic; no float is ever consulted.

Values are kept inside the signed 64-bit range.  Python integers cannot
wrap around, so the range checks exist to keep behavior portable and to
turn "too big" into a loud :class:`~sternbrocot.errors.Overflow` instead
of a silently growing number.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, NamedTuple

from .errors import BothZero, NegativeInput, Overflow, ZeroDenominator

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)

# A (numerator, denominator) pair that is not required to be reduced.  The
# mediant is defined on representations, not values: (1, 2) and (2, 4) give
# different mediants with the same partner.
RawFraction = tuple[int, int]

_FRACTION_RE = re.compile(r"^(\d+)/(\d+)$")
_DECIMAL_RE = re.compile(r"^(\d*)\.(\d+)$|^(\d+)\.?$")


def _checked(value: int, context: str) -> int:
    if value > INT64_MAX or value < INT64_MIN:
        raise Overflow(f"{context} exceeds the signed 64-bit range: {value}")
    return value


def gcd(a: int, b: int) -> int:
    """Greatest common divisor by the remainder recursion.

    Raises BothZero for gcd(0, 0) and NegativeInput for negative arguments.
    """
    if a < 0 or b < 0:
        raise NegativeInput(f"gcd arguments must be nonnegative, got ({a}, {b})")
    if a == 0 and b == 0:
        raise BothZero("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return a


class ExtGcdResult(NamedTuple):
    g: int
    x: int
    y: int


def extended_gcd(a: int, b: int) -> ExtGcdResult:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b).

    When b/g > 1 the coefficient x is normalized to the canonical residue
    0 <= x < b/g, which makes the result deterministic and directly usable
    as a modular inverse of a modulo b.
    """
    if a < 0 or b < 0:
        raise NegativeInput(f"extended_gcd arguments must be nonnegative, got ({a}, {b})")
    if a == 0 and b == 0:
        raise BothZero("extended_gcd(0, 0) is undefined")
    _checked(a, "extended_gcd argument")
    _checked(b, "extended_gcd argument")
    r0, r1 = a, b
    x0, x1 = 1, 0
    y0, y1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    # |x0| <= b/(2g) and |y0| <= a/(2g) throughout, so the loop cannot leave
    # the 64-bit range when the inputs are inside it.
    m = b // r0
    if m > 1:
        x0 %= m
        y0 = (r0 - a * x0) // b
    return ExtGcdResult(r0, x0, y0)


class Fraction:
    """A nonnegative rational stored in lowest terms.

    Ordering and equality are decided by exact cross-multiplication.  A
    cross product that would leave the 64-bit range raises Overflow rather
    than answering from a wrapped or approximate value.
    """

    __slots__ = ("num", "den")

    num: int
    den: int

    def __init__(self, num: int, den: int = 1):
        if den == 0:
            raise ZeroDenominator(f"{num}/0 has a zero denominator")
        if num < 0 or den < 0:
            raise NegativeInput(f"{num}/{den}: negative rationals are out of domain")
        if num == 0:
            den = 1
        else:
            g = gcd(num, den)
            num //= g
            den //= g
        self.num = _checked(num, "numerator")
        self.den = _checked(den, "denominator")

    @classmethod
    def _reduced(cls, num: int, den: int) -> "Fraction":
        # Trusted fast path: caller guarantees gcd(num, den) == 1, den >= 1,
        # and 64-bit range.  Used where reduction is provable (unimodular
        # bound pairs make every mediant already reduced).
        f = object.__new__(cls)
        f.num = num
        f.den = den
        return f

    @classmethod
    def parse(cls, text: str) -> "Fraction":
        """Parse "num/den"; unreduced input is accepted and reduced."""
        m = _FRACTION_RE.match(text)
        if not m:
            raise ValueError(f"not a num/den fraction: {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Fraction({self.num}, {self.den})"

    def __iter__(self) -> Iterator[int]:
        # Allows "n, d = f" and feeding a Fraction anywhere a RawFraction
        # pair is accepted.
        yield self.num
        yield self.den

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Fraction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __lt__(self, other: "Fraction") -> bool:
        return compare(self, other) < 0

    def __le__(self, other: "Fraction") -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other: "Fraction") -> bool:
        return compare(self, other) > 0

    def __ge__(self, other: "Fraction") -> bool:
        return compare(self, other) >= 0


class NeighborPair(NamedTuple):
    """An ordered pair left < right with right.num*left.den - left.num*right.den = 1."""

    left: Fraction
    right: Fraction


def compare(p: Fraction, q: Fraction) -> int:
    """Exact three-way comparison: -1, 0, or 1 as p is below, at, or above q."""
    lhs = _checked(p.num * q.den, "comparison cross-product")
    rhs = _checked(q.num * p.den, "comparison cross-product")
    if lhs < rhs:
        return -1
    if lhs > rhs:
        return 1
    return 0


def mediant(p: Iterable[int], q: Iterable[int]) -> RawFraction:
    """Componentwise sum (a+c, b+d) of two fractions a/b and c/d.

    The result is intentionally NOT reduced; tree construction relies on the
    unreduced representation, and reduction is the caller's choice.
    """
    pn, pd = p
    qn, qd = q
    return (_checked(pn + qn, "mediant numerator"), _checked(pd + qd, "mediant denominator"))


def parse_decimal(text: str) -> RawFraction:
    """Parse a nonnegative decimal literal into an exact (num, 10**k) pair.

    "0.25" -> (25, 100), "1" -> (1, 1).  No float is involved, so the CLI's
    exactness guarantee extends to decimal input.
    """
    m = _DECIMAL_RE.match(text)
    if not m:
        raise ValueError(f"not a decimal number: {text!r}")
    if m.group(3) is not None:
        return (int(m.group(3)), 1)
    whole = m.group(1) or "0"
    frac = m.group(2)
    num = int(whole + frac)
    den = 10 ** len(frac)
    return (_checked(num, "decimal numerator"), _checked(den, "decimal denominator"))
