"""Bezout certificates m*x + n*y = 1 for coprime pairs.

Two independent routes produce certificates:

* from tree structure: the left creation neighbor a/b of the vertex m/n
  satisfies m*b - a*n = 1, so (x, y) = (b, -a) drops out of a single walk;
* from the extended Euclidean algorithm.

The two may legally differ: solutions form the lattice (x + t*n, y - t*m).
"""

from __future__ import annotations

import json
from typing import NamedTuple

from .errors import NegativeInput, NotCoprime
from .rationals import Fraction, _checked, extended_gcd, gcd
from .tree import creation_neighbors


class BezoutCertificate(NamedTuple):
    m: int
    n: int
    x: int
    y: int


def _require_coprime(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise NegativeInput(f"certificates are defined for positive integers, got ({m}, {n})")
    if gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) = {gcd(m, n)} != 1")


def bezout_via_tree(m: int, n: int) -> BezoutCertificate:
    """Certificate read off the Stern-Brocot tree.

    For m < n, the fraction m/n is an interior vertex and its left creation
    neighbor a/b gives x = b, y = -a with 0 < x <= n and -m <= y <= 0.  For
    m > n the roles are symmetric: solve for (n, m) and swap the
    coefficients.  The only coprime pair with m = n is (1, 1).
    """
    _require_coprime(m, n)
    if m == n:
        return BezoutCertificate(1, 1, 1, 0)
    if m > n:
        flipped = bezout_via_tree(n, m)
        return BezoutCertificate(m, n, flipped.y, flipped.x)
    left = creation_neighbors(Fraction._reduced(m, n)).left
    return BezoutCertificate(m, n, left.den, -left.num)


def bezout_via_euclid(m: int, n: int) -> BezoutCertificate:
    """Certificate from the extended Euclidean algorithm.

    Inherits the canonical residue convention 0 <= x < n (for n > 1), so the
    output is deterministic.
    """
    _require_coprime(m, n)
    if m == n:
        return BezoutCertificate(1, 1, 1, 0)
    _, x, y = extended_gcd(m, n)
    return BezoutCertificate(m, n, x, y)


def verify_certificate(cert: BezoutCertificate) -> bool:
    """True iff m*x + n*y = 1 in exact integer arithmetic."""
    lhs = _checked(cert.m * cert.x, "certificate product") + _checked(
        cert.n * cert.y, "certificate product"
    )
    return _checked(lhs, "certificate sum") == 1


def certificate_json(cert: BezoutCertificate) -> str:
    """Wire form with fixed field order: {"m":..,"n":..,"x":..,"y":..,"check":..}."""
    return json.dumps(
        {"m": cert.m, "n": cert.n, "x": cert.x, "y": cert.y, "check": "m*x+n*y=1"},
        separators=(", ", ": "),
    )
