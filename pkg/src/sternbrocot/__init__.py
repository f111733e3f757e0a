"""Exact Farey rows, the [0,1] Stern-Brocot tree, and Bezout certificates.

All arithmetic is exact integer arithmetic; ordering is decided by
cross-multiplication, and anything leaving the signed 64-bit range raises
Overflow instead of wrapping or rounding.
"""

from .bezout import (
    BezoutCertificate,
    bezout_via_euclid,
    bezout_via_tree,
    certificate_json,
    verify_certificate,
)
from .errors import (
    BothZero,
    Endpoint,
    LimitExceeded,
    NegativeInput,
    NotCoprime,
    NotInRow,
    OutOfRange,
    Overflow,
    SternBrocotError,
    ZeroDenominator,
)
from .farey import (
    farey_length,
    farey_neighbors,
    farey_row,
    farey_row_arrays,
    farey_row_oracle,
    farey_rows,
    iter_farey,
    iter_row_arrays,
    row_order,
    totients,
)
from .rationals import (
    ExtGcdResult,
    Fraction,
    NeighborPair,
    RawFraction,
    compare,
    extended_gcd,
    gcd,
    mediant,
    parse_decimal,
)
from .tree import (
    ancestors,
    best_approximation,
    build_levels,
    children,
    creation_neighbors,
    decode,
    locate,
    render_tree,
)

__version__ = "0.1.0"

__all__ = [
    "BezoutCertificate",
    "BothZero",
    "Endpoint",
    "ExtGcdResult",
    "Fraction",
    "LimitExceeded",
    "NegativeInput",
    "NeighborPair",
    "NotCoprime",
    "NotInRow",
    "OutOfRange",
    "Overflow",
    "RawFraction",
    "SternBrocotError",
    "ZeroDenominator",
    "ancestors",
    "best_approximation",
    "bezout_via_euclid",
    "bezout_via_tree",
    "build_levels",
    "certificate_json",
    "children",
    "compare",
    "creation_neighbors",
    "decode",
    "extended_gcd",
    "farey_length",
    "farey_neighbors",
    "farey_row",
    "farey_row_arrays",
    "farey_row_oracle",
    "farey_rows",
    "gcd",
    "iter_farey",
    "iter_row_arrays",
    "locate",
    "mediant",
    "parse_decimal",
    "render_tree",
    "row_order",
    "totients",
    "verify_certificate",
]
