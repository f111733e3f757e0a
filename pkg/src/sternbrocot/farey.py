"""Farey rows: generation, queries, and cross-checks.

A row of order n holds every reduced fraction in [0, 1] with denominator
at most n, in increasing order.  Rows are built level by level: the next
row copies the current one and inserts the mediant of each adjacent pair
whose denominators sum to at most the new order.

Three independent routes to the same rows live here on purpose:

* the mediant-insertion construction (the real implementation),
* a quadratic enumeration oracle for tests,
* the cardinality law |F_n| = 1 + sum(phi(k), k <= n) via a totient sieve.

Row construction runs on int64 numpy arrays.  With the order capped at
``DEFAULT_ROW_LIMIT`` every entry stays below 2**17, so all sums and
products involved are exact in int64.
"""

from __future__ import annotations

from math import gcd as _math_gcd
from typing import Iterator

import numpy as np

from .errors import Endpoint, LimitExceeded, NotInRow
from .rationals import Fraction, NeighborPair, extended_gcd

DEFAULT_ROW_LIMIT = 100_000
ORACLE_LIMIT = 2_000

FareyRow = list[Fraction]


def _check_order(n: int, limit: int) -> None:
    if n < 1:
        raise ValueError(f"row order must be >= 1, got {n}")
    if n > limit:
        raise LimitExceeded(f"row order {n} exceeds the limit {limit}; |F_n| grows like 3n^2/pi^2")


def iter_row_arrays(
    n: int, *, limit: int = DEFAULT_ROW_LIMIT
) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield (numerators, denominators) int64 arrays for F_1, F_2, ..., F_n.

    Each yielded pair is a fresh materialization; callers may keep or mutate
    previous rows freely.
    """
    _check_order(n, limit)
    nums = np.array([0, 1], dtype=np.int64)
    dens = np.array([1, 1], dtype=np.int64)
    yield nums, dens
    for order in range(2, n + 1):
        insert = dens[:-1] + dens[1:] <= order
        shift = np.concatenate(([0], np.cumsum(insert)))
        old_pos = np.arange(len(nums)) + shift
        out_n = np.empty(len(nums) + int(shift[-1]), dtype=np.int64)
        out_d = np.empty_like(out_n)
        out_n[old_pos] = nums
        out_d[old_pos] = dens
        new_pos = old_pos[:-1][insert] + 1
        out_n[new_pos] = (nums[:-1] + nums[1:])[insert]
        out_d[new_pos] = (dens[:-1] + dens[1:])[insert]
        nums, dens = out_n, out_d
        yield nums, dens


def farey_row_arrays(n: int, *, limit: int = DEFAULT_ROW_LIMIT) -> tuple[np.ndarray, np.ndarray]:
    """(numerators, denominators) of F_n as int64 arrays."""
    for nums, dens in iter_row_arrays(n, limit=limit):
        pass
    return nums, dens


def _wrap_row(nums: np.ndarray, dens: np.ndarray) -> FareyRow:
    # Row entries are reduced by construction (adjacent pairs are unimodular,
    # so every inserted mediant is already in lowest terms).
    reduced = Fraction._reduced
    return [reduced(a, b) for a, b in zip(nums.tolist(), dens.tolist())]


def farey_row(n: int, *, limit: int = DEFAULT_ROW_LIMIT) -> FareyRow:
    """F_n by mediant insertion, as an increasing list of Fractions.

    F_1 = [0/1, 1/1]; every further row has maximum denominator exactly n.
    """
    return _wrap_row(*farey_row_arrays(n, limit=limit))


def farey_rows(n: int, *, limit: int = DEFAULT_ROW_LIMIT) -> Iterator[FareyRow]:
    """Yield F_1 .. F_n, each as a list of Fractions."""
    for nums, dens in iter_row_arrays(n, limit=limit):
        yield _wrap_row(nums, dens)


def iter_farey(n: int, *, limit: int = DEFAULT_ROW_LIMIT) -> Iterator[Fraction]:
    """Stream the terms of F_n in increasing order without storing the row.

    Depth-first mediant expansion with an explicit stack: descend into the
    interval below each pending right endpoint while the mediant denominator
    stays within n.  O(n) memory instead of O(n^2).
    """
    _check_order(n, limit)
    reduced = Fraction._reduced
    yield reduced(0, 1)
    a, b = 0, 1
    stack = [(1, 1)]
    push = stack.append
    pop = stack.pop
    while stack:
        c, d = stack[-1]
        s = b + d
        if s <= n:
            push((a + c, s))
        else:
            yield reduced(c, d)
            a, b = pop()


def farey_row_oracle(n: int, *, limit: int = ORACLE_LIMIT) -> FareyRow:
    """F_n by brute force: enumerate all a/b with 0 <= a <= b <= n, reduce,
    deduplicate, and sort.

    Quadratic in n; exists as an independent cross-check of farey_row and is
    deliberately built on the standard library's arithmetic, not this
    package's.
    """
    _check_order(n, limit)
    seen = set()
    for b in range(1, n + 1):
        for a in range(b + 1):
            g = _math_gcd(a, b)
            seen.add((a // g, b // g))
    # distinct fractions with denominators <= n differ by at least 1/n^2, so
    # floor(a*scale/b) with scale > n^2 orders them exactly
    scale = n * n + 1
    ordered = sorted(seen, key=lambda pair: pair[0] * scale // pair[1])
    return [Fraction._reduced(a, b) for a, b in ordered]


def totients(n: int) -> np.ndarray:
    """phi(0..n) by the classic sieve: phi[k] -= phi[k]/p for each prime p | k."""
    if n < 0:
        raise ValueError(f"totients requires n >= 0, got {n}")
    phi = np.arange(n + 1, dtype=np.int64)
    for p in range(2, n + 1):
        if phi[p] == p:  # p is prime
            phi[p::p] -= phi[p::p] // p
    return phi


def farey_length(n: int, *, limit: int = DEFAULT_ROW_LIMIT) -> int:
    """|F_n| = 1 + sum(phi(k) for k = 1..n), without building the row."""
    _check_order(n, limit)
    return 1 + int(totients(n)[1:].sum())


def row_order(row: FareyRow) -> int:
    """The order of a row: its maximum denominator."""
    if not row:
        raise ValueError("row_order of an empty row")
    return max(f.den for f in row)


def farey_neighbors(f: Fraction, n: int, *, limit: int = DEFAULT_ROW_LIMIT) -> NeighborPair:
    """The terms immediately left and right of f in F_n.

    Solved with the Bezout identity instead of building the row: the left
    neighbor p/q of a/b satisfies a*q - b*p = 1, so q is the largest value
    congruent to the inverse of a mod b that does not exceed n.
    """
    _check_order(n, limit)
    if f.num > f.den or f.den > n:
        raise NotInRow(f"{f} does not appear in a Farey row of order {n}")
    if f.num == 0 or f.num == f.den:
        raise Endpoint(f"{f} bounds the row; it has no two-sided neighbor pair")
    a, b = f.num, f.den
    inv = extended_gcd(a, b).x  # a*inv = 1 (mod b), 0 < inv < b
    q_left = inv + ((n - inv) // b) * b
    q_right = (b - inv) + ((n - (b - inv)) // b) * b
    return NeighborPair(
        Fraction._reduced((a * q_left - 1) // b, q_left),
        Fraction._reduced((a * q_right + 1) // b, q_right),
    )
