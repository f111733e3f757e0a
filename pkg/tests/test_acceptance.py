"""Acceptance suite: one test per criterion, at full stated bounds.

Each test prints a single PASS/FAIL line with its runtime; run with
``pytest tests/test_acceptance.py -s`` to see the lines as they go.
Time limits are asserted as stated, not calibrated down.
"""

import math
import time
from itertools import product

import numpy as np

from sternbrocot import (
    Fraction,
    bezout_via_euclid,
    bezout_via_tree,
    build_levels,
    creation_neighbors,
    decode,
    farey_length,
    farey_row,
    farey_row_oracle,
    farey_rows,
    iter_farey,
    iter_row_arrays,
    locate,
    verify_certificate,
)


def report(number: int, description: str, ok: bool, elapsed: float) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number}: {status} - {description} ({elapsed:.3f}s)")
    assert ok, f"criterion {number} failed: {description}"


def reduced_interior_by_sum(max_sum):
    return [
        (a, s - a)
        for s in range(3, max_sum + 1)
        for a in range(1, (s + 1) // 2)
        if math.gcd(a, s - a) == 1
    ]


def test_criterion_1_paper_rows():
    expected = {
        2: ["0/1", "1/2", "1/1"],
        3: ["0/1", "1/3", "1/2", "2/3", "1/1"],
        4: ["0/1", "1/4", "1/3", "1/2", "2/3", "3/4", "1/1"],
    }
    farey_row(4)  # warm-up
    start = time.perf_counter()
    ok = True
    worst = 0.0
    for n, terms in expected.items():
        best = math.inf
        for _ in range(3):
            t0 = time.perf_counter()
            row = farey_row(n)
            best = min(best, time.perf_counter() - t0)
        ok = ok and [str(f) for f in row] == terms and best < 1e-3
        worst = max(worst, best)
    elapsed = time.perf_counter() - start
    report(1, f"rows of order 2, 3, 4 match exactly, slowest {worst * 1e3:.3f}ms < 1ms", ok, elapsed)


def test_criterion_2_construction_equals_oracle():
    start = time.perf_counter()
    ok = True
    for n, row in enumerate(farey_rows(200), start=1):
        if row != farey_row_oracle(n):
            ok = False
            break
    elapsed = time.perf_counter() - start
    report(2, f"mediant insertion equals enumeration for n <= 200, {elapsed:.2f}s < 5s",
           ok and elapsed < 5.0, elapsed)


def test_criterion_3_adjacency_determinant():
    start = time.perf_counter()
    violations = 0
    for nums, dens in iter_row_arrays(500):
        # entries are <= 500, so the int64 products below are exact
        det = dens[:-1] * nums[1:] - nums[:-1] * dens[1:]
        violations += int((det != 1).sum())
    elapsed = time.perf_counter() - start
    report(3, f"b*c - a*d = 1 for every adjacent pair, n <= 500, {violations} violations, "
           f"{elapsed:.2f}s < 10s", violations == 0 and elapsed < 10.0, elapsed)


def test_criterion_4_walk_determinants():
    start = time.perf_counter()
    violations = 0
    checked_steps = 0
    for a, b in reduced_interior_by_sum(100):
        lo, hi = (0, 1), (1, 1)
        while True:
            if hi[0] * lo[1] - lo[0] * hi[1] != 1:
                violations += 1
            checked_steps += 1
            cn, cd = lo[0] + hi[0], lo[1] + hi[1]
            side = a * cd - b * cn
            if side == 0:
                break
            if side < 0:
                hi = (cn, cd)
            else:
                lo = (cn, cd)
        # the walk's final bounds are what the library hands out
        pair = creation_neighbors(Fraction(a, b))
        if (pair.left.num, pair.left.den) != lo or (pair.right.num, pair.right.den) != hi:
            violations += 1
    elapsed = time.perf_counter() - start
    report(4, f"bound determinant = 1 at every step for a+b <= 100 "
           f"({checked_steps} steps), {violations} violations", violations == 0, elapsed)


def test_criterion_5_uniqueness_and_step_bound():
    start = time.perf_counter()
    levels = build_levels(12)
    new_values: list[Fraction] = []
    for small, big in zip(levels, levels[1:]):
        prev = set(small)
        new_values.extend(f for f in big if f not in prev)
    # "path length" counts the mediant insertions that create a vertex, so
    # length <= 12 means locate-path length <= 11
    expected = {
        decode("".join(bits)) for j in range(12) for bits in product("LR", repeat=j)
    }
    unique = len(new_values) == len(set(new_values))
    complete = set(new_values) == expected
    bound_ok = all(
        len(locate(Fraction(a, b))) < a + b for a, b in reduced_interior_by_sum(100)
    )
    elapsed = time.perf_counter() - start
    report(5, f"every vertex created once across 12 levels ({len(new_values)} new values) "
           f"and path length < a+b for a+b <= 100", unique and complete and bound_ok, elapsed)


def test_criterion_6_bezout_exhaustive():
    start = time.perf_counter()
    pairs = 0
    ok = True
    for m in range(1, 301):
        for n in range(1, 301):
            if math.gcd(m, n) != 1:
                continue
            pairs += 1
            tree = bezout_via_tree(m, n)
            euclid = bezout_via_euclid(m, n)
            if not (verify_certificate(tree) and verify_certificate(euclid)):
                ok = False
            dx = tree.x - euclid.x
            if dx % n != 0 or (dx // n) * -m != tree.y - euclid.y:
                ok = False
        if not ok:
            break
    elapsed = time.perf_counter() - start
    report(6, f"m*x + n*y = 1 for all {pairs} coprime pairs <= 300, certificates differ "
           f"by t*(n, -m), {elapsed:.2f}s < 10s", ok and elapsed < 10.0, elapsed)


def test_criterion_7_round_trips():
    start = time.perf_counter()
    nums, dens = None, None
    for nums, dens in iter_row_arrays(500):
        pass
    ok = True
    for a, b in zip(nums.tolist()[1:-1], dens.tolist()[1:-1]):
        f = Fraction(a, b)
        if decode(locate(f)) != f:
            ok = False
            break
    count_paths = 0
    for k in range(17):
        for bits in product("LR", repeat=k):
            path = "".join(bits)
            if locate(decode(path)) != path:
                ok = False
                break
            count_paths += 1
    elapsed = time.perf_counter() - start
    report(7, f"decode(locate(f)) = f for den <= 500 and locate(decode(p)) = p for "
           f"{count_paths} paths of length <= 16, {elapsed:.2f}s < 30s",
           ok and count_paths == 2**17 - 1 and elapsed < 30.0, elapsed)


def test_criterion_8_cardinalities():
    start = time.perf_counter()
    ok = True
    for n, (nums, _) in enumerate(iter_row_arrays(500), start=1):
        if len(nums) != farey_length(n):
            ok = False
            break
    for k, level in enumerate(build_levels(20)):
        if len(level) != 2**k + 1:
            ok = False
            break
    elapsed = time.perf_counter() - start
    report(8, "|F_n| = 1 + sum(phi) for n <= 500 and |S_k| = 2^k + 1 for k <= 20",
           ok, elapsed)


def test_criterion_9_performance_guard():
    start = time.perf_counter()
    streamed = sum(1 for _ in iter_farey(10_000))
    stream_elapsed = time.perf_counter() - start
    count_ok = streamed == farey_length(10_000) and stream_elapsed < 60.0

    t0 = time.perf_counter()
    path = locate(Fraction(1, 999_999))
    locate_elapsed = time.perf_counter() - t0
    locate_ok = path == "L" * 999_997 and locate_elapsed < 1.0

    elapsed = time.perf_counter() - start
    report(9, f"streamed |F_10000| = {streamed} in {stream_elapsed:.1f}s < 60s; "
           f"locate(1/999999) in {locate_elapsed * 1e3:.1f}ms < 1s",
           count_ok and locate_ok, elapsed)
