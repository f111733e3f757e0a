"""
Farey rows by mediant insertion
===============================

A row of order n holds every reduced fraction in [0, 1] with denominator
at most n, in increasing order.  Each row is made from the previous one by
inserting the mediant (a+c)/(b+d) between adjacent a/b and c/d wherever
the new denominator fits.
"""

from sternbrocot import (
    Fraction,
    farey_length,
    farey_neighbors,
    farey_rows,
    iter_farey,
    row_order,
)

# The first six rows, printed as a table.  Watch how each row keeps all of
# the previous one and squeezes new fractions in between.
print("rows of order 1..6:")
for n, row in enumerate(farey_rows(6), start=1):
    print(f"  F_{n}: " + "  ".join(str(f) for f in row))

# Adjacent terms a/b < c/d in a row always satisfy b*c - a*d = 1.  That
# single fact powers everything else in this package.
row = list(farey_rows(7))[-1]
print("\nadjacent determinants in the order-7 row:")
for p, q in zip(row, row[1:]):
    print(f"  {q}*{p} -> {p.den}*{q.num} - {p.num}*{q.den} = {p.den * q.num - p.num * q.den}")

# Row sizes follow the totient sum law |F_n| = 1 + phi(1) + ... + phi(n),
# so the size is known without building anything.
print("\nrow sizes vs. the totient sum:")
for n, r in enumerate(farey_rows(10), start=1):
    print(f"  order {n:2d}: built {len(r):3d} terms, totient sum says {farey_length(n):3d}")

# row_order recovers the order from the terms: it is the largest denominator.
print("\nrow_order of the order-6 row:", row_order(list(farey_rows(6))[-1]))

# Neighbors of a fraction inside a row of a chosen order, without building
# the row: 3/7 sits between 2/5 and 4/9 once denominators up to 10 exist.
pair = farey_neighbors(Fraction(3, 7), 10)
print(f"\nneighbors of 3/7 in the order-10 row: {pair.left} < 3/7 < {pair.right}")

# For large orders, stream the row instead of materializing it.  The row of
# order 300 has 27400 terms; here are the ten closest to 1/2 from the stream.
window = [f for f in iter_farey(300) if abs(f.num * 2 - f.den) * 9 <= f.den]
print(f"\nterms of the order-300 row within 1/18 of 1/2 ({len(window)} of them):")
print("  " + "  ".join(str(f) for f in window[:10]) + "  ...")
