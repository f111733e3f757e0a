"""
Bezout certificates from tree structure
=======================================

For coprime m and n there are integers x, y with m*x + n*y = 1.  The usual
way to find them is the extended Euclidean algorithm; the tree gives a
second, independent route: walk to the vertex m/n and read the left
creation neighbor a/b, because m*b - a*n = 1 there.
"""

from sternbrocot import (
    Fraction,
    bezout_via_euclid,
    bezout_via_tree,
    certificate_json,
    creation_neighbors,
    verify_certificate,
)

# The certificate for (3, 7), step by step: the left neighbor of 3/7 is
# 2/5, and 3*5 - 2*7 = 1, so (x, y) = (5, -2).
pair = creation_neighbors(Fraction(3, 7))
cert = bezout_via_tree(3, 7)
print(f"left neighbor of 3/7 is {pair.left}  ->  x = {cert.x}, y = {cert.y}")
print(f"check: 3*{cert.x} + 7*({cert.y}) = {3 * cert.x + 7 * cert.y}")

# Both routes, side by side.  They may disagree: any two solutions differ
# by a multiple of (n, -m), and both check out.
print("\npair        tree (x, y)      euclid (x, y)    difference / (n, -m)")
for m, n in [(3, 7), (5, 7), (4, 9), (8, 13), (13, 8), (1, 6), (6, 1), (240, 46 + 1)]:
    t = bezout_via_tree(m, n)
    e = bezout_via_euclid(m, n)
    steps = (t.x - e.x) // n
    assert verify_certificate(t) and verify_certificate(e)
    print(
        f"({m:3d},{n:3d})   ({t.x:4d},{t.y:5d})     ({e.x:4d},{e.y:5d})     t = {steps}"
    )

# For m > n the tree route solves the flipped pair and swaps the
# coefficients, so the identity still lands on 1.
t = bezout_via_tree(7, 3)
print(f"\n(7, 3): x = {t.x}, y = {t.y};  7*({t.x}) + 3*{t.y} = {7 * t.x + 3 * t.y}")

# The wire form used by the CLI's --format json, field order fixed.
print("\nJSON:", certificate_json(bezout_via_tree(89, 144)))
