"""
Walking the [0,1] Stern-Brocot tree
===================================

Every reduced fraction strictly between 0 and 1 sits at exactly one vertex
of an infinite binary tree rooted at 1/2.  A vertex is addressed by the
L/R turns taken from the root, and the walk that finds it keeps a pair of
bounds whose mediant is the current vertex.
"""

from sternbrocot import (
    Fraction,
    ancestors,
    build_levels,
    children,
    creation_neighbors,
    decode,
    locate,
    render_tree,
)

# The first levels of the tree, grown by inserting mediants of adjacent
# values.  Level k has 2^k + 1 entries, endpoints included.
for k, level in enumerate(build_levels(3)):
    print(f"S_{k}: " + "  ".join(str(f) for f in level))

# The same structure drawn as a tree (endpoints are bounds, not vertices).
print("\n" + render_tree(2, "text"))

# locate gives the address of a fraction; decode walks an address back.
f = Fraction(3, 7)
path = locate(f)
print(f"locate(3/7) = {path!r};  decode({path!r}) = {decode(path)}")

# The walk visits these vertices before reaching 3/7.
print("ancestors of 3/7:", "  ".join(str(a) for a in ancestors(f)))

# 3/7 was created as the mediant of its bounds; note 2/5 + 1/2 -> 3/7
# summing numerators and denominators separately.
pair = creation_neighbors(f)
print(f"creation neighbors of 3/7: {pair.left} and {pair.right}")

# Children are mediants with the bounds, so the subtree under 3/7 starts:
left, right = children(f)
print(f"children of 3/7: {left} (left), {right} (right)")

# Deep, lopsided fractions have long, lopsided addresses: 1/9 hangs seven
# steps down the leftmost branch.
print("\nlocate(1/9) =", repr(locate(Fraction(1, 9))))

# A path and its fraction are two spellings of the same thing.
for path in ("", "L", "R", "LL", "LR", "RL", "RR", "LRLRLR"):
    print(f"  {path or '(root)':8s} -> {decode(path)}")

# DOT output plugs straight into graphviz:  sternbrocot sb tree 3 --format dot | dot -Tpng
print("\n" + render_tree(1, "dot"))
