"""The Stern-Brocot tree restricted to [0, 1].

Level sets start from S_0 = {0/1, 1/1}; each next level inserts the mediant
of every adjacent pair.  Equivalently, the tree is addressed by strings over
{L, R}: a walk keeps a pair of bounds (lo, hi), starts at lo = 0/1 and
hi = 1/1 with current vertex mediant(lo, hi) = 1/2, and each step replaces
one bound by the current vertex (L replaces hi, R replaces lo).

The walk preserves hi.num*lo.den - lo.num*hi.den = 1, which is why every
mediant it produces is already in lowest terms and why the bounds of a
vertex hand out Bezout coefficients for free (see bezout.py).

Endpoints 0/1 and 1/1 are bounds, not vertices: locate and friends reject
them with OutOfRange rather than special-casing.
"""

from __future__ import annotations

from .errors import LimitExceeded, OutOfRange, Overflow
from .rationals import INT64_MAX, Fraction, NeighborPair

DEFAULT_PATH_LIMIT = 1_000_000
MAX_LEVEL = 25
MAX_RENDER_DEPTH = 12

TreeLevel = list[Fraction]

_ROOT_BOUNDS = ((0, 1), (1, 1))


def _require_interior(f: Fraction) -> None:
    if f.num == 0 or f.num >= f.den:
        raise OutOfRange(f"{f} is not strictly between 0/1 and 1/1")


def _validate_path(path: str) -> None:
    if not set(path) <= {"L", "R"}:
        bad = sorted(set(path) - {"L", "R"})[0]
        raise ValueError(f"path may contain only 'L' and 'R', got {bad!r}")


def decode(path: str, *, limit: int = DEFAULT_PATH_LIMIT) -> Fraction:
    """The vertex addressed by a path; the empty path is the root 1/2.

    Entries grow Fibonacci-fast on alternating paths, so a long path can
    raise Overflow long before the length limit does.
    """
    _validate_path(path)
    if len(path) > limit:
        raise LimitExceeded(f"path length {len(path)} exceeds the limit {limit}")
    (ln, ld), (rn, rd) = _ROOT_BOUNDS
    for step in path:
        cn = ln + rn
        cd = ld + rd
        if cd > INT64_MAX:  # cn <= cd always
            raise Overflow(f"decode walk left the 64-bit range after {cn}/{cd}")
        if step == "L":
            rn, rd = cn, cd
        else:
            ln, ld = cn, cd
    cn, cd = ln + rn, ld + rd
    if cd > INT64_MAX:
        raise Overflow(f"decode result {cn}/{cd} exceeds the 64-bit range")
    return Fraction._reduced(cn, cd)


def _walk(f: Fraction) -> tuple[str, tuple[int, int], tuple[int, int]]:
    # Mediant bisection toward f = a/b, fast-forwarded: a run of consecutive
    # same-direction steps has a closed form, so each loop turn consumes one
    # whole run (one continued-fraction quotient) instead of one step.
    # Returns (path, lo, hi) where mediant(lo, hi) = f.
    a, b = f.num, f.den
    (ln, ld), (rn, rd) = _ROOT_BOUNDS
    runs: list[str] = []
    while True:
        above = a * ld - b * ln  # f - lo, scaled by b*ld > 0
        below = b * rn - a * rd  # hi - f, scaled by b*rd > 0
        if above == below:
            return "".join(runs), (ln, ld), (rn, rd)
        if above < below:
            # After j L-steps the high bound is j*lo + hi; f sits below the
            # next mediant while (j+1)*above < below.
            steps, rem = divmod(below, above)
            if rem == 0:
                steps -= 1
            runs.append("L" * steps)
            rn += steps * ln
            rd += steps * ld
        else:
            steps, rem = divmod(above, below)
            if rem == 0:
                steps -= 1
            runs.append("R" * steps)
            ln += steps * rn
            ld += steps * rd


def locate(f: Fraction) -> str:
    """The unique path with decode(path) = f; fewer than f.num + f.den steps."""
    _require_interior(f)
    return _walk(f)[0]


def creation_neighbors(f: Fraction) -> NeighborPair:
    """The bound pair (lo, hi) whose mediant first produces f.

    Both pairs (lo, f) and (f, hi) satisfy the unimodular relation, so f is
    in lowest terms automatically.
    """
    _require_interior(f)
    _, (ln, ld), (rn, rd) = _walk(f)
    return NeighborPair(Fraction._reduced(ln, ld), Fraction._reduced(rn, rd))


def ancestors(f: Fraction) -> list[Fraction]:
    """Vertices visited on the way down to f, from the root 1/2, excluding f."""
    _require_interior(f)
    a, b = f.num, f.den
    (ln, ld), (rn, rd) = _ROOT_BOUNDS
    out: list[Fraction] = []
    while True:
        cn, cd = ln + rn, ld + rd
        side = a * cd - b * cn
        if side == 0:
            return out
        out.append(Fraction._reduced(cn, cd))
        if side < 0:
            rn, rd = cn, cd
        else:
            ln, ld = cn, cd


def children(f: Fraction) -> tuple[Fraction, Fraction]:
    """(left child, right child): mediants of f with its creation bounds."""
    _require_interior(f)
    _, (ln, ld), (rn, rd) = _walk(f)
    return (
        Fraction._reduced(ln + f.num, ld + f.den),
        Fraction._reduced(f.num + rn, f.den + rd),
    )


def build_levels(k: int, *, limit: int = MAX_LEVEL) -> list[TreeLevel]:
    """The level sets S_0 .. S_k; each level inserts all adjacent mediants.

    |S_k| = 2**k + 1, so memory is exponential in k.
    """
    if k < 0:
        raise ValueError(f"level index must be >= 0, got {k}")
    if k > limit:
        raise LimitExceeded(f"level {k} exceeds the limit {limit}; |S_k| = 2^k + 1")
    level: TreeLevel = [Fraction._reduced(0, 1), Fraction._reduced(1, 1)]
    levels = [level]
    for _ in range(k):
        nxt: TreeLevel = []
        append = nxt.append
        prev = level[0]
        for cur in level[1:]:
            append(prev)
            append(Fraction._reduced(prev.num + cur.num, prev.den + cur.den))
            prev = cur
        append(prev)
        levels.append(nxt)
        level = nxt
    return levels


def iter_vertices(depth: int, *, limit: int = MAX_RENDER_DEPTH):
    """Preorder (vertex, level, left children pair) down to a depth.

    Yields ((num, den), level, children) with children = (left, right) raw
    pairs, or None at the depth boundary.  Left subtree before right.
    """
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    if depth > limit:
        raise LimitExceeded(f"depth {depth} exceeds the render limit {limit}")

    def walk(lo: tuple[int, int], hi: tuple[int, int], level: int):
        cn, cd = lo[0] + hi[0], lo[1] + hi[1]
        left = (lo[0] + cn, lo[1] + cd)
        right = (cn + hi[0], cd + hi[1])
        if level < depth:
            yield (cn, cd), level, (left, right)
            yield from walk(lo, (cn, cd), level + 1)
            yield from walk((cn, cd), hi, level + 1)
        else:
            yield (cn, cd), level, None

    return walk(*_ROOT_BOUNDS, 0)


def render_tree(depth: int, fmt: str = "text", *, limit: int = MAX_RENDER_DEPTH) -> str:
    """Deterministic text or DOT rendering of the tree down to a depth.

    Text: one vertex per line, two-space indent per level, preorder with the
    left child first.  DOT: node statements then parent->child edges, both
    preorder, children in (left, right) order; byte-for-byte stable.
    """
    if fmt not in ("text", "dot"):
        raise ValueError(f"unknown tree format: {fmt!r}")
    if fmt == "text":
        lines = [
            f"{'  ' * level}{n}/{d}" for (n, d), level, _ in iter_vertices(depth, limit=limit)
        ]
        return "\n".join(lines) + "\n"
    nodes = []
    edges = []
    for (n, d), _, kids in iter_vertices(depth, limit=limit):
        nodes.append(f'  "{n}/{d}";')
        if kids is not None:
            (a, b), (c, e) = kids
            edges.append(f'  "{n}/{d}" -> "{a}/{b}";')
            edges.append(f'  "{n}/{d}" -> "{c}/{e}";')
    return "digraph sb {\n" + "\n".join(nodes + edges) + "\n}\n"


def best_approximation(num: int, den: int, max_den: int) -> Fraction:
    """The fraction with denominator <= max_den closest to num/den.

    Walks the tree toward the target and stops when the next mediant's
    denominator would exceed max_den; at that point the bounds are adjacent
    in the Farey row of order max_den, so the answer is whichever bound is
    closer.  Ties break to the smaller denominator, then smaller numerator.
    Runs of same-direction steps are taken in closed form, as in locate.

    The target may be unreduced (e.g. decimal digits over a power of ten);
    all comparisons are exact integer arithmetic.
    """
    if max_den < 1:
        raise ValueError(f"max_den must be >= 1, got {max_den}")
    if den <= 0 or num < 0 or num > den:
        raise OutOfRange(f"{num}/{den} is not in [0, 1]")
    if num == 0:
        return Fraction._reduced(0, 1)
    if num == den:
        return Fraction._reduced(1, 1)
    (ln, ld), (rn, rd) = _ROOT_BOUNDS
    while ld + rd <= max_den:
        above = num * ld - den * ln
        below = den * rn - num * rd
        if above == below:
            # target is this mediant, already within the budget
            return Fraction._reduced(ln + rn, ld + rd)
        if above < below:
            steps, rem = divmod(below, above)
            if rem == 0:
                steps -= 1
            budget = (max_den - rd) // ld
            steps = min(steps, budget)
            rn += steps * ln
            rd += steps * ld
        else:
            steps, rem = divmod(above, below)
            if rem == 0:
                steps -= 1
            budget = (max_den - ld) // rd
            steps = min(steps, budget)
            ln += steps * rn
            ld += steps * rd
    # |target - lo| vs |hi - target|, both scaled by den*ld*rd
    err_lo = (num * ld - den * ln) * rd
    err_hi = (den * rn - num * rd) * ld
    if err_lo < err_hi or (err_lo == err_hi and (ld, ln) <= (rd, rn)):
        return Fraction._reduced(ln, ld)
    return Fraction._reduced(rn, rd)
