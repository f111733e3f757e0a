"""Command-line interface.

Exit codes: 0 success, 1 domain error (NotCoprime, OutOfRange,
LimitExceeded, ...) with the error name on standard error, 2 usage error.
Data goes to standard output, diagnostics to standard error, so every
command is safe to pipe.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bezout import bezout_via_euclid, bezout_via_tree, certificate_json, verify_certificate
from .errors import SternBrocotError
from .farey import farey_row_arrays
from .rationals import Fraction, parse_decimal
from .tree import (
    best_approximation,
    creation_neighbors,
    decode,
    iter_vertices,
    locate,
    render_tree,
)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be a nonnegative integer, got {text}")
    return value


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction.parse(text)
    except (ValueError, SternBrocotError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _decimal_arg(text: str) -> tuple[int, int, str]:
    try:
        num, den = parse_decimal(text)
    except (ValueError, SternBrocotError) as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if num > den:
        raise argparse.ArgumentTypeError(f"value must be in [0, 1], got {text}")
    return num, den, text


def _path_arg(text: str) -> str:
    if not set(text) <= {"L", "R"}:
        raise argparse.ArgumentTypeError(f"path must be a string over L and R, got {text!r}")
    return text


def _cmd_farey(args: argparse.Namespace) -> int:
    nums, dens = farey_row_arrays(args.n)
    terms = [f"{a}/{b}" for a, b in zip(nums.tolist(), dens.tolist())]
    if args.format == "json":
        print(json.dumps(terms))
    else:
        sys.stdout.write("\n".join(terms) + "\n")
    return 0


def _cmd_sb_locate(args: argparse.Namespace) -> int:
    path = locate(args.fraction)
    if args.format == "json":
        print(json.dumps({"fraction": str(args.fraction), "path": path}))
    else:
        print(path)
    return 0


def _cmd_sb_decode(args: argparse.Namespace) -> int:
    vertex = decode(args.path)
    if args.format == "json":
        print(json.dumps({"path": args.path, "fraction": str(vertex)}))
    else:
        print(vertex)
    return 0


def _cmd_sb_neighbors(args: argparse.Namespace) -> int:
    pair = creation_neighbors(args.fraction)
    if args.format == "json":
        print(
            json.dumps(
                {"fraction": str(args.fraction), "left": str(pair.left), "right": str(pair.right)}
            )
        )
    else:
        print(f"{pair.left} {pair.right}")
    return 0


def _cmd_sb_tree(args: argparse.Namespace) -> int:
    if args.format == "json":
        vertices: list[str] = []
        edges: list[list[str]] = []
        for (n, d), _, kids in iter_vertices(args.depth):
            vertices.append(f"{n}/{d}")
            if kids is not None:
                (a, b), (c, e) = kids
                edges.append([f"{n}/{d}", f"{a}/{b}"])
                edges.append([f"{n}/{d}", f"{c}/{e}"])
        print(json.dumps({"depth": args.depth, "vertices": vertices, "edges": edges}))
    else:
        fmt = "dot" if args.format == "dot" else "text"
        sys.stdout.write(render_tree(args.depth, fmt))
    return 0


def _cmd_bezout(args: argparse.Namespace) -> int:
    via_tree = bezout_via_tree(args.m, args.n)
    via_euclid = bezout_via_euclid(args.m, args.n)
    # Both routes must verify, and they may only differ by the solution
    # lattice (x + t*n, y - t*m).
    assert verify_certificate(via_tree) and verify_certificate(via_euclid)
    assert (via_tree.x - via_euclid.x) * args.m == -(via_tree.y - via_euclid.y) * args.n
    cert = via_tree if args.method == "tree" else via_euclid
    if args.format == "json":
        print(certificate_json(cert))
    else:
        print(f"x={cert.x} y={cert.y}")
    return 0


def _cmd_approx(args: argparse.Namespace) -> int:
    num, den, text = args.value
    best = best_approximation(num, den, args.max_den)
    if args.format == "json":
        print(json.dumps({"value": text, "max_den": args.max_den, "best": str(best)}))
    else:
        print(best)
    return 0


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format",
        choices=["plain", "json", "dot"],
        default="plain",
        help="output format (dot is valid only for 'sb tree')",
    )

    parser = argparse.ArgumentParser(
        prog="sternbrocot",
        description="Farey rows, the [0,1] Stern-Brocot tree, and Bezout certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_farey = sub.add_parser("farey", parents=[fmt], help="print the Farey row of order n")
    p_farey.add_argument("n", type=_positive_int)
    p_farey.set_defaults(func=_cmd_farey)

    p_sb = sub.add_parser("sb", help="Stern-Brocot tree operations")
    sb_sub = p_sb.add_subparsers(dest="sb_command", required=True)

    p_locate = sb_sub.add_parser("locate", parents=[fmt], help="L/R path of a fraction")
    p_locate.add_argument("fraction", type=_fraction_arg)
    p_locate.set_defaults(func=_cmd_sb_locate)

    p_decode = sb_sub.add_parser("decode", parents=[fmt], help="fraction at an L/R path")
    p_decode.add_argument("path", type=_path_arg, nargs="?", default="")
    p_decode.set_defaults(func=_cmd_sb_decode)

    p_neighbors = sb_sub.add_parser(
        "neighbors", parents=[fmt], help="creation bounds of a fraction"
    )
    p_neighbors.add_argument("fraction", type=_fraction_arg)
    p_neighbors.set_defaults(func=_cmd_sb_neighbors)

    p_tree = sb_sub.add_parser("tree", parents=[fmt], help="render the tree to a depth")
    p_tree.add_argument("depth", type=_nonneg_int)
    p_tree.set_defaults(func=_cmd_sb_tree)

    p_bezout = sub.add_parser("bezout", parents=[fmt], help="certificate with m*x + n*y = 1")
    p_bezout.add_argument("m", type=_positive_int)
    p_bezout.add_argument("n", type=_positive_int)
    p_bezout.add_argument("--method", choices=["tree", "euclid"], default="tree")
    p_bezout.set_defaults(func=_cmd_bezout)

    p_approx = sub.add_parser(
        "approx", parents=[fmt], help="best fraction with bounded denominator"
    )
    p_approx.add_argument("value", type=_decimal_arg)
    p_approx.add_argument("max_den", type=_positive_int)
    p_approx.set_defaults(func=_cmd_approx)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "dot" and getattr(args, "sb_command", None) != "tree":
        parser.error("--format dot is only valid for 'sb tree'")
    try:
        return args.func(args)
    except SternBrocotError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
