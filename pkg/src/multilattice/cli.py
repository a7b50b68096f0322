"""Command-line interface.

Patterns are written with ``.`` for MERGE (binds tighter) and ``*`` for
TENSOR, over layer indices ``1..k``: ``1.2*3`` merges layers 1 and 2 and
places the result before layer 3.

Exit codes: 0 success, 1 a law check found a violation, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .export import hasse_dot, hasse_json
from .layers import Layer, LayerError, merge_all, random_layer
from .patterns import (
    ENUMERATION_CAP,
    IDEAL_CAP,
    Pattern,
    PatternError,
    compare,
    enumerate_ideals,
    enumerate_patterns,
    level,
)
from .parsing import parse_pattern
from .posets import PosetError
from .reports import all_passed
from .suites import SUITE_CAP, SUITES, run_suite

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def realize(pattern: Pattern, layers: list[Layer]) -> list[Layer]:
    """One merged layer per block of ``pattern``, in block order."""
    if len(layers) != pattern.k:
        raise LayerError(f"pattern needs {pattern.k} layers, got {len(layers)}")
    return [merge_all(layers[i - 1] for i in block) for block in pattern.blocks]


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _check_k(k: int, cap: int):
    if not 1 <= k <= cap:
        raise UsageError(f"--k must be in 1..{cap}, got {k}")


def _load_layers(paths) -> list[Layer]:
    return [Layer.from_json(Path(p).read_text()) for p in paths]


def cmd_enumerate(args) -> int:
    cap = args.cap or ENUMERATION_CAP
    _check_k(args.k, cap)
    pats = enumerate_patterns(args.k, cap)
    data = {
        "k": args.k,
        "count": len(pats),
        "patterns": [p.to_list() for p in pats],
        "text": [str(p) for p in pats],
        "levels": [level(p) for p in pats],
    }
    _emit(json.dumps(data), args.out)
    return EXIT_OK


def cmd_hasse(args) -> int:
    cap = args.cap or ENUMERATION_CAP
    _check_k(args.k, cap)
    text = hasse_json(args.k) if args.format == "json" else hasse_dot(args.k)
    _emit(text, args.out)
    return EXIT_OK


def cmd_order(args) -> int:
    x = parse_pattern(args.x, args.k)
    y = parse_pattern(args.y, args.k if args.k else x.k)
    if x.k != y.k:
        raise UsageError(f"patterns have different k ({x.k} and {y.k})")
    _emit(compare(x, y), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    if args.suite != "props3":
        _check_k(args.k, args.cap or SUITE_CAP)
    reports = run_suite(args.suite, args.k)
    ok = all_passed(reports)
    data = {
        "suite": args.suite,
        "k": args.k,
        "passed": ok,
        "violations": sum(r.violations for r in reports if not r.informational),
        "reports": [r.to_dict() for r in reports],
    }
    _emit(json.dumps(data, indent=1), args.out)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_ideals(args) -> int:
    cap = args.cap or IDEAL_CAP
    _check_k(args.k, cap)
    ideals = enumerate_ideals(args.k, args.which, cap)
    data = {
        "k": args.k,
        "definition": args.which,
        "count": len(ideals),
        "ideals": [sorted(str(p) for p in I) for I in ideals],
    }
    _emit(json.dumps(data), args.out)
    return EXIT_OK


def cmd_merge(args) -> int:
    layers = _load_layers(args.files)
    _emit(merge_all(layers).to_json(), args.out)
    return EXIT_OK


def cmd_realize(args) -> int:
    p = parse_pattern(args.pattern, args.k)
    if args.files:
        layers = _load_layers(args.files)
    else:
        rng = np.random.default_rng(args.seed)
        layers = [random_layer(rng) for _ in range(p.k)]
    result = realize(p, layers)
    data = {"pattern": str(p), "layers": [json.loads(L.to_json()) for L in result]}
    _emit(json.dumps(data), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, default=3, help="number of layers (default 3)")
    common.add_argument("--seed", type=int, default=0, help="seed for random layers")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--format", choices=("dot", "json"), default="dot")
    common.add_argument("--cap", type=int, help="override the size limit for this command")

    parser = argparse.ArgumentParser(
        prog="multilattice",
        description="Concatenation patterns of multigraph layers: "
        "'.' merges layers (binds tighter), '*' juxtaposes them; e.g. 1.2*3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list every pattern for k")
    p.set_defaults(func=cmd_enumerate)
    p = sub.add_parser("hasse", parents=[common], help="Hasse diagram as DOT or JSON")
    p.set_defaults(func=cmd_hasse)
    p = sub.add_parser("order", parents=[common], help="compare two patterns")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_order, k=None)
    p = sub.add_parser("check", parents=[common], help="run a law-checking suite")
    p.add_argument("suite", choices=SUITES)
    p.set_defaults(func=cmd_check)
    p = sub.add_parser("ideals", parents=[common], help="enumerate ideals")
    p.add_argument("which", choices=("v1", "v2"), help="v1: join-closed, v2: down-set and directed")
    p.set_defaults(func=cmd_ideals)
    p = sub.add_parser("merge", parents=[common], help="merge layer JSON files")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_merge)
    p = sub.add_parser(
        "realize",
        parents=[common],
        help="apply a pattern to layer files (or seeded random layers)",
    )
    p.add_argument("pattern")
    p.add_argument("files", nargs="*")
    p.set_defaults(func=cmd_realize, k=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, PatternError, LayerError, PosetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
