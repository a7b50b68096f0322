"""DOT and JSON writers for pattern posets."""
from __future__ import annotations

import json

import numpy as np

from . import _kernels
from .patterns import Pattern, level, space


def hasse_edges(k: int) -> list[tuple[Pattern, Pattern, int]]:
    """Covering pairs ``(x, y, j)`` with ``y = f_j(x)``, in a fixed order."""
    sp = space(k)
    P = sp.patterns
    cov = _kernels.covers_matrix(sp.leq)
    out = []
    for a, b in zip(*np.nonzero(cov)):
        x, y = P[int(a)], P[int(b)]
        # y merges exactly one adjacent pair of x's blocks; j is the boundary position
        i = next(i for i, blk in enumerate(y.blocks) if blk != x.blocks[i])
        j = sum(len(blk) for blk in x.blocks[: i + 1])
        out.append((x, y, j))
    return out


def _node_id(p: Pattern) -> str:
    return "p_" + "_".join("".join(str(i) for i in b) for b in p.blocks)


def hasse_dot(k: int) -> str:
    """Hasse diagram with one ``rank=same`` row per level, top drawn highest."""
    sp = space(k)
    lines = [f'digraph patterns_k{k} {{', "  rankdir=BT;", "  node [shape=box];"]
    by_level: dict[int, list[Pattern]] = {}
    for p in sp.patterns:
        by_level.setdefault(level(p), []).append(p)
    for lv in sorted(by_level):
        names = " ".join(f'{_node_id(p)} [label="{p}"];' for p in by_level[lv])
        lines.append(f"  {{ rank=same; {names} }}")
    for x, y, j in hasse_edges(k):
        lines.append(f'  {_node_id(x)} -> {_node_id(y)} [label="f{j}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def patterns_json(patterns) -> str:
    return json.dumps([p.to_list() for p in patterns])


def hasse_json(k: int) -> str:
    sp = space(k)
    return json.dumps(
        {
            "k": k,
            "patterns": [p.to_list() for p in sp.patterns],
            "levels": [level(p) for p in sp.patterns],
            "covers": [[x.to_list(), y.to_list(), j] for x, y, j in hasse_edges(k)],
        }
    )
