"""Colored multigraph layers and the merge operation.

A layer lives on a fixed universe of positive integer node ids and a fixed
finite color universe.  Each unordered node pair carries at most one edge
record holding a multiplicity and a non-empty set of colors.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Mapping

import numpy as np


class LayerError(ValueError):
    pass


class UniverseMismatch(LayerError):
    pass


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    mult: int
    colors: frozenset[str]

    @property
    def key(self) -> tuple[int, int]:
        return _pair(self.u, self.v)


@dataclass(frozen=True)
class LayerStats:
    vertex_count: int
    edge_key_count: int
    total_multiplicity: int
    color_count: int

    def as_dict(self) -> dict:
        return {
            "vertexCount": self.vertex_count,
            "edgeKeyCount": self.edge_key_count,
            "totalMultiplicity": self.total_multiplicity,
            "colorCount": self.color_count,
        }


@dataclass(frozen=True)
class Layer:
    """Immutable colored multigraph.

    Construction does not validate; use :func:`validate_layer` (or
    :meth:`from_json`, which does) before relying on the invariants.
    Equality is structural over nodes, canonical edge records and the
    color universe.
    """

    nodes: frozenset[int]
    edges: tuple[Edge, ...]
    color_universe: frozenset[str]
    _index: Mapping[tuple[int, int], Edge] = field(
        default=None, init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        edges = tuple(
            sorted(
                (Edge(*_pair(e.u, e.v), e.mult, frozenset(e.colors)) for e in self.edges),
                key=lambda e: (e.u, e.v),
            )
        )
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "color_universe", frozenset(self.color_universe))
        object.__setattr__(self, "_index", {e.key: e for e in edges})

    @classmethod
    def build(
        cls,
        nodes: Iterable[int],
        edges: Iterable[tuple[int, int, int, Iterable[str]]],
        color_universe: Iterable[str],
    ) -> "Layer":
        return cls(
            frozenset(nodes),
            tuple(Edge(u, v, m, frozenset(c)) for u, v, m, c in edges),
            frozenset(color_universe),
        )

    @classmethod
    def empty(cls, color_universe: Iterable[str] = ()) -> "Layer":
        return cls(frozenset(), (), frozenset(color_universe))

    def edge(self, u: int, v: int) -> Edge | None:
        return self._index.get(_pair(u, v))

    def multiplicity(self, u: int, v: int) -> int:
        e = self.edge(u, v)
        return 0 if e is None else e.mult

    def colors(self) -> frozenset[str]:
        return frozenset().union(*(e.colors for e in self.edges))

    def to_dict(self) -> dict:
        return {
            "nodes": sorted(self.nodes),
            "edges": [
                {"u": e.u, "v": e.v, "mult": e.mult, "colors": sorted(e.colors)}
                for e in self.edges
            ],
            "colorUniverse": sorted(self.color_universe),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Layer":
        try:
            layer = cls(
                frozenset(int(n) for n in data["nodes"]),
                tuple(
                    Edge(int(e["u"]), int(e["v"]), int(e["mult"]), frozenset(e["colors"]))
                    for e in data["edges"]
                ),
                frozenset(data["colorUniverse"]),
            )
        except (KeyError, TypeError) as exc:
            raise LayerError(f"malformed layer document: {exc!r}") from exc
        problems = validate_layer(layer)
        if problems:
            raise LayerError("; ".join(problems))
        return layer

    @classmethod
    def from_json(cls, text: str) -> "Layer":
        return cls.from_dict(json.loads(text))


def validate_layer(layer: Layer) -> list[str]:
    """Return a list of invariant violations; empty means valid."""
    report = []
    for n in sorted(layer.nodes):
        if n < 1:
            report.append(f"node id {n} is not positive")
    seen = set()
    for e in layer.edges:
        if e.key in seen:
            report.append(f"duplicate edge record for {e.key}")
        seen.add(e.key)
        for end in (e.u, e.v):
            if end not in layer.nodes:
                report.append(f"dangling endpoint {end} on edge {e.key}")
        if e.mult < 1:
            report.append(f"edge {e.key} has multiplicity {e.mult} < 1")
        if not e.colors:
            report.append(f"edge {e.key} has an empty color set")
        stray = e.colors - layer.color_universe
        if stray:
            report.append(f"edge {e.key} uses colors outside the universe: {sorted(stray)}")
    return report


def merge_layers(g: Layer, h: Layer) -> Layer:
    """Merge two layers: union of nodes, summed multiplicities, united colors."""
    if g.color_universe != h.color_universe:
        raise UniverseMismatch(
            f"color universes differ: {sorted(g.color_universe)} vs {sorted(h.color_universe)}"
        )
    edges = []
    for key in sorted(set(g._index) | set(h._index)):
        eg, eh = g._index.get(key), h._index.get(key)
        mult = (eg.mult if eg else 0) + (eh.mult if eh else 0)
        if mult == 0:
            continue
        colors = (eg.colors if eg else frozenset()) | (eh.colors if eh else frozenset())
        edges.append(Edge(key[0], key[1], mult, colors))
    return Layer(g.nodes | h.nodes, tuple(edges), g.color_universe)


def merge_all(layers: Iterable[Layer]) -> Layer:
    layers = list(layers)
    if not layers:
        raise LayerError("cannot merge an empty list of layers")
    return reduce(merge_layers, layers)


def color_count(layer: Layer) -> int:
    return len(layer.colors())


def layer_stats(layer: Layer) -> LayerStats:
    return LayerStats(
        vertex_count=len(layer.nodes),
        edge_key_count=len(layer.edges),
        total_multiplicity=sum(e.mult for e in layer.edges),
        color_count=color_count(layer),
    )


def random_layer(
    rng: np.random.Generator,
    max_nodes: int = 8,
    edge_prob: float = 0.4,
    max_mult: int = 3,
    color_universe: tuple[str, ...] = ("c1", "c2", "c3", "c4", "c5"),
) -> Layer:
    """Draw a valid layer.

    Nodes are a uniformly sized random subset of ``1..max_nodes``; each
    pair ``u < v`` of chosen nodes gets an edge with probability
    ``edge_prob``, multiplicity uniform in ``1..max_mult`` and a non-empty
    uniformly drawn color subset.
    """
    size = int(rng.integers(0, max_nodes + 1))
    nodes = sorted(int(x) + 1 for x in rng.choice(max_nodes, size=size, replace=False))
    edges = []
    ncol = len(color_universe)
    for i, u in enumerate(nodes):
        for v in nodes[i + 1:]:
            if rng.random() >= edge_prob:
                continue
            mult = int(rng.integers(1, max_mult + 1))
            mask = int(rng.integers(1, 1 << ncol))
            colors = frozenset(c for b, c in enumerate(color_universe) if mask >> b & 1)
            edges.append(Edge(u, v, mult, colors))
    return Layer(frozenset(nodes), tuple(edges), frozenset(color_universe))


# The two layers drawn in the introduction's merge figure, plus a third layer
# used when a three-layer list is needed.
FIGURE_COLORS = frozenset({"blue", "red", "green", "yellow"})

FIGURE_G = Layer.build(
    [1, 2, 3],
    [(1, 2, 3, {"blue", "red"}), (2, 3, 1, {"blue"})],
    FIGURE_COLORS,
)

FIGURE_H = Layer.build(
    [1, 2, 3, 4],
    [(1, 2, 1, {"green"}), (1, 3, 1, {"yellow"}), (3, 4, 2, {"yellow", "green"})],
    FIGURE_COLORS,
)

FIGURE_K = Layer.build(
    [2, 4],
    [(2, 4, 1, {"red"})],
    FIGURE_COLORS,
)
