import itertools
import json

import numpy as np
import pytest

from multilattice.layers import (
    FIGURE_COLORS,
    FIGURE_G,
    FIGURE_H,
    FIGURE_K,
    Edge,
    Layer,
    LayerError,
    UniverseMismatch,
    color_count,
    layer_stats,
    merge_all,
    merge_layers,
    random_layer,
    validate_layer,
)


def test_figure_layers_are_valid():
    for layer in (FIGURE_G, FIGURE_H, FIGURE_K):
        assert validate_layer(layer) == []


def test_dangling_endpoint_reported():
    bad = Layer.build([1, 2, 3], [(1, 5, 1, {"red"})], {"red"})
    assert any("dangling endpoint" in p for p in validate_layer(bad))


def test_empty_layer_valid_and_zero_stats():
    e = Layer.empty(FIGURE_COLORS)
    assert validate_layer(e) == []
    assert color_count(e) == 0
    assert layer_stats(e).as_dict() == {
        "vertexCount": 0,
        "edgeKeyCount": 0,
        "totalMultiplicity": 0,
        "colorCount": 0,
    }


@pytest.mark.parametrize(
    "edges, fragment",
    [
        ([(1, 2, 0, {"red"})], "multiplicity"),
        ([(1, 2, 1, set())], "color"),
        ([(1, 2, 1, {"purple"})], "universe"),
    ],
)
def test_invalid_edges_reported(edges, fragment):
    layer = Layer.build([1, 2], edges, {"red"})
    problems = validate_layer(layer)
    assert problems and any(fragment in p for p in problems)


def test_figure_merge_counts():
    m = merge_layers(FIGURE_G, FIGURE_H)
    assert len(m.nodes) == 3 + 4 - 3
    assert color_count(m) == 2 + 2 - 0
    assert m.multiplicity(1, 2) == 4
    assert m.edge(1, 2).colors == {"blue", "red", "green"}
    assert layer_stats(FIGURE_G).as_dict() == {
        "vertexCount": 3,
        "edgeKeyCount": 2,
        "totalMultiplicity": 4,
        "colorCount": 2,
    }
    assert tuple(layer_stats(m).as_dict().values()) == (4, 4, 8, 4)


def test_merge_identity_and_self():
    assert merge_layers(FIGURE_G, Layer.empty(FIGURE_COLORS)) == FIGURE_G
    doubled = merge_layers(FIGURE_G, FIGURE_G)
    assert doubled.nodes == FIGURE_G.nodes
    assert [(e.key, e.mult, e.colors) for e in doubled.edges] == [
        (e.key, 2 * e.mult, e.colors) for e in FIGURE_G.edges
    ]


def test_universe_mismatch():
    other = Layer.build([1], [], {"red"})
    with pytest.raises(UniverseMismatch):
        merge_layers(FIGURE_G, other)


def test_merge_all_fold_order_independent():
    layers = [FIGURE_G, FIGURE_H, FIGURE_K]
    results = {merge_all(p) for p in itertools.permutations(layers)}
    assert len(results) == 1


def test_edge_key_is_unordered():
    layer = Layer.build([1, 2], [(2, 1, 1, {"red"})], {"red"})
    assert layer.edges[0].key == (1, 2)
    assert layer.multiplicity(2, 1) == 1


def test_self_loop_allowed():
    layer = Layer.build([1], [(1, 1, 2, {"red"})], {"red"})
    assert validate_layer(layer) == []


def test_json_round_trip_is_byte_stable():
    text = FIGURE_H.to_json()
    again = Layer.from_json(text)
    assert again == FIGURE_H
    assert again.to_json() == text
    data = json.loads(text)
    assert data["nodes"] == [1, 2, 3, 4]
    assert data["edges"][2]["colors"] == ["green", "yellow"]


def test_from_json_rejects_invalid():
    with pytest.raises(LayerError):
        Layer.from_dict({"nodes": [1], "edges": [{"u": 1, "v": 2, "mult": 1, "colors": ["a"]}],
                         "colorUniverse": ["a"]})
    with pytest.raises(LayerError):
        Layer.from_dict({"nodes": [1]})


def test_random_layers_valid_and_seeded():
    a = [random_layer(np.random.default_rng(7)) for _ in range(3)]
    b = [random_layer(np.random.default_rng(7)) for _ in range(3)]
    assert a == b
    rng = np.random.default_rng(1)
    for _ in range(200):
        layer = random_layer(rng)
        assert validate_layer(layer) == []
        assert len(layer.nodes) <= 8
        assert all(1 <= e.mult <= 3 for e in layer.edges)
        assert len(layer.color_universe) == 5


def test_counting_laws_on_random_pairs():
    rng = np.random.default_rng(2024)
    for _ in range(300):
        g, h = random_layer(rng), random_layer(rng)
        m = merge_layers(g, h)
        assert validate_layer(m) == []
        assert len(m.nodes) == len(g.nodes) + len(h.nodes) - len(g.nodes & h.nodes)
        cg, ch = g.colors(), h.colors()
        assert color_count(m) == len(cg) + len(ch) - len(cg & ch)
        for key in set(g._index) | set(h._index):
            assert m.multiplicity(*key) == g.multiplicity(*key) + h.multiplicity(*key)
        assert m == merge_layers(h, g)


def test_edge_dataclass_key():
    assert Edge(3, 1, 1, frozenset({"x"})).key == (1, 3)
