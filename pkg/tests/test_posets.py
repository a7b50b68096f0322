import itertools
import json

import numpy as np
import pytest

from multilattice.patterns import enumerate_patterns, f_merge, from_ops, in_sector, space
from multilattice.posets import (
    VACUITY_NOTE,
    ExceptionMap,
    FiniteLattice,
    FiniteMonoid,
    FinitePoset,
    PosetError,
    all_monoids,
    all_posets,
    apply_map,
    check_absorbing_hom_prop,
    check_order_props,
    exception_map_from_function,
    exception_maps,
    is_closure,
    is_interior,
    is_interior_adjoint,
    is_monoid_homomorphism,
    is_monotone,
    is_strictly_monotone,
    is_strictly_not_absorbing,
    preserves_meets,
    scan_monoid_homomorphisms,
    scan_order_props,
)


def diamond():
    return FinitePoset.from_relations("0abt", [(0, 1), (0, 2), (1, 3), (2, 3)])


def pattern_poset(k):
    sp = space(k)
    return FinitePoset(sp.leq, [str(p) for p in sp.patterns], validate=k <= 5)


def idx(k, text):
    return [str(p) for p in space(k).patterns].index(text)


# ---- construction --------------------------------------------------------

def test_rejects_non_posets():
    with pytest.raises(PosetError):
        FinitePoset([[1, 1], [1, 1]])
    with pytest.raises(PosetError):
        FinitePoset([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    with pytest.raises(PosetError):
        FinitePoset(np.zeros((2, 3)))


def test_json_round_trip():
    P = diamond()
    again = FinitePoset.from_json(json.dumps(P.to_dict()))
    assert np.array_equal(again.leq, P.leq)
    data = {"elements": ["x", "y", "z"], "leq": [[0, 1], [1, 2]]}
    Q = FinitePoset.from_dict(data)
    assert Q.leq[0, 2]


def test_bounds_and_products():
    P = diamond()
    assert P.bottom() == 0 and P.top() == 3
    assert FinitePoset.antichain(2).bottom() is None
    sq = FinitePoset.chain(2).power(3)
    assert sq.n == 8 and sq.is_bounded()
    prod = P.product(FinitePoset.chain(3))
    assert prod.bottom() == 0 and prod.top() == prod.n - 1


def test_cones():
    P = diamond()
    assert P.lower_cone({3}) == frozenset(range(4))
    assert P.lower_cone(set()) == frozenset(range(4))
    assert P.upper_cone({1, 2}) == {3}
    G3 = pattern_poset(3)
    up = G3.upper_cone({idx(3, "1*2*3")})
    # reachable from 1*2*3 by merging adjacent blocks
    assert {G3.labels[i] for i in up} == {"1*2*3", "1.2*3", "1*2.3", "1.2.3"}


def test_covers():
    C = FinitePoset.chain(2)
    assert C.covers(0, 1) and not C.covers(0, 0)
    assert C.hasse_edges() == [(0, 1)]
    assert FinitePoset.antichain(3).hasse_edges() == []
    G3 = pattern_poset(3)
    assert not G3.covers(idx(3, "1*2*3"), idx(3, "1.2.3"))
    assert G3.covers(idx(3, "1*2*3"), idx(3, "1.2*3"))
    assert len(G3.hasse_edges()) == 18


def test_lattice_tables():
    L = FiniteLattice.from_poset(diamond())
    assert L.meet[1, 2] == 0 and L.join[1, 2] == 3
    assert not FinitePoset.antichain(2).is_lattice()
    LL = L.product(FiniteLattice.from_poset(FinitePoset.chain(2)))
    assert LL.n == 8
    assert np.array_equal(LL.meet, FiniteLattice.from_poset(diamond().product(FinitePoset.chain(2))).meet)


# ---- exception maps ------------------------------------------------------

def test_exception_map_validation():
    P = FinitePoset.chain(3)
    with pytest.raises(PosetError):
        ExceptionMap(P, ((0, 0),))
    with pytest.raises(PosetError):
        ExceptionMap(P, ((0, 1), (0, 2)))
    with pytest.raises(PosetError):
        ExceptionMap(P, ((0, 5),))
    f = ExceptionMap(P, ((1, 0),))
    assert apply_map(f, 1) == 0 and apply_map(f, 2) == 2


def test_identity_map():
    P = diamond()
    f = ExceptionMap(P, ())
    assert is_monotone(f) and is_strictly_monotone(f)
    assert is_interior(f) and is_closure(f)
    M = FiniteMonoid.min_on_chain(3)
    assert is_monoid_homomorphism(ExceptionMap(M, ()), M)


def test_simple_examples():
    A = FinitePoset.antichain(2)
    # both elements are bottom-free; send 1 to 0
    assert is_monotone(ExceptionMap(A, ((1, 0),)))
    C = FinitePoset.chain(3)
    assert is_interior(ExceptionMap(C, ((1, 0),)))


@pytest.mark.parametrize("k", [3, 4])
def test_fj_are_closures_not_interiors(k):
    P = pattern_poset(k)
    for j in range(1, k):
        f = exception_map_from_function(P, [idx(k, str(f_merge(p, j))) for p in space(k).patterns])
        assert is_monotone(f)
        assert not is_strictly_monotone(f)
        assert is_closure(f)
        assert not is_interior(f)


def test_fj_as_exception_map_k6():
    pats = enumerate_patterns(6)
    index = {p: i for i, p in enumerate(pats)}
    sigma = tuple(range(1, 7))
    pairs = []
    for rest in itertools.product((False, True), repeat=4):
        a = from_ops(sigma, (rest[0], False) + rest[1:])
        b = from_ops(sigma, (rest[0], True) + rest[1:])
        pairs.append((index[a], index[b]))
    P = FinitePoset(space(6).leq, validate=False)
    f = ExceptionMap(P, tuple(pairs))
    for p in pats:
        if in_sector(p, sigma):
            assert pats[apply_map(f, index[p])] == f_merge(p, 2)


def _interior_bruteforce(L, t):
    n = len(t)
    mono = all(L[t[x]][t[y]] for x in range(n) for y in range(n) if L[x][y])
    return mono and all(L[t[x]][x] for x in range(n)) and all(t[t[x]] == t[x] for x in range(n))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_interior_against_bruteforce_on_all_maps(m):
    for P in all_posets(m):
        L = P.leq.tolist()
        for values in itertools.product(range(m), repeat=m):
            f = exception_map_from_function(P, values)
            assert is_interior(f) == _interior_bruteforce(L, list(values))
            assert is_interior(f) == is_interior_adjoint(f)
            assert is_interior(f) == is_closure(f.on(P.dual()))


# ---- strictly not absorbing ------------------------------------------------

def test_strictly_not_absorbing_examples():
    L = FiniteLattice.from_poset(diamond())
    assert not is_strictly_not_absorbing({0}, L, "meet")
    assert is_strictly_not_absorbing(set(), L, "meet")
    chain = FiniteLattice.from_poset(FinitePoset.chain(3))
    assert not is_strictly_not_absorbing({2}, chain, "meet")
    assert is_strictly_not_absorbing({0}, chain, "meet")
    assert is_strictly_not_absorbing({2}, chain, "join")


def test_preserves_meets():
    L = FiniteLattice.from_poset(FinitePoset.chain(3))
    assert preserves_meets(ExceptionMap(L.poset, ((1, 0),)), L)
    D = FiniteLattice.from_poset(diamond())
    assert not preserves_meets(ExceptionMap(D.poset, ((1, 3),)), D)


# ---- monoids -------------------------------------------------------------

def test_monoid_validation():
    with pytest.raises(PosetError):
        FiniteMonoid([[0, 1], [1, 1]], identity=1)
    with pytest.raises(PosetError):
        FiniteMonoid([[0, 1, 2], [1, 2, 2], [2, 1, 2]])


def test_min_chain_example():
    M = FiniteMonoid.min_on_chain(3)
    assert M.absorbing_elements() == [0]
    f = ExceptionMap(M, ((1, 0),))
    rep = check_absorbing_hom_prop(M, f)
    assert rep["hypothesis"] is False and rep["violated"] is False


def test_monoid_counts():
    assert [len(all_monoids(m)) for m in (1, 2, 3, 4)] == [1, 2, 11, 156]


# ---- proposition scans ----------------------------------------------------

def test_poset_counts():
    assert [len(all_posets(m)) for m in range(1, 6)] == [1, 2, 5, 16, 63]


def test_check_order_props_shape():
    P = FinitePoset.chain(3)
    rep = check_order_props(P, ExceptionMap(P, ((1, 0),)))
    assert rep["interior_from_bottom"] == {"hypothesis": True, "conclusion": True, "violated": False}


def test_exception_map_counts():
    P = FinitePoset.chain(3)
    maps = list(exception_maps(P, 2))
    assert len(maps) == 3 * 2 + 3 * 4


@pytest.mark.slow
def test_scan_order_props_no_counterexamples():
    reports = {r.prop: r for r in scan_order_props(5, 2)}
    for name in ("interior_from_bottom", "interior_from_sole_cover",
                 "closure_from_top", "closure_from_sole_cover",
                 "interior_adjoint_agreement", "closure_adjoint_agreement", "duality"):
        assert reports[name].violations == 0, reports[name].to_dict()
        assert reports[name].hypothesis_held > 0
    # interior maps whose targets are not all the bottom do exist
    assert reports["interior_without_bottom"].hypothesis_held > 0
    for name in ("meet_preservation", "join_preservation"):
        assert reports[name].violations == 0
        assert reports[name].note == VACUITY_NOTE


def test_scan_monoids():
    rep = scan_monoid_homomorphisms(4)
    assert rep.violations == 0
    assert rep.instances > 0
