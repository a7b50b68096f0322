"""Exhaustive law suites over the pattern poset, plus the named suite runner.

Each suite returns a list of :class:`LawReport`; a suite passes when every
non-informational report has zero violations.
"""
from __future__ import annotations

import itertools
import math

import numpy as np

from . import _kernels
from .algebra import (
    SUITE_CAP,
    check_drl,
    check_fj_partial_hom,
    check_lattice_ordered_partial_monoid,
    check_left_regular_band,
    check_partial_monoid,
    induced_order_report,
)
from .patterns import (
    Pattern,
    PatternError,
    complement,
    from_ops,
    join,
    meet,
    minimal_patterns,
    top_pattern,
)
from .posets import VACUITY_NOTE, scan_monoid_homomorphisms, scan_order_props
from .reports import LawReport, PropReport
from .tables import tables

DISTRIBUTIVITY_CAP = 6


def _check_cap(k: int, cap: int = SUITE_CAP):
    if not 1 <= k <= cap:
        raise PatternError(f"k={k} outside the exhaustive-suite range 1..{cap}")


def _bulk(report: LawReport, ok: np.ndarray, witnesses, defined: np.ndarray | None = None):
    """Record a whole boolean array of outcomes at once."""
    ok = np.asarray(ok, dtype=bool).ravel()
    defined = np.ones_like(ok) if defined is None else np.asarray(defined, dtype=bool).ravel()
    report.pairs_tested += ok.size
    report.defined_pairs += int(defined.sum())
    bad = np.flatnonzero(defined & ~ok)
    report.violations += bad.size
    for i in bad[: max(0, 10 - len(report.witnesses))]:
        report.witnesses.append(witnesses(int(i)))


def poset_suite(k: int) -> list[LawReport]:
    """Order axioms, top and minimal elements, reachability via f_j, level shift."""
    _check_cap(k)
    T = tables(k)
    P, L = T.patterns, T.leq
    n = T.n
    refl, anti, trans = _kernels.order_violations(L)
    out = []
    for name, v, tested in (
        ("reflexive", refl, n),
        ("antisymmetric", anti, n * (n - 1) // 2),
        ("transitive", trans, n * n),
    ):
        r = LawReport(name, k, pairs_tested=tested, defined_pairs=tested, violations=v)
        out.append(r)

    maximal = [P[i] for i in range(n) if not (L[i] & ~L[:, i]).any()]
    top = LawReport("unique_top", k)
    top.record(True, maximal == [top_pattern(k)], [str(m) for m in maximal])
    out.append(top)

    minimal = {P[i] for i in range(n) if not (L[:, i] & ~L[i]).any()}
    mins = LawReport("minimal_count_factorial", k)
    mins.record(
        True,
        len(minimal) == math.factorial(k) and minimal == set(minimal_patterns(k)),
        len(minimal),
    )
    out.append(mins)

    # reachability closure of the f_j steps
    step = np.eye(n, dtype=np.bool_)
    for fj in T.f.values():
        step[np.arange(n), fj] = True
    reach = step.copy()
    while True:
        nxt = (reach.astype(np.int32) @ step.astype(np.int32)) > 0
        if np.array_equal(nxt, reach):
            break
        reach = nxt
    corr = LawReport("order_equals_f_reachability", k)
    _bulk(corr, reach == L, lambda i: (P[i // n], P[i % n]))
    out.append(corr)

    shift = LawReport("level_shift", k)
    levels = np.array([k - len(p.blocks) for p in P])
    for j, fj in T.f.items():
        moved = fj != np.arange(n)
        _bulk(shift, levels[fj] == levels + 1, lambda i, j=j: (j, P[i]), moved)
    out.append(shift)
    return out


def closure_suite(k: int) -> list[LawReport]:
    """Every f_j is a closure map that preserves same-sector meets and joins."""
    _check_cap(k)
    T = tables(k)
    P, L, M, J, same = T.patterns, T.leq, T.meet, T.join, T.same_sector
    n = T.n
    mono = LawReport("fj_monotone", k)
    inc = LawReport("fj_increasing", k)
    idem = LawReport("fj_idempotent", k)
    pm = LawReport("fj_preserves_sector_meet", k)
    pj = LawReport("fj_preserves_sector_join", k)
    for j, f in T.f.items():
        pair = lambda i, j=j: (j, P[i // n], P[i % n])
        single = lambda i, j=j: (j, P[i])
        _bulk(mono, ~L | L[np.ix_(f, f)], pair)
        _bulk(inc, L[np.arange(n), f], single)
        _bulk(idem, f[f] == f, single)
        _bulk(pm, f[M] == M[np.ix_(f, f)], pair, same)
        _bulk(pj, f[J] == J[np.ix_(f, f)], pair, same)

    full = LawReport("full_merge_any_order_reaches_top", k)
    for order in itertools.permutations(range(1, k)):
        cur = np.arange(n)
        for j in order:
            cur = T.f[j][cur]
        _bulk(full, cur == T.top, lambda i, o=order: (o, P[i]))
    return [mono, inc, idem, pm, pj, full]


def _distributivity_vectors(report_meet, report_join, S: np.ndarray, M, J, witness):
    """Distributive laws for every operator-vector triple of one sector."""
    x, y, z = (a.ravel() for a in np.meshgrid(S, S, S, indexing="ij"))
    _bulk(report_meet, M[x, J[y, z]] == J[M[x, y], M[x, z]], lambda i: witness(x[i], y[i], z[i]))
    _bulk(report_join, J[x, M[y, z]] == M[J[x, y], J[x, z]], lambda i: witness(x[i], y[i], z[i]))


def distributivity_by_patterns(k: int, sigma=None) -> list[LawReport]:
    """Absorption over every operator-vector pair and distributivity over every
    triple of one sector, computed through :func:`meet`/:func:`join`.

    Used where full operation tables are too large (k = 6).
    """
    if not 1 <= k <= DISTRIBUTIVITY_CAP:
        raise PatternError(f"k={k} outside 1..{DISTRIBUTIVITY_CAP}")
    sigma = tuple(sigma or range(1, k + 1))
    vecs = [from_ops(sigma, v) for v in itertools.product((False, True), repeat=k - 1)]
    dm = LawReport("distributive_meet_over_join", k)
    dj = LawReport("distributive_join_over_meet", k)
    mt = {(a, b): meet(a, b) for a in vecs for b in vecs}
    jt = {(a, b): join(a, b) for a in vecs for b in vecs}
    ab_m = LawReport("absorption_join_of_meet", k)
    ab_j = LawReport("absorption_meet_of_join", k)
    for x, y in itertools.product(vecs, repeat=2):
        ab_m.record(True, join(x, mt[x, y]) == x, (sigma, x, y))
        ab_j.record(True, meet(x, jt[x, y]) == x, (sigma, x, y))
    for x, y, z in itertools.product(vecs, repeat=3):
        dm.record(True, meet(x, jt[y, z]) == join(mt[x, y], mt[x, z]), (sigma, x, y, z))
        dj.record(True, join(x, mt[y, z]) == meet(jt[x, y], jt[x, z]), (sigma, x, y, z))
    return [ab_m, ab_j, dm, dj]


def complements_by_patterns(k: int) -> list[LawReport]:
    """Complement laws for every pattern of every sector, through the pattern API."""
    if not 1 <= k <= DISTRIBUTIVITY_CAP:
        raise PatternError(f"k={k} outside 1..{DISTRIBUTIVITY_CAP}")
    top = top_pattern(k)
    cj = LawReport("complement_join_is_top", k)
    cm = LawReport("complement_meet_is_sector_minimal", k)
    inv = LawReport("complement_involution", k)
    for sigma in itertools.permutations(range(1, k + 1)):
        bottom = from_ops(sigma, [False] * (k - 1))
        for v in itertools.product((False, True), repeat=k - 1):
            x = from_ops(sigma, v)
            c = complement(x, sigma)
            cj.record(True, join(x, c) == top, (sigma, x))
            cm.record(True, meet(x, c) == bottom, (sigma, x))
            inv.record(True, complement(c, sigma) == x, (sigma, x))
    return [cj, cm, inv]


def lattice_suite(k: int) -> list[LawReport]:
    """Meet/join against the explicit glb/lub, sector formulas, absorption,
    distributivity and complements."""
    if k == DISTRIBUTIVITY_CAP:
        return distributivity_by_patterns(k) + complements_by_patterns(k)
    _check_cap(k)
    T = tables(k)
    P, M, J, same = T.patterns, T.meet, T.join, T.same_sector
    n, top = T.n, T.top
    pair = lambda i: (P[i // n], P[i % n])

    glb = LawReport("meet_equals_glb", k)
    lub = LawReport("join_equals_lub", k)
    _bulk(glb, M == T.glb, pair)
    _bulk(lub, J == T.lub, pair)

    sm = LawReport("meet_matches_every_common_sector", k)
    sj = LawReport("join_matches_every_common_sector", k)
    dm = LawReport("distributive_meet_over_join", k)
    dj = LawReport("distributive_join_over_meet", k)
    cj = LawReport("complement_join_is_top", k)
    cm = LawReport("complement_meet_is_sector_minimal", k)
    inv = LawReport("complement_involution", k)
    vs = np.arange(1 << (k - 1))
    full = (1 << (k - 1)) - 1
    for sigma, S in T.sector_index.items():
        v, w = np.meshgrid(vs, vs, indexing="ij")
        wit = lambda i, s=sigma, v=v, w=w: (s, P[S[v.ravel()[i]]], P[S[w.ravel()[i]]])
        _bulk(sm, M[S[v], S[w]] == S[v & w], wit)
        _bulk(sj, J[S[v], S[w]] == S[v | w], wit)
        _distributivity_vectors(dm, dj, S, M, J, lambda x, y, z, s=sigma: (s, P[x], P[y], P[z]))
        comp = S[full ^ vs]
        single = lambda i, s=sigma: (s, P[S[i]])
        _bulk(cj, J[S, comp] == top, single)
        _bulk(cm, M[S, comp] == S[0], single)
        for x in S:
            p = P[x]
            inv.record(True, complement(complement(p, sigma), sigma) == p, (sigma, p))

    ab_m = LawReport("absorption_join_of_meet", k)
    ab_j = LawReport("absorption_meet_of_join", k)
    x, y = np.nonzero(same)
    _bulk(ab_m, J[x, M[x, y]] == x, lambda i: (P[x[i]], P[y[i]]))
    _bulk(ab_j, M[x, J[x, y]] == x, lambda i: (P[x[i]], P[y[i]]))
    return [glb, lub, sm, sj, ab_m, ab_j, dm, dj, cj, cm, inv]


def algebra_reports(k: int) -> dict[str, list[LawReport]]:
    return {
        "monoid": check_partial_monoid(k)
        + check_lattice_ordered_partial_monoid(k)
        + check_fj_partial_hom(k),
        "drl": check_drl(k),
        "band": check_left_regular_band(k) + [induced_order_report(k)],
    }


def order_prop_reports() -> list[PropReport]:
    return scan_order_props() + [scan_monoid_homomorphisms()]


# Ideal examples at k = 3, written over the layer names G, H, K = 1, 2, 3.

def _p(*blocks) -> Pattern:
    return Pattern(tuple(tuple(b) for b in blocks))


IDEAL_EXAMPLE_SMALL = frozenset({_p([3], [1], [2]), _p([3], [2], [1]), _p([3], [1, 2])})
IDEAL_EXAMPLE_LARGE = IDEAL_EXAMPLE_SMALL | {_p([2, 3], [1]), _p([2], [3], [1])}


def ideal_report(S, name: str) -> dict:
    from .patterns import downdirected_witnesses, joinclosed_witnesses

    S = frozenset(S)
    jc = joinclosed_witnesses(S)
    dd = downdirected_witnesses(S)
    return {
        "name": name,
        "elements": sorted(str(p) for p in S),
        "joinClosed": not jc,
        "downDirected": bool(S) and not dd["below"] and not dd["unbounded"],
        "joinWitnesses": [[str(a), str(b), str(z)] for a, b, z in jc],
        "belowWitnesses": [[str(a), str(x)] for a, x in dd["below"]],
        "unboundedWitnesses": [
            {"pair": [str(a), str(b)], "commonUpperBounds": [str(u) for u in ups]}
            for a, b, ups in dd["unbounded"]
        ],
    }


def ideal_examples() -> list[dict]:
    from .patterns import enumerate_patterns

    return [
        ideal_report(enumerate_patterns(3), "whole_poset_k3"),
        ideal_report(IDEAL_EXAMPLE_SMALL, "three_element_example"),
        ideal_report(IDEAL_EXAMPLE_LARGE, "five_element_example"),
    ]


SUITES = ("poset", "lattice", "monoid", "drl", "band", "props3", "all")


def run_suite(name: str, k: int) -> list:
    """Reports for one named suite; ``all`` concatenates every suite."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if name == "props3":
        return order_prop_reports()
    if name == "all":
        out = []
        for s in SUITES[:-2]:
            out += run_suite(s, k)
        return out + order_prop_reports()
    if name == "poset":
        return poset_suite(k) + closure_suite(k)
    if name == "lattice":
        return lattice_suite(k)
    return algebra_reports(k)[name]


__all__ = [
    "DISTRIBUTIVITY_CAP",
    "IDEAL_EXAMPLE_LARGE",
    "IDEAL_EXAMPLE_SMALL",
    "SUITES",
    "VACUITY_NOTE",
    "algebra_reports",
    "closure_suite",
    "complements_by_patterns",
    "distributivity_by_patterns",
    "ideal_examples",
    "ideal_report",
    "lattice_suite",
    "poset_suite",
    "order_prop_reports",
    "run_suite",
]
