"""The partial-minimum monoid on patterns and its ordered-algebra laws.

``x + y`` is defined only for comparable patterns and returns the smaller
one; the top pattern is the identity.  Each ``check_*`` function scans every
pair or triple for one k and returns :class:`LawReport` counters.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .patterns import Pattern, PatternError, Sector, from_ops, in_sector, leq
from .reports import LawReport
from .tables import tables

SUITE_CAP = 5


@dataclass(frozen=True)
class PartialSum:
    result: Pattern | None

    @property
    def defined(self) -> bool:
        return self.result is not None


def padd(x: Pattern, y: Pattern) -> PartialSum:
    if leq(x, y):
        return PartialSum(x)
    if leq(y, x):
        return PartialSum(y)
    return PartialSum(None)


def subtract(y: Pattern, x: Pattern, sector: Sector) -> Pattern:
    """``y - x`` inside ``sector``: MERGE exactly where x has TENSOR and y has MERGE."""
    for p in (x, y):
        if not in_sector(p, sector):
            raise PatternError(f"{p} does not lie in sector {sector}")
    return from_ops(sector, [ym and not xm for xm, ym in zip(x.merges, y.merges)])


def _check_cap(k: int, cap: int):
    if not 1 <= k <= cap:
        raise PatternError(f"k={k} outside the exhaustive-suite range 1..{cap}")


def _pairs(T):
    """Index pairs ``(x, y)`` with ``x + y`` defined."""
    xs, ys = np.nonzero(T.comparable)
    return list(zip(xs.tolist(), ys.tolist()))


def check_partial_monoid(k: int, cap: int = SUITE_CAP) -> list[LawReport]:
    _check_cap(k, cap)
    T = tables(k)
    P, add, comp, top = T.patterns, T.padd, T.comparable, T.top
    comm = LawReport("padd_commutative", k)
    ident = LawReport("padd_identity_top", k)
    assoc = LawReport("padd_associative_on_chains", k)
    mixed = LawReport(
        "padd_associativity_mixed_definedness",
        k,
        informational=True,
        note="triples where exactly one bracketing is defined; counted, not asserted",
    )
    for x in range(T.n):
        ident.record(True, add[x, top] == x and add[top, x] == x, P[x])
        for y in range(T.n):
            comm.record(bool(comp[x, y]), add[x, y] == add[y, x], (P[x], P[y]))
    nb = [np.flatnonzero(comp[x]).tolist() for x in range(T.n)]
    # triples with (x+y)+z defined
    for x, y in _pairs(T):
        xy = add[x, y]
        for z in nb[xy]:
            yz = add[y, z]
            right = add[x, yz] if yz >= 0 else -1
            if comp[y, z] and comp[x, z]:
                assoc.record(True, add[xy, z] == right, (P[x], P[y], P[z]))
            elif right < 0:
                mixed.record(True, False, (P[x], P[y], P[z]))
    # triples with only x+(y+z) defined
    for y, z in _pairs(T):
        yz = add[y, z]
        for x in nb[yz]:
            if not comp[x, y]:
                mixed.record(True, False, (P[x], P[y], P[z]))
    return [comm, ident, assoc, mixed]


def check_lattice_ordered_partial_monoid(k: int, cap: int = SUITE_CAP) -> list[LawReport]:
    """Translation invariance and distributivity of ``+`` over meet and join."""
    _check_cap(k, cap)
    T = tables(k)
    P, add, L, comp, J, M = T.patterns, T.padd, T.leq, T.comparable, T.join, T.meet
    trans = LawReport("translation_invariance", k)
    dj = LawReport("padd_distributes_over_join", k)
    dm = LawReport("padd_distributes_over_meet", k)
    neighbours = [np.flatnonzero(comp[x]).tolist() for x in range(T.n)]
    for a, b in zip(*np.nonzero(L)):
        a, b = int(a), int(b)
        for x in neighbours[a]:
            if not comp[b, x]:
                continue
            # a <= b implies a+x <= b+x and x+a <= x+b
            ok = L[add[a, x], add[b, x]] and L[add[x, a], add[x, b]]
            trans.record(True, bool(ok), (P[a], P[b], P[x]))
    for x in range(T.n):
        nb = neighbours[x]
        for y, z in itertools.product(nb, nb):
            j = J[y, z]
            if j >= 0 and comp[x, j]:
                lhs, rhs = add[x, j], J[add[x, y], add[x, z]]
                lhs2, rhs2 = add[j, x], J[add[y, x], add[z, x]]
                dj.record(True, lhs == rhs and lhs2 == rhs2, (P[x], P[y], P[z]))
            else:
                dj.record(False)
            m = M[y, z]
            if m >= 0 and comp[x, m]:
                rhs = M[add[x, y], add[x, z]]
                rhs2 = M[add[y, x], add[z, x]]
                ok = rhs >= 0 and add[x, m] == rhs and add[m, x] == rhs2
                dm.record(True, bool(ok), (P[x], P[y], P[z]))
            else:
                dm.record(False)
    return [trans, dj, dm]


def check_fj_partial_hom(k: int, cap: int = SUITE_CAP) -> list[LawReport]:
    _check_cap(k, cap)
    T = tables(k)
    P, add, comp = T.patterns, T.padd, T.comparable
    hom = LawReport("fj_preserves_padd", k)
    defined = LawReport("fj_preserves_definedness", k)
    unit = LawReport("fj_fixes_top", k)
    for j, fj in T.f.items():
        unit.record(True, fj[T.top] == T.top, j)
        for x, y in _pairs(T):
            fx, fy = fj[x], fj[y]
            defined.record(True, bool(comp[fx, fy]), (j, P[x], P[y]))
            if comp[fx, fy]:
                hom.record(True, fj[add[x, y]] == add[fx, fy], (j, P[x], P[y]))
            else:
                hom.record(False)
    return [hom, defined, unit]


def _sector_vectors(k: int):
    """Every (sector, operator-vector) realisation, yielded as (sigma, merges, pattern)."""
    vecs = list(itertools.product((False, True), repeat=k - 1))
    for sigma in itertools.permutations(range(1, k + 1)):
        for v in vecs:
            yield sigma, v, from_ops(sigma, v)


def check_drl(k: int, cap: int = SUITE_CAP) -> list[LawReport]:
    """Dually-residuated laws inside each sector, with ``0`` read as the top."""
    _check_cap(k, cap)
    T = tables(k)
    idx, add, J, L, top = T.index, T.padd, T.join, T.leq, T.top
    exists = LawReport("drl_subtraction_exists", k)
    ax3 = LawReport("drl_residuation_inequalities", k)
    ax4 = LawReport(
        "drl_self_difference_at_least_zero",
        k,
        informational=True,
        note="x - x is the all-TENSOR pattern and zero is read as the top; "
        "fails for every x when k > 1",
    )
    residual = LawReport(
        "drl_least_residual_agrees",
        k,
        informational=True,
        note="compares y - x with the least a such that x + a >= y",
    )
    by_sector: dict[Sector, list] = {}
    for sigma, v, p in _sector_vectors(k):
        by_sector.setdefault(sigma, []).append(idx[p])
    P = T.patterns
    for sigma, members in by_sector.items():
        for a, b in itertools.product(members, repeat=2):
            pa, pb = P[a], P[b]
            try:
                d = idx[subtract(pa, pb, sigma)]
            except PatternError:
                exists.record(True, False, (sigma, pa, pb))
                continue
            exists.record(True, True)
            d0 = J[d, top]
            ab = J[a, b]
            lhs1 = add[b, d0]
            lhs2 = add[d0, b]
            ok = lhs1 >= 0 and lhs2 >= 0 and L[lhs1, ab] and L[lhs2, ab]
            ax3.record(True, bool(ok), (sigma, pa, pb))
            # least t with b + t defined and >= a
            row = add[b]
            cands = np.flatnonzero((row >= 0) & L[a, np.where(row >= 0, row, 0)])
            least = cands[L[np.ix_(cands, cands)].all(axis=1)]
            residual.record(True, len(least) == 1 and least[0] == d, (sigma, pa, pb))
        for a in members:
            d = idx[subtract(P[a], P[a], sigma)]
            ax4.record(True, bool(L[top, d]), (sigma, P[a]))
    return [exists, ax3, ax4, residual]


def check_left_regular_band(k: int, cap: int = SUITE_CAP) -> list[LawReport]:
    _check_cap(k, cap)
    T = tables(k)
    P, add = T.patterns, T.padd
    idem = LawReport("padd_idempotent", k)
    deletion = LawReport("deletion_property", k)
    for x in range(T.n):
        idem.record(True, add[x, x] == x, P[x])
    for x, y in _pairs(T):
        xy = add[x, y]
        yx = add[y, x]
        # x+y+x in both bracketings, and y+x+y
        vals = {add[xy, x], add[x, yx], add[yx, y], add[y, xy]}
        deletion.record(True, vals == {xy}, (P[x], P[y]))
    return [idem, deletion]


def induced_order_report(k: int, cap: int = SUITE_CAP) -> LawReport:
    """Compare ``{(x, y): x + y == y}`` with the pattern order and its reverse."""
    _check_cap(k, cap)
    T = tables(k)
    idx = np.arange(T.n)
    induced = T.padd == idx[None, :]
    matches = bool(np.array_equal(induced, T.leq))
    matches_rev = bool(np.array_equal(induced, T.leq.T))
    report = LawReport(
        "induced_order_matches_leq",
        k,
        informational=True,
        note=f"matches order: {matches}; matches reversed order: {matches_rev}",
    )
    xs, ys = np.nonzero(induced != T.leq)
    for x, y in zip(xs.tolist(), ys.tolist()):
        report.record(True, False, (T.patterns[x], T.patterns[y]))
    if not len(xs):
        report.record(True, True)
    report.matches_leq = matches
    report.matches_reverse = matches_rev
    return report


def algebra_suite(k: int) -> list[LawReport]:
    out = []
    out += check_partial_monoid(k)
    out += check_lattice_ordered_partial_monoid(k)
    out += check_fj_partial_hom(k)
    return out

