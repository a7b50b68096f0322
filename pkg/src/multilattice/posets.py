"""Explicit finite posets, lattices and monoids, and maps defined by exception pairs.

An exception map sends ``a_i`` to ``b_i`` and fixes every other element.
The predicates here (monotone, interior, closure, meet/join preservation,
monoid homomorphism) are brute force over all elements and pairs; the
scanners run them over every small poset and monoid to test the
implications between them.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .reports import PropReport


class PosetError(ValueError):
    pass


class FinitePoset:
    """Poset on ``range(n)`` given by a boolean order matrix ``leq[i, j] = i <= j``."""

    def __init__(self, leq, labels: Sequence[str] | None = None, validate: bool = True):
        leq = np.array(leq, dtype=np.bool_)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise PosetError(f"order matrix must be square, got shape {leq.shape}")
        if validate:
            refl, anti, trans = _kernels.order_violations(leq)
            if refl or anti or trans:
                raise PosetError(
                    f"not a partial order: {refl} reflexivity, {anti} antisymmetry, "
                    f"{trans} transitivity violations"
                )
        leq.flags.writeable = False
        self.leq = leq
        self.n = leq.shape[0]
        self.labels = list(labels) if labels is not None else [str(i) for i in range(self.n)]
        if len(self.labels) != self.n:
            raise PosetError("label count does not match the order matrix")

    def __repr__(self):
        return f"FinitePoset(n={self.n}, covers={self.hasse_edges()})"

    @classmethod
    def from_relations(cls, labels: Sequence[str], pairs: Iterable[tuple[int, int]]) -> "FinitePoset":
        """Build from generating pairs ``(i, j)`` meaning ``i <= j``; closes transitively."""
        n = len(labels)
        rel = np.eye(n, dtype=np.bool_)
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise PosetError(f"pair {(i, j)} out of range for {n} elements")
            rel[i, j] = True
        for z in range(n):
            rel |= rel[:, z][:, None] & rel[z, :][None, :]
        return cls(rel, labels)

    @classmethod
    def from_dict(cls, data: dict) -> "FinitePoset":
        try:
            labels = [str(e) for e in data["elements"]]
            pairs = [(int(i), int(j)) for i, j in data["leq"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise PosetError(f"malformed poset document: {exc!r}") from exc
        return cls.from_relations(labels, pairs)

    @classmethod
    def from_json(cls, text: str) -> "FinitePoset":
        return cls.from_dict(json.loads(text))

    def to_dict(self) -> dict:
        return {
            "elements": list(self.labels),
            "leq": [[int(i), int(j)] for i, j in self.hasse_edges()],
        }

    @classmethod
    def chain(cls, n: int) -> "FinitePoset":
        return cls(np.triu(np.ones((n, n), dtype=np.bool_)))

    @classmethod
    def antichain(cls, n: int) -> "FinitePoset":
        return cls(np.eye(n, dtype=np.bool_))

    @cached_property
    def lt(self) -> np.ndarray:
        lt = self.leq.copy()
        np.fill_diagonal(lt, False)
        return lt

    def bottom(self) -> int | None:
        hits = np.flatnonzero(self.leq.all(axis=1))
        return int(hits[0]) if len(hits) else None

    def top(self) -> int | None:
        hits = np.flatnonzero(self.leq.all(axis=0))
        return int(hits[0]) if len(hits) else None

    def is_bounded(self) -> bool:
        return self.bottom() is not None and self.top() is not None

    def minimal_elements(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(~self.lt.any(axis=0))]

    def maximal_elements(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(~self.lt.any(axis=1))]

    def dual(self) -> "FinitePoset":
        return self._dual

    @cached_property
    def _dual(self) -> "FinitePoset":
        d = FinitePoset(self.leq.T, self.labels, validate=False)
        d.__dict__["_dual"] = self
        return d

    def product(self, other: "FinitePoset") -> "FinitePoset":
        """Componentwise order on pairs, element ``(i, j)`` at index ``i * other.n + j``."""
        leq = np.einsum("ac,bd->abcd", self.leq, other.leq).reshape(
            self.n * other.n, self.n * other.n
        )
        labels = [f"({a},{b})" for a in self.labels for b in other.labels]
        return FinitePoset(leq, labels, validate=False)

    def power(self, n: int) -> "FinitePoset":
        out = self
        for _ in range(n - 1):
            out = out.product(self)
        return out

    def lower_cone(self, A: Iterable[int]) -> frozenset[int]:
        A = list(A)
        if not A:
            return frozenset(range(self.n))
        mask = self.leq[:, A].all(axis=1)
        return frozenset(int(i) for i in np.flatnonzero(mask))

    def upper_cone(self, A: Iterable[int]) -> frozenset[int]:
        A = list(A)
        if not A:
            return frozenset(range(self.n))
        mask = self.leq[A, :].all(axis=0)
        return frozenset(int(i) for i in np.flatnonzero(mask))

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        return _kernels.covers_matrix(self.leq)

    def covers(self, x: int, y: int) -> bool:
        """True iff ``y`` covers ``x``: x < y with nothing strictly between."""
        return bool(self.cover_matrix[x, y])

    def hasse_edges(self) -> list[tuple[int, int]]:
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(self.cover_matrix))]

    def is_sole_lower_cover(self, b: int, a: int) -> bool:
        """``b < a`` and every element strictly below ``a`` lies below ``b``."""
        if not self.lt[b, a]:
            return False
        below_a = self.lt[:, a]
        return bool(np.all(~below_a | self.leq[:, b]))

    @cached_property
    def meet_table(self) -> np.ndarray:
        return _kernels.glb_table(self.leq)

    @cached_property
    def join_table(self) -> np.ndarray:
        return _kernels.lub_table(self.leq)

    def is_lattice(self) -> bool:
        return self.n > 0 and bool((self.meet_table >= 0).all() and (self.join_table >= 0).all())


class FiniteLattice:
    """A finite poset with its glb/lub tables; ``-1`` marks an undefined entry."""

    def __init__(self, poset: FinitePoset, meet=None, join=None):
        self.poset = poset
        self.meet = np.asarray(poset.meet_table if meet is None else meet, dtype=np.int64)
        self.join = np.asarray(poset.join_table if join is None else join, dtype=np.int64)

    @classmethod
    def from_poset(cls, poset: FinitePoset) -> "FiniteLattice":
        return cls(poset)

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def leq(self) -> np.ndarray:
        return self.poset.leq

    @property
    def is_total(self) -> bool:
        return bool((self.meet >= 0).all() and (self.join >= 0).all())

    def product(self, other: "FiniteLattice") -> "FiniteLattice":
        """Coordinatewise meet and join on the product poset."""
        P = self.poset.product(other.poset)
        m = other.n

        def combine(t1, t2):
            a = np.repeat(np.repeat(t1, m, axis=0), m, axis=1)
            b = np.tile(t2, (self.n, self.n))
            return np.where((a < 0) | (b < 0), -1, a * m + b)

        return FiniteLattice(P, combine(self.meet, other.meet), combine(self.join, other.join))


@dataclass(frozen=True)
class ExceptionMap:
    """``x -> b_i`` if ``x == a_i`` for some i, else ``x``."""

    carrier: object
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        n = self.carrier.n
        seen = set()
        for a, b in pairs:
            if a == b:
                raise PosetError(f"exception pair ({a}, {b}) is a fixed point")
            if a in seen:
                raise PosetError(f"element {a} listed twice")
            if not (0 <= a < n and 0 <= b < n):
                raise PosetError(f"pair ({a}, {b}) out of range for {n} elements")
            seen.add(a)

    @cached_property
    def table(self) -> np.ndarray:
        t = np.arange(self.carrier.n)
        for a, b in self.pairs:
            t[a] = b
        t.flags.writeable = False
        return t

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    @property
    def a_set(self) -> frozenset[int]:
        return frozenset(a for a, _ in self.pairs)

    @property
    def b_set(self) -> frozenset[int]:
        return frozenset(b for _, b in self.pairs)

    def on(self, carrier) -> "ExceptionMap":
        return ExceptionMap(carrier, self.pairs)


def apply_map(f: ExceptionMap, x: int) -> int:
    return f(x)


def exception_map_from_function(carrier, values: Sequence[int]) -> ExceptionMap:
    """Exception map of an arbitrary self-map given as a value table."""
    return ExceptionMap(carrier, tuple((i, int(v)) for i, v in enumerate(values) if int(v) != i))


class FiniteMonoid:
    """Total associative operation on ``range(n)`` with a two-sided identity."""

    def __init__(self, table, identity: int = 0, validate: bool = True):
        table = np.array(table, dtype=np.int64)
        n = table.shape[0]
        if table.shape != (n, n):
            raise PosetError("operation table must be square")
        if validate:
            if table.min(initial=0) < 0 or table.max(initial=0) >= max(n, 1):
                raise PosetError("operation table has values outside the carrier")
            if not (np.array_equal(table[identity], np.arange(n))
                    and np.array_equal(table[:, identity], np.arange(n))):
                raise PosetError(f"element {identity} is not a two-sided identity")
            for c in range(n):
                # (x*y)*c against x*(y*c) for all x, y
                if not np.array_equal(table[table, c], table[:, table[:, c]]):
                    raise PosetError("operation is not associative")
        table.flags.writeable = False
        self.table = table
        self.identity = identity
        self.n = n

    def op(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def absorbing_elements(self) -> list[int]:
        n = self.n
        return [z for z in range(n) if (self.table[z] == z).all() and (self.table[:, z] == z).all()]

    @classmethod
    def min_on_chain(cls, n: int) -> "FiniteMonoid":
        """``min`` on the chain ``0 < 1 < ... < n-1``; the identity is ``n-1``."""
        idx = np.arange(n)
        return cls(np.minimum(idx[:, None], idx[None, :]), identity=n - 1)


# Predicates on maps


def _leq_of(f: ExceptionMap) -> np.ndarray:
    c = f.carrier
    return c.leq if hasattr(c, "leq") else c.poset.leq


def is_monotone(f: ExceptionMap) -> bool:
    L, t = _leq_of(f), f.table
    return bool(np.all(~L | L[np.ix_(t, t)]))


def is_strictly_monotone(f: ExceptionMap) -> bool:
    L, t = _leq_of(f), f.table
    lt = L & ~np.eye(len(t), dtype=np.bool_)
    return bool(np.all(~lt | lt[np.ix_(t, t)]))


def cha_strict_condition(f: ExceptionMap) -> bool:
    """Cone criterion for strict monotonicity, applied to every exception pair.

    Each ``(a, b)`` must be incomparable, everything strictly below ``a``
    strictly below ``b`` and everything strictly above ``a`` strictly above
    ``b``.  Exact for a single pair.
    """
    L = _leq_of(f)
    lt = L & ~np.eye(L.shape[0], dtype=np.bool_)
    for a, b in f.pairs:
        if L[a, b] or L[b, a]:
            return False
        if np.any(lt[:, a] & ~lt[:, b]) or np.any(lt[a, :] & ~lt[b, :]):
            return False
    return True


def _decreasing(f: ExceptionMap) -> bool:
    L, t = _leq_of(f), f.table
    return bool(L[t, np.arange(len(t))].all())


def _increasing(f: ExceptionMap) -> bool:
    L, t = _leq_of(f), f.table
    return bool(L[np.arange(len(t)), t].all())


def _idempotent(f: ExceptionMap) -> bool:
    t = f.table
    return bool(np.array_equal(t[t], t))


def is_interior(f: ExceptionMap) -> bool:
    """Monotone, contracting (f(x) <= x) and idempotent."""
    return is_monotone(f) and _decreasing(f) and _idempotent(f)


def is_closure(f: ExceptionMap) -> bool:
    """Monotone, increasing (f(x) >= x) and idempotent."""
    return is_monotone(f) and _increasing(f) and _idempotent(f)


def is_interior_adjoint(f: ExceptionMap) -> bool:
    """``f(x) <= y`` iff ``f(x) <= f(y)`` for all x, y."""
    L, t = _leq_of(f), f.table
    return bool(np.array_equal(L[t, :], L[np.ix_(t, t)]))


def is_closure_adjoint(f: ExceptionMap) -> bool:
    """``x <= f(y)`` iff ``f(x) <= f(y)`` for all x, y."""
    L, t = _leq_of(f), f.table
    return bool(np.array_equal(L[:, t], L[np.ix_(t, t)]))


def _strictly_not_absorbing(A: frozenset[int], table: np.ndarray) -> bool:
    n = table.shape[0]
    inA = np.zeros(n, dtype=np.bool_)
    inA[list(A)] = True
    defined = table >= 0
    lhs = ~inA[:, None] & ~inA[None, :]
    rhs = ~inA[np.where(defined, table, 0)]
    return bool(np.all(~defined | (lhs == rhs)))


def is_strictly_not_absorbing(A: Iterable[int], L: FiniteLattice, which: str = "meet") -> bool:
    """``x, y not in A`` iff ``x op y not in A``, for op the lattice meet or join."""
    table = {"meet": L.meet, "join": L.join}[which.lower()]
    return _strictly_not_absorbing(frozenset(A), table)


def preserves(f: ExceptionMap, table: np.ndarray) -> bool:
    """``f(x op y) == f(x) op f(y)`` wherever both sides are defined."""
    t = f.table
    lhs_def = table >= 0
    lhs = t[np.where(lhs_def, table, 0)]
    rhs = table[np.ix_(t, t)]
    both = lhs_def & (rhs >= 0)
    return bool(np.all(~both | (lhs == rhs)))


def preserves_meets(f: ExceptionMap, L: FiniteLattice) -> bool:
    return preserves(f, L.meet)


def preserves_joins(f: ExceptionMap, L: FiniteLattice) -> bool:
    return preserves(f, L.join)


def is_monoid_homomorphism(f: ExceptionMap, M: FiniteMonoid) -> bool:
    t = f.table
    if t[M.identity] != M.identity:
        return False
    return bool(np.array_equal(t[M.table], M.table[np.ix_(t, t)]))


def absorbing_hom_hypothesis(M: FiniteMonoid, f: ExceptionMap) -> bool:
    absorbing = set(M.absorbing_elements())
    return (
        f.b_set <= absorbing
        and not (f.a_set & f.b_set)
        and _strictly_not_absorbing(f.a_set, M.table)
    )


def check_absorbing_hom_prop(M: FiniteMonoid, f: ExceptionMap) -> dict:
    hyp = absorbing_hom_hypothesis(M, f)
    concl = is_monoid_homomorphism(f, M)
    return {"hypothesis": hyp, "conclusion": concl, "violated": hyp and not concl}


# Per-instance proposition evaluation


def evaluate_props(P: FinitePoset, f: ExceptionMap, L: FiniteLattice | None = None) -> dict:
    """Hypothesis and conclusion of each order-theoretic proposition on one instance.

    Returns ``{name: (hypothesis, conclusion)}``.  Lattice propositions are
    included only when ``L`` is given.
    """
    if f.carrier is not P:
        f = f.on(P)
    A, B = f.a_set, f.b_set
    disjoint = not (A & B)
    bot, top = P.bottom(), P.top()
    mono = is_monotone(f)
    interior = is_interior(f)
    closure = is_closure(f)
    out = {
        "interior_from_bottom": (bot is not None and B == {bot} and mono, interior),
        "interior_from_sole_cover": (
            disjoint and all(P.is_sole_lower_cover(b, a) for a, b in f.pairs),
            interior,
        ),
        "interior_from_cover": (
            disjoint and all(P.covers(b, a) for a, b in f.pairs),
            interior,
        ),
        "closure_from_top": (top is not None and B == {top} and mono, closure),
        "closure_from_sole_cover": (
            disjoint and all(P.dual().is_sole_lower_cover(b, a) for a, b in f.pairs),
            closure,
        ),
        "closure_from_cover": (
            disjoint and all(P.covers(a, b) for a, b in f.pairs),
            closure,
        ),
        "interior_adjoint_agreement": (True, interior == is_interior_adjoint(f)),
        "closure_adjoint_agreement": (True, closure == is_closure_adjoint(f)),
        "duality": (True, interior == is_closure(f.on(P.dual()))),
        "cha_strict_monotone": (True, is_strictly_monotone(f) == cha_strict_condition(f)),
        "interior_without_bottom": (
            interior and not (bot is not None and B == {bot}),
            True,
        ),
    }
    if L is not None:
        out["meet_preservation"] = (
            disjoint and B == {bot} and _strictly_not_absorbing(A, L.meet),
            preserves(f, L.meet),
        )
        out["join_preservation"] = (
            disjoint and B == {top} and _strictly_not_absorbing(A, L.join),
            preserves(f, L.join),
        )
    return out


def check_order_props(P: FinitePoset, f: ExceptionMap, L: FiniteLattice | None = None) -> dict:
    """Per-proposition ``{hypothesis, conclusion, violated}`` for one instance."""
    return {
        name: {"hypothesis": h, "conclusion": c, "violated": bool(h and not c)}
        for name, (h, c) in evaluate_props(P, f, L).items()
    }


# Instance enumeration


@lru_cache(maxsize=None)
def all_posets(m: int) -> tuple[FinitePoset, ...]:
    """One representative of every isomorphism class of posets on ``m`` elements."""
    mats = _kernels.enumerate_partial_orders(m)
    if m == 0:
        return (FinitePoset(np.zeros((0, 0), dtype=np.bool_)),)
    codes = _kernels.canonical_codes(mats)
    reps = {}
    for code, mat in zip(codes.tolist(), mats):
        reps.setdefault(code, mat)
    return tuple(FinitePoset(reps[c], validate=False) for c in sorted(reps))


@lru_cache(maxsize=None)
def all_monoids(m: int) -> tuple[FiniteMonoid, ...]:
    """Every monoid table on ``range(m)`` with identity 0 (labelled, not up to iso)."""
    return tuple(FiniteMonoid(t, 0, validate=False) for t in _kernels.monoid_tables(m))


def exception_maps(carrier, max_pairs: int = 2):
    """All exception maps with 1..max_pairs pairs; the a_i are listed ascending."""
    n = carrier.n
    for r in range(1, max_pairs + 1):
        for As in itertools.combinations(range(n), r):
            choices = [[b for b in range(n) if b != a] for a in As]
            for Bs in itertools.product(*choices):
                yield ExceptionMap(carrier, tuple(zip(As, Bs)))


PROP_NOTES = {
    "interior_from_cover": "covering read as plain Hasse covering; informational",
    "closure_from_cover": "covering read as plain Hasse covering; informational",
    "cha_strict_monotone": "cone criterion applied per pair; exact only for one pair",
    "interior_without_bottom": "counts interior maps whose targets are not all the bottom",
}

VACUITY_NOTE = (
    "hypothesis is unsatisfiable: a strictly-not-absorbing set must contain the "
    "absorbing element, which disjointness forbids"
)

INFORMATIONAL = frozenset(PROP_NOTES)


def scan_order_props(max_size: int = 5, max_pairs: int = 2) -> list[PropReport]:
    """Run every proposition over all posets up to ``max_size`` and all maps."""
    reports: dict[str, PropReport] = {}

    def rep(name):
        if name not in reports:
            reports[name] = PropReport(
                name, informational=name in INFORMATIONAL, note=PROP_NOTES.get(name, "")
            )
        return reports[name]

    for m in range(1, max_size + 1):
        for pidx, P in enumerate(all_posets(m)):
            L = FiniteLattice(P) if P.is_lattice() else None
            for f in exception_maps(P, max_pairs):
                for name, (h, c) in evaluate_props(P, f, L).items():
                    rep(name).record(h, c, {"size": m, "poset": P.hasse_edges(), "pairs": f.pairs})
    for name in ("meet_preservation", "join_preservation"):
        if name in reports and reports[name].hypothesis_held == 0:
            reports[name].note = VACUITY_NOTE
    return list(reports.values())


def scan_monoid_homomorphisms(max_size: int = 4, max_pairs: int = 2) -> PropReport:
    report = PropReport("absorbing_homomorphism")
    for m in range(1, max_size + 1):
        for M in all_monoids(m):
            for f in exception_maps(M, max_pairs):
                h = absorbing_hom_hypothesis(M, f)
                c = is_monoid_homomorphism(f, M)
                report.record(h, c, {"table": M.table.tolist(), "pairs": f.pairs})
    if report.hypothesis_held == 0:
        report.note = VACUITY_NOTE
    return report
