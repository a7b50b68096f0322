"""Concatenation patterns over a fixed list of k layers.

A pattern ``G_{s1} op G_{s2} op ... G_{sk}`` with ``op`` in {TENSOR, MERGE}
is stored canonically as an ordered set partition of ``1..k``: MERGE-joined
runs become one (sorted) block, TENSOR separates blocks and block order
follows the sequence.  The partial order is adjacent-block coarsening, with
the single-block pattern as top.

A *sector* is a permutation ``sigma`` of ``1..k``; a pattern lies in the
sector when reading ``sigma`` left to right visits its blocks as
consecutive runs in block order.  Inside one sector a pattern is exactly
its operator vector, and the positionwise meet/join/complement formulas
live there.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import _kernels

ENUMERATION_CAP = 7
IDEAL_CAP = 4


class PatternError(ValueError):
    pass


class CapacityError(PatternError):
    pass


class Op(enum.Enum):
    TENSOR = "*"
    MERGE = "."

    def __str__(self):
        return self.value


Sector = tuple[int, ...]


@dataclass(frozen=True)
class Pattern:
    """Canonical element of the concatenation poset (an ordered set partition)."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if any(len(b) == 0 for b in blocks):
            raise PatternError(f"empty block in {blocks}")
        flat = sorted(i for b in blocks for i in b)
        if flat != list(range(1, len(flat) + 1)):
            raise PatternError(f"blocks {blocks} do not partition 1..{len(flat)}")

    @property
    def k(self) -> int:
        return sum(len(b) for b in self.blocks)

    @cached_property
    def ranks(self) -> tuple[int, ...]:
        """``ranks[i - 1]`` is the block index holding layer ``i``."""
        out = [0] * self.k
        for r, b in enumerate(self.blocks):
            for i in b:
                out[i - 1] = r
        return tuple(out)

    @cached_property
    def merges(self) -> tuple[bool, ...]:
        """Operator vector: True where the operator is MERGE."""
        out = []
        for b in self.blocks:
            out.extend([True] * (len(b) - 1))
            out.append(False)
        return tuple(out[:-1])

    @property
    def ops(self) -> tuple[Op, ...]:
        return tuple(Op.MERGE if m else Op.TENSOR for m in self.merges)

    @cached_property
    def prefixes(self) -> tuple[frozenset[int], ...]:
        """Proper non-empty prefix unions ``B1``, ``B1|B2``, ..."""
        out, acc = [], frozenset()
        for b in self.blocks[:-1]:
            acc = acc | frozenset(b)
            out.append(acc)
        return tuple(out)

    def __str__(self):
        return format_pattern(self)

    def to_list(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


@dataclass(frozen=True)
class OpSequence:
    """A concrete representative: a layer ordering plus k-1 operators."""

    order: tuple[int, ...]
    ops: tuple[Op, ...]

    def __post_init__(self):
        k = len(self.order)
        if sorted(self.order) != list(range(1, k + 1)):
            raise PatternError(f"order {self.order} is not a permutation of 1..{k}")
        if len(self.ops) != max(k - 1, 0):
            raise PatternError(f"expected {k - 1} operators, got {len(self.ops)}")

    def __str__(self):
        parts = [str(self.order[0])]
        for op, i in zip(self.ops, self.order[1:]):
            parts.append(f"{op}{i}")
        return "".join(parts)


def format_pattern(p: Pattern) -> str:
    return "*".join(".".join(str(i) for i in b) for b in p.blocks)


def _check_k(k: int, cap: int | None = None):
    if k < 1:
        raise PatternError(f"k must be positive, got {k}")
    if cap is not None and k > cap:
        raise CapacityError(f"k={k} exceeds the cap of {cap}")


def _same_k(x: Pattern, y: Pattern):
    if x.k != y.k:
        raise PatternError(f"patterns over different k: {x.k} vs {y.k}")


def canonicalize(seq: OpSequence) -> Pattern:
    blocks = [[seq.order[0]]]
    for op, i in zip(seq.ops, seq.order[1:]):
        if op is Op.MERGE:
            blocks[-1].append(i)
        else:
            blocks.append([i])
    return Pattern(tuple(tuple(b) for b in blocks))


def representatives(p: Pattern) -> list[OpSequence]:
    """All operator sequences whose canonical form is ``p``."""
    ops = p.ops
    return [OpSequence(sigma, ops) for sigma in sectors_of(p)]


def from_ops(sigma: Sector, merges: Sequence[bool]) -> Pattern:
    """Pattern read off a sector and a MERGE-flag vector."""
    if len(merges) != len(sigma) - 1:
        raise PatternError("operator vector length must be k-1")
    blocks = [[sigma[0]]]
    for m, i in zip(merges, sigma[1:]):
        if m:
            blocks[-1].append(i)
        else:
            blocks.append([i])
    return Pattern(tuple(tuple(b) for b in blocks))


def _from_prefix_chain(chain: Iterable[frozenset[int]], k: int) -> Pattern:
    chain = sorted(chain, key=len)
    blocks, prev = [], frozenset()
    for s in chain + [frozenset(range(1, k + 1))]:
        blocks.append(tuple(sorted(s - prev)))
        prev = s
    return Pattern(tuple(blocks))


def enumerate_patterns(k: int, cap: int = ENUMERATION_CAP) -> list[Pattern]:
    """Every ordered set partition of ``1..k``, sorted by level then blocks."""
    _check_k(k, cap)

    def rec(rest: tuple[int, ...]):
        if not rest:
            yield ()
            return
        for size in range(1, len(rest) + 1):
            for first in itertools.combinations(rest, size):
                remaining = tuple(i for i in rest if i not in first)
                for tail in rec(remaining):
                    yield (first,) + tail

    out = [Pattern(b) for b in rec(tuple(range(1, k + 1)))]
    out.sort(key=lambda p: (level(p), p.blocks))
    return out


def level(x: Pattern) -> int:
    return x.k - len(x.blocks)


def leq(x: Pattern, y: Pattern) -> bool:
    """True iff ``y`` is obtained from ``x`` by merging adjacent blocks."""
    _same_k(x, y)
    xb = iter(x.blocks)
    for target in y.blocks:
        need = set(target)
        while need:
            b = next(xb, None)
            if b is None or not need.issuperset(b):
                return False
            need.difference_update(b)
    return True


def compare(x: Pattern, y: Pattern) -> str:
    if x == y:
        return "EQUAL"
    if leq(x, y):
        return "LESS"
    if leq(y, x):
        return "GREATER"
    return "INCOMPARABLE"


def f_merge(x: Pattern, j: int) -> Pattern:
    """Turn the operator at position ``j`` into MERGE; identity if it already is."""
    if not 1 <= j <= x.k - 1:
        raise PatternError(f"position {j} out of range 1..{x.k - 1}")
    cum = 0
    for b in range(len(x.blocks) - 1):
        cum += len(x.blocks[b])
        if cum == j:
            blocks = x.blocks[:b] + (x.blocks[b] + x.blocks[b + 1],) + x.blocks[b + 2:]
            return Pattern(blocks)
        if cum > j:
            break
    return x


def f_compose(x: Pattern, js: Iterable[int]) -> Pattern:
    """Apply ``f_merge`` for each position in ``js``, left to right."""
    for j in js:
        x = f_merge(x, j)
    return x


def top_pattern(k: int) -> Pattern:
    _check_k(k)
    return Pattern((tuple(range(1, k + 1)),))


def minimal_pattern(sigma: Sector) -> Pattern:
    return Pattern(tuple((i,) for i in sigma))


def minimal_patterns(k: int) -> list[Pattern]:
    _check_k(k)
    return [minimal_pattern(s) for s in itertools.permutations(range(1, k + 1))]


def in_sector(x: Pattern, sigma: Sector) -> bool:
    if sorted(sigma) != list(range(1, x.k + 1)):
        raise PatternError(f"{sigma} is not a permutation of 1..{x.k}")
    r = x.ranks
    return all(r[a - 1] <= r[b - 1] for a, b in zip(sigma, sigma[1:]))


def sectors_of(x: Pattern) -> list[Sector]:
    perms = [itertools.permutations(b) for b in x.blocks]
    return [tuple(i for part in combo for i in part) for combo in itertools.product(*perms)]


def _pair_groups(x: Pattern, y: Pattern) -> list[tuple[int, ...]] | None:
    """Elements grouped by (x-rank, y-rank), in chain order, or None if the
    rank pairs are not totally ordered componentwise."""
    rx, ry = x.ranks, y.ranks
    keys = sorted({(rx[i], ry[i]) for i in range(x.k)})
    for (a0, b0), (a1, b1) in zip(keys, keys[1:]):
        if b1 < b0:
            return None
    return [tuple(i + 1 for i in range(x.k) if (rx[i], ry[i]) == key) for key in keys]


def common_sectors(x: Pattern, y: Pattern) -> list[Sector]:
    """Every permutation under which both patterns read as consecutive runs."""
    _same_k(x, y)
    groups = _pair_groups(x, y)
    if groups is None:
        return []
    perms = [itertools.permutations(g) for g in groups]
    return sorted(tuple(i for part in combo for i in part) for combo in itertools.product(*perms))


def common_sector(x: Pattern, y: Pattern) -> Sector | None:
    """The lexicographically least common sector, if any."""
    _same_k(x, y)
    groups = _pair_groups(x, y)
    if groups is None:
        return None
    return tuple(i for g in groups for i in g)


def sector_meet(x: Pattern, y: Pattern, sigma: Sector) -> Pattern:
    _require_sector(sigma, x, y)
    return from_ops(sigma, [a and b for a, b in zip(x.merges, y.merges)])


def sector_join(x: Pattern, y: Pattern, sigma: Sector) -> Pattern:
    _require_sector(sigma, x, y)
    return from_ops(sigma, [a or b for a, b in zip(x.merges, y.merges)])


def _require_sector(sigma: Sector, *xs: Pattern):
    for x in xs:
        if not in_sector(x, sigma):
            raise PatternError(f"{x} does not lie in sector {sigma}")


def meet(x: Pattern, y: Pattern) -> Pattern | None:
    """Greatest lower bound, or None when the two share no lower bound.

    Same-sector pairs use the positionwise formula (TENSOR wins).  Other
    pairs fall back to the prefix-chain description of lower bounds: the
    glb exists iff the union of both prefix chains is itself a chain.
    """
    sigma = common_sector(x, y)
    if sigma is not None:
        return sector_meet(x, y, sigma)
    chain = sorted(set(x.prefixes) | set(y.prefixes), key=len)
    if any(not a < b for a, b in zip(chain, chain[1:])):
        return None
    return _from_prefix_chain(chain, x.k)


def join(x: Pattern, y: Pattern) -> Pattern | None:
    """Least upper bound.

    Same-sector pairs use the positionwise formula (MERGE wins); other pairs
    take the common prefix unions of both patterns, which always exist, so
    the result is never None in practice.
    """
    sigma = common_sector(x, y)
    if sigma is not None:
        return sector_join(x, y, sigma)
    return _from_prefix_chain(set(x.prefixes) & set(y.prefixes), x.k)


def complement(x: Pattern, sigma: Sector) -> Pattern:
    """Flip every operator of ``x`` as read in ``sigma``."""
    _require_sector(sigma, x)
    return from_ops(sigma, [not m for m in x.merges])


class PatternSpace:
    """The explicit finite poset of all patterns for one k, with its order matrix."""

    def __init__(self, k: int, cap: int = ENUMERATION_CAP):
        self.k = k
        self.patterns = enumerate_patterns(k, cap)
        self.index = {p: i for i, p in enumerate(self.patterns)}
        self.ranks = np.array([p.ranks for p in self.patterns], dtype=np.int64)

    def __len__(self):
        return len(self.patterns)

    @cached_property
    def leq(self) -> np.ndarray:
        return _kernels.pattern_leq_matrix(self.ranks)

    @cached_property
    def top(self) -> Pattern:
        return top_pattern(self.k)

    def down_set(self, x: Pattern) -> frozenset[Pattern]:
        col = self.leq[:, self.index[x]]
        return frozenset(self.patterns[i] for i in np.flatnonzero(col))

    def up_set(self, x: Pattern) -> frozenset[Pattern]:
        row = self.leq[self.index[x]]
        return frozenset(self.patterns[i] for i in np.flatnonzero(row))


@lru_cache(maxsize=None)
def space(k: int) -> PatternSpace:
    return PatternSpace(k)


# Ideals


def _as_set(S: Iterable[Pattern]) -> tuple[frozenset[Pattern], int]:
    S = frozenset(S)
    ks = {p.k for p in S}
    if len(ks) > 1:
        raise PatternError("ideal candidate mixes different k")
    return S, (ks.pop() if ks else 0)


def joinclosed_witnesses(S: Iterable[Pattern]) -> list[tuple[Pattern, Pattern, Pattern]]:
    """Pairs of ``S`` whose join falls outside ``S``, with that join."""
    S, _ = _as_set(S)
    out = []
    for x, y in itertools.combinations(sorted(S, key=lambda p: p.blocks), 2):
        z = join(x, y)
        if z is not None and z not in S:
            out.append((x, y, z))
    return out


def downdirected_witnesses(S: Iterable[Pattern]) -> dict[str, list]:
    """Failures of the down-closed + directed definition.

    ``below``: (a, x) with x <= a, a in S, x not in S.
    ``unbounded``: (a, b, bounds) with no upper bound of a, b inside S;
    ``bounds`` lists every common upper bound in the whole poset.
    """
    S, k = _as_set(S)
    below, unbounded = [], []
    if not S:
        return {"below": below, "unbounded": unbounded}
    sp = space(k)
    ordered = sorted(S, key=lambda p: (level(p), p.blocks))
    for a in ordered:
        for x in sorted(sp.down_set(a) - S, key=lambda p: (level(p), p.blocks)):
            below.append((a, x))
    for a, b in itertools.combinations(ordered, 2):
        ups = sp.up_set(a) & sp.up_set(b)
        if not ups & S:
            unbounded.append((a, b, sorted(ups, key=lambda p: (level(p), p.blocks))))
    return {"below": below, "unbounded": unbounded}


def is_ideal_joinclosed(S: Iterable[Pattern]) -> bool:
    return not joinclosed_witnesses(S)


def is_ideal_downdirected(S: Iterable[Pattern]) -> bool:
    S = frozenset(S)
    if not S:
        return False
    w = downdirected_witnesses(S)
    return not w["below"] and not w["unbounded"]


IDEAL_PREDICATES = {"v1": is_ideal_joinclosed, "v2": is_ideal_downdirected}


def enumerate_ideals(k: int, which: str, cap: int = IDEAL_CAP) -> list[frozenset[Pattern]]:
    """Non-empty down-sets of the k-pattern poset passing the chosen predicate.

    A finite non-empty down-set that is directed (or closed under joins)
    has a greatest element, so candidates are the principal down-sets; the
    predicate is still applied to each.
    """
    _check_k(k, cap)
    pred = IDEAL_PREDICATES[which]
    sp = space(k)
    return [d for d in (sp.down_set(p) for p in sp.patterns) if pred(d)]
