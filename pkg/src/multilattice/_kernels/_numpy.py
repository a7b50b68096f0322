"""Pure-numpy implementations of the hot kernels.

Every function here has a twin of the same name and signature in
``_numba``; the two are required to return identical arrays.
"""
import itertools

import numpy as np

CHUNK = 1 << 15


def pattern_leq_matrix(ranks):
    """Order matrix of ordered set partitions given as block-rank vectors.

    ``ranks[p, i]`` is the index of the block of pattern ``p`` holding
    element ``i``.  ``out[p, q]`` is True iff ``q`` is obtained from ``p``
    by merging adjacent blocks, i.e. the rank of ``q`` is a monotone
    function of the rank of ``p``.
    """
    ranks = np.asarray(ranks)
    n, k = ranks.shape
    out = np.ones((n, n), dtype=np.bool_)
    for a in range(k):
        for b in range(k):
            if a == b:
                continue
            lt = ranks[:, a] < ranks[:, b]
            eq = ranks[:, a] == ranks[:, b]
            gt = ranks[:, a] > ranks[:, b]
            out &= ~(lt[:, None] & gt[None, :])
            out &= ~(eq[:, None] & ~eq[None, :])
    return out


def order_violations(leq):
    """Counts of (reflexivity, antisymmetry, transitivity) violations.

    Reflexivity counts diagonal misses, antisymmetry counts unordered pairs
    related both ways, transitivity counts pairs (i, j) with a path i<=z<=j
    but not i<=j.
    """
    leq = np.asarray(leq, dtype=np.bool_)
    n = leq.shape[0]
    refl = int(n - np.count_nonzero(np.diag(leq)))
    both = leq & leq.T
    np.fill_diagonal(both, False)
    anti = int(np.count_nonzero(both) // 2)
    li = leq.astype(np.float32)
    comp = (li @ li) > 0
    trans = int(np.count_nonzero(comp & ~leq))
    return refl, anti, trans


def covers_matrix(leq):
    """``out[i, j]`` iff ``j`` covers ``i``."""
    lt = np.array(leq, dtype=np.bool_)
    np.fill_diagonal(lt, False)
    f = lt.astype(np.float32)
    between = (f @ f) > 0
    return lt & ~between


def glb_table(leq):
    """Greatest-lower-bound table, ``-1`` where no glb exists."""
    leq = np.asarray(leq, dtype=np.bool_)
    n = leq.shape[0]
    out = np.full((n, n), -1, dtype=np.int64)
    if n == 0:
        return out
    size = leq.sum(axis=0).astype(np.int64)
    cols = np.arange(n)
    for x in range(n):
        lower = leq[:, x][:, None] & leq  # lower[z, y]: z <= x and z <= y
        score = np.where(lower, size[:, None], -1)
        g = np.argmax(score, axis=0)
        has = lower.any(axis=0)
        below_g = leq[:, g]  # below_g[z, y]: z <= g[y]
        ok = has & ~(lower & ~below_g).any(axis=0)
        out[x, cols[ok]] = g[ok]
    return out


def _offdiag(m):
    return [(i, j) for i in range(m) for j in range(m) if i != j]


def enumerate_partial_orders(m):
    """All partial orders on ``range(m)`` as a ``(count, m, m)`` bool array.

    Brute force over every relation on the off-diagonal cells.
    """
    if m == 0:
        return np.ones((1, 0, 0), dtype=np.bool_)
    cells = _offdiag(m)
    total = 1 << len(cells)
    rows = np.array([c[0] for c in cells], dtype=np.int64)
    cols = np.array([c[1] for c in cells], dtype=np.int64)
    found = []
    for start in range(0, total, CHUNK):
        masks = np.arange(start, min(total, start + CHUNK), dtype=np.int64)
        bits = ((masks[:, None] >> np.arange(len(cells))) & 1).astype(np.bool_)
        rel = np.zeros((len(masks), m, m), dtype=np.bool_)
        rel[:, rows, cols] = bits
        rel[:, np.arange(m), np.arange(m)] = True
        both = rel & rel.transpose(0, 2, 1)
        both[:, np.arange(m), np.arange(m)] = False
        anti = ~both.any(axis=(1, 2))
        comp = (rel[:, :, :, None] & rel[:, None, :, :]).any(axis=2)
        trans = ~(comp & ~rel).any(axis=(1, 2))
        found.append(rel[anti & trans])
    return np.concatenate(found, axis=0)


def canonical_codes(mats):
    """Isomorphism-invariant integer code: min bit-packing over relabelings."""
    mats = np.asarray(mats, dtype=np.bool_)
    count, m, _ = mats.shape
    cells = _offdiag(m)
    weights = np.array([1 << b for b in range(len(cells))], dtype=np.int64)
    rows = np.array([c[0] for c in cells], dtype=np.int64)
    cols = np.array([c[1] for c in cells], dtype=np.int64)
    best = np.full(count, np.iinfo(np.int64).max, dtype=np.int64)
    for perm in itertools.permutations(range(m)):
        p = np.array(perm, dtype=np.int64)
        vals = mats[:, p[rows], p[cols]]
        best = np.minimum(best, (vals * weights).sum(axis=1))
    return best


def monoid_tables(m):
    """All monoid tables on ``range(m)`` whose identity is element 0."""
    if m == 0:
        return np.zeros((0, 0, 0), dtype=np.int64)
    free = [(i, j) for i in range(1, m) for j in range(1, m)]
    total = m ** len(free)
    idx = np.arange(total, dtype=np.int64)
    tables = np.zeros((total, m, m), dtype=np.int64)
    tables[:, 0, :] = np.arange(m)
    tables[:, :, 0] = np.arange(m)
    rest = idx.copy()
    for i, j in free:
        tables[:, i, j] = rest % m
        rest //= m
    ok = np.ones(total, dtype=np.bool_)
    for a in range(m):
        for b in range(m):
            ab = tables[:, a, b]
            for c in range(m):
                lhs = tables[idx, ab, c]
                rhs = tables[idx, a, tables[:, b, c]]
                ok &= lhs == rhs
    return tables[ok]
