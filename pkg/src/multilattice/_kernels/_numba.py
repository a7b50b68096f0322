"""Numba-compiled twins of the kernels in ``_numpy``."""
import itertools

import numba
import numpy as np


@numba.njit(cache=True)
def pattern_leq_matrix(ranks):
    n, k = ranks.shape
    out = np.ones((n, n), dtype=np.bool_)
    for p in range(n):
        for q in range(n):
            ok = True
            for a in range(k):
                if not ok:
                    break
                for b in range(k):
                    if a == b:
                        continue
                    xa = ranks[p, a]
                    xb = ranks[p, b]
                    if xa < xb and ranks[q, a] > ranks[q, b]:
                        ok = False
                        break
                    if xa == xb and ranks[q, a] != ranks[q, b]:
                        ok = False
                        break
            out[p, q] = ok
    return out


@numba.njit(cache=True)
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return int((x * np.uint64(0x0101010101010101)) >> np.uint64(56))


@numba.njit(cache=True)
def _order_violations(leq):
    n = leq.shape[0]
    refl = 0
    anti = 0
    for i in range(n):
        if not leq[i, i]:
            refl += 1
        for j in range(i + 1, n):
            if leq[i, j] and leq[j, i]:
                anti += 1
    # rows packed into 64-bit words; a pair (i, j) breaks transitivity when
    # j is in the union of the rows of i's successors but not in row i
    w = (n + 63) // 64
    rows = np.zeros((n, w), dtype=np.uint64)
    for i in range(n):
        for j in range(n):
            if leq[i, j]:
                rows[i, j >> 6] |= np.uint64(1) << np.uint64(j & 63)
    trans = 0
    acc = np.zeros(w, dtype=np.uint64)
    for i in range(n):
        acc[:] = 0
        for z in range(n):
            if leq[i, z]:
                for t in range(w):
                    acc[t] |= rows[z, t]
        for t in range(w):
            trans += _popcount(acc[t] & ~rows[i, t])
    return refl, anti, trans


def order_violations(leq):
    r, a, t = _order_violations(np.ascontiguousarray(leq, dtype=np.bool_))
    return int(r), int(a), int(t)


@numba.njit(cache=True)
def covers_matrix(leq):
    n = leq.shape[0]
    out = np.zeros((n, n), dtype=np.bool_)
    for i in range(n):
        for j in range(n):
            if i == j or not leq[i, j]:
                continue
            cov = True
            for z in range(n):
                if z != i and z != j and leq[i, z] and leq[z, j]:
                    cov = False
                    break
            out[i, j] = cov
    return out


@numba.njit(cache=True)
def glb_table(leq):
    n = leq.shape[0]
    out = np.full((n, n), -1, dtype=np.int64)
    size = np.zeros(n, dtype=np.int64)
    for j in range(n):
        for i in range(n):
            if leq[i, j]:
                size[j] += 1
    for x in range(n):
        for y in range(n):
            g = -1
            for z in range(n):
                if leq[z, x] and leq[z, y] and (g < 0 or size[z] > size[g]):
                    g = z
            if g < 0:
                continue
            ok = True
            for z in range(n):
                if leq[z, x] and leq[z, y] and not leq[z, g]:
                    ok = False
                    break
            if ok:
                out[x, y] = g
    return out


@numba.njit(cache=True)
def _partial_orders(m, rows, cols):
    ncell = rows.shape[0]
    total = 1 << ncell
    buf = np.zeros((total if total < 8192 else 8192, m, m), dtype=np.bool_)
    count = 0
    rel = np.zeros((m, m), dtype=np.bool_)
    for mask in range(total):
        for i in range(m):
            for j in range(m):
                rel[i, j] = i == j
        for c in range(ncell):
            if (mask >> c) & 1:
                rel[rows[c], cols[c]] = True
        ok = True
        for i in range(m):
            for j in range(i + 1, m):
                if rel[i, j] and rel[j, i]:
                    ok = False
        if ok:
            for i in range(m):
                for z in range(m):
                    if not rel[i, z]:
                        continue
                    for j in range(m):
                        if rel[z, j] and not rel[i, j]:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
        if ok:
            if count == buf.shape[0]:
                bigger = np.zeros((2 * count, m, m), dtype=np.bool_)
                bigger[:count] = buf
                buf = bigger
            buf[count] = rel
            count += 1
    return buf[:count].copy()


def enumerate_partial_orders(m):
    if m == 0:
        return np.ones((1, 0, 0), dtype=np.bool_)
    cells = [(i, j) for i in range(m) for j in range(m) if i != j]
    rows = np.array([c[0] for c in cells], dtype=np.int64)
    cols = np.array([c[1] for c in cells], dtype=np.int64)
    return _partial_orders(m, rows, cols)


@numba.njit(cache=True)
def _canonical_codes(mats, perms, rows, cols):
    count = mats.shape[0]
    out = np.empty(count, dtype=np.int64)
    for t in range(count):
        best = np.iinfo(np.int64).max
        for p in range(perms.shape[0]):
            code = 0
            for c in range(rows.shape[0]):
                if mats[t, perms[p, rows[c]], perms[p, cols[c]]]:
                    code |= np.int64(1) << c
            if code < best:
                best = code
        out[t] = best
    return out


def canonical_codes(mats):
    mats = np.ascontiguousarray(mats, dtype=np.bool_)
    m = mats.shape[1]
    cells = [(i, j) for i in range(m) for j in range(m) if i != j]
    rows = np.array([c[0] for c in cells], dtype=np.int64)
    cols = np.array([c[1] for c in cells], dtype=np.int64)
    perms = np.array(list(itertools.permutations(range(m))), dtype=np.int64).reshape(-1, m)
    return _canonical_codes(mats, perms, rows, cols)


@numba.njit(cache=True)
def _monoid_tables(m, frows, fcols):
    nfree = frows.shape[0]
    total = m ** nfree
    keep = np.zeros(total, dtype=np.bool_)
    tab = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        tab[0, i] = i
        tab[i, 0] = i
    for t in range(total):
        rest = t
        for c in range(nfree):
            tab[frows[c], fcols[c]] = rest % m
            rest //= m
        ok = True
        for a in range(m):
            for b in range(m):
                ab = tab[a, b]
                for c in range(m):
                    if tab[ab, c] != tab[a, tab[b, c]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        keep[t] = ok
    count = 0
    for t in range(total):
        if keep[t]:
            count += 1
    out = np.zeros((count, m, m), dtype=np.int64)
    w = 0
    for t in range(total):
        if not keep[t]:
            continue
        for i in range(m):
            out[w, 0, i] = i
            out[w, i, 0] = i
        rest = t
        for c in range(nfree):
            out[w, frows[c], fcols[c]] = rest % m
            rest //= m
        w += 1
    return out


def monoid_tables(m):
    if m == 0:
        return np.zeros((0, 0, 0), dtype=np.int64)
    free = [(i, j) for i in range(1, m) for j in range(1, m)]
    frows = np.array([c[0] for c in free], dtype=np.int64)
    fcols = np.array([c[1] for c in free], dtype=np.int64)
    return _monoid_tables(m, frows, fcols)
