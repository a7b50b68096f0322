"""Integer-indexed operation tables over all patterns of one k.

The law suites iterate over hundreds of thousands of pairs; they work on
these tables instead of re-deriving each operation.  The meet/join tables
are filled by :func:`patterns.meet` / :func:`patterns.join`; the order
matrix and the independent glb/lub tables come from the kernels.
"""
from __future__ import annotations

import itertools
from functools import cached_property, lru_cache

import numpy as np

from . import _kernels
from .patterns import f_merge, from_ops, join, meet, space


class PatternTables:
    def __init__(self, k: int):
        self.k = k
        self.space = space(k)
        self.patterns = self.space.patterns
        self.index = self.space.index
        self.n = len(self.patterns)

    @property
    def leq(self) -> np.ndarray:
        return self.space.leq

    @cached_property
    def comparable(self) -> np.ndarray:
        return self.leq | self.leq.T

    @cached_property
    def same_sector(self) -> np.ndarray:
        """``[x, y]`` iff x and y lie in a common sector.

        That fails exactly when some elements i, j are ordered one way by
        x's ranks and strictly the other way by y's.
        """
        R = self.space.ranks
        lt = R[:, :, None] < R[:, None, :]
        gt = R[:, :, None] > R[:, None, :]
        out = np.empty((self.n, self.n), dtype=np.bool_)
        for x in range(self.n):
            out[x] = ~(lt[x][None] & gt).any(axis=(1, 2))
        return out

    @cached_property
    def sector_index(self) -> dict[tuple[int, ...], np.ndarray]:
        """``sector_index[sigma][v]`` is the pattern with operator bitmask ``v`` in sigma.

        Bit ``j - 1`` of ``v`` is set when position j is MERGE.
        """
        k = self.k
        out = {}
        for sigma in itertools.permutations(range(1, k + 1)):
            out[sigma] = np.array(
                [
                    self.index[from_ops(sigma, [(v >> i) & 1 == 1 for i in range(k - 1)])]
                    for v in range(1 << (k - 1))
                ],
                dtype=np.int64,
            )
        return out

    @cached_property
    def top(self) -> int:
        return self.index[self.space.top]

    @cached_property
    def padd(self) -> np.ndarray:
        """Partial minimum: ``-1`` for incomparable pairs."""
        idx = np.arange(self.n)
        out = np.full((self.n, self.n), -1, dtype=np.int64)
        L = self.leq
        out = np.where(L, idx[:, None], out)
        out = np.where(L.T & ~L, idx[None, :], out)
        return out

    def _fill(self, op) -> np.ndarray:
        out = np.full((self.n, self.n), -1, dtype=np.int64)
        P, index = self.patterns, self.index
        for i in range(self.n):
            out[i, i] = i
            for j in range(i + 1, self.n):
                z = op(P[i], P[j])
                if z is not None:
                    out[i, j] = out[j, i] = index[z]
        return out

    @cached_property
    def meet(self) -> np.ndarray:
        return self._fill(meet)

    @cached_property
    def join(self) -> np.ndarray:
        return self._fill(join)

    @cached_property
    def glb(self) -> np.ndarray:
        return _kernels.glb_table(self.leq)

    @cached_property
    def lub(self) -> np.ndarray:
        return _kernels.lub_table(self.leq)

    @cached_property
    def f(self) -> dict[int, np.ndarray]:
        """``f[j][i]`` is the index of ``f_merge(patterns[i], j)``."""
        return {
            j: np.array([self.index[f_merge(p, j)] for p in self.patterns], dtype=np.int64)
            for j in range(1, self.k)
        }


@lru_cache(maxsize=None)
def tables(k: int) -> PatternTables:
    return PatternTables(k)
