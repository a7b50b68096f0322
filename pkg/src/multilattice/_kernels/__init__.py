"""Hot kernels with a numba path and a pure-numpy fallback.

The numba path is used when numba imports cleanly and the environment
variable ``MULTILATTICE_NUMBA`` is not set to ``0``.  Both backends are
importable directly as ``numpy_backend`` / ``numba_backend`` for
comparison.
"""
import os

import numpy as np

from . import _numpy as numpy_backend

try:
    from . import _numba as numba_backend
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba_backend = None

USE_NUMBA = numba_backend is not None and os.environ.get("MULTILATTICE_NUMBA", "1") != "0"

_impl = numba_backend if USE_NUMBA else numpy_backend
BACKEND = "numba" if USE_NUMBA else "numpy"


def pattern_leq_matrix(ranks):
    return _impl.pattern_leq_matrix(np.ascontiguousarray(ranks, dtype=np.int64))


def order_violations(leq):
    return _impl.order_violations(np.ascontiguousarray(leq, dtype=np.bool_))


def covers_matrix(leq):
    return _impl.covers_matrix(np.ascontiguousarray(leq, dtype=np.bool_))


def glb_table(leq):
    return _impl.glb_table(np.ascontiguousarray(leq, dtype=np.bool_))


def lub_table(leq):
    return glb_table(np.ascontiguousarray(np.asarray(leq, dtype=np.bool_).T))


def enumerate_partial_orders(m):
    return _impl.enumerate_partial_orders(m)


def canonical_codes(mats):
    return _impl.canonical_codes(mats)


def monoid_tables(m):
    return _impl.monoid_tables(m)


__all__ = [
    "BACKEND",
    "USE_NUMBA",
    "canonical_codes",
    "covers_matrix",
    "enumerate_partial_orders",
    "glb_table",
    "lub_table",
    "monoid_tables",
    "numba_backend",
    "numpy_backend",
    "order_violations",
    "pattern_leq_matrix",
]
