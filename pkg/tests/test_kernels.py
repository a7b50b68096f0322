import numpy as np
import pytest

import oracles
from multilattice import _kernels
from multilattice._kernels import numba_backend, numpy_backend
from multilattice.patterns import space

pytestmark = pytest.mark.skipif(numba_backend is None, reason="numba not installed")


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_leq_matrix_backends_agree(k):
    ranks = space(k).ranks
    a = numpy_backend.pattern_leq_matrix(ranks)
    b = numba_backend.pattern_leq_matrix(ranks)
    assert a.dtype == b.dtype == np.bool_
    assert np.array_equal(a, b)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_order_tools_backends_agree(k):
    leq = space(k).leq
    assert numpy_backend.order_violations(leq) == numba_backend.order_violations(leq) == (0, 0, 0)
    assert np.array_equal(numpy_backend.covers_matrix(leq), numba_backend.covers_matrix(leq))
    assert np.array_equal(numpy_backend.glb_table(leq), numba_backend.glb_table(leq))


def test_order_violations_detects_problems():
    bad = np.array([[1, 1, 0], [1, 1, 1], [0, 0, 0]], dtype=np.bool_)
    for be in (numpy_backend, numba_backend):
        refl, anti, trans = be.order_violations(bad)
        assert refl == 1
        assert anti == 1
        assert trans >= 1


def test_glb_table_on_diamond():
    # 0 < 1, 2 < 3
    leq = np.eye(4, dtype=np.bool_)
    for i, j in [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]:
        leq[i, j] = True
    g = _kernels.glb_table(leq)
    l = _kernels.lub_table(leq)
    assert g[1, 2] == 0 and l[1, 2] == 3
    anti = np.eye(2, dtype=np.bool_)
    assert _kernels.glb_table(anti)[0, 1] == -1


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_partial_orders_against_oracle(m):
    ref = oracles.labelled_posets(m)
    for be in (numpy_backend, numba_backend):
        mats = be.enumerate_partial_orders(m)
        assert len(mats) == len(ref)
        assert {tuple(map(tuple, x.tolist())) for x in mats} == set(ref)
        codes = be.canonical_codes(mats)
        assert len(set(codes.tolist())) == oracles.iso_classes(ref)


def test_partial_orders_five_elements():
    a = numpy_backend.enumerate_partial_orders(5)
    b = numba_backend.enumerate_partial_orders(5)
    assert len(a) == len(b) == 4231
    ca, cb = numpy_backend.canonical_codes(a), numba_backend.canonical_codes(b)
    assert len(set(ca.tolist())) == len(set(cb.tolist())) == 63


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_monoid_tables_against_oracle(m):
    expected = oracles.monoid_count(m)
    for be in (numpy_backend, numba_backend):
        tabs = be.monoid_tables(m)
        assert len(tabs) == expected
        for t in tabs:
            assert np.array_equal(t[0], np.arange(m)) and np.array_equal(t[:, 0], np.arange(m))


def test_backend_flag():
    assert _kernels.BACKEND in ("numba", "numpy")
