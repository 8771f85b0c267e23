import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from zpsum import kernels
from zpsum.structure import normalize
from zpsum.zp_core import ZpSet, as_prime, dilate, h_restricted_mask, restricted_double


def masks(p, n=None, seed=0):
    if n is None:
        return np.arange(1 << p, dtype=np.uint64)
    rng = np.random.default_rng(seed)
    return rng.integers(0, 1 << p, size=n, dtype=np.uint64)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_restricted_double_matches_scalar_exhaustively(p):
    x = masks(p)
    got = kernels.restricted_double(x, p)
    assert [int(v) for v in got] == [restricted_double(int(m), p) for m in x]


@pytest.mark.parametrize("p", [29, 61])
def test_restricted_double_wide_words(p):
    x = masks(p, 500, seed=p)
    got = kernels.restricted_double(x, p)
    assert [int(v) for v in got] == [restricted_double(int(m), p) for m in x]


@pytest.mark.parametrize("h", [2, 3, 4])
def test_h_restricted_matches_scalar(h):
    p = 11
    x = masks(p)
    got = kernels.h_restricted(x, h, p)
    assert [int(v) for v in got] == [h_restricted_mask(int(m), h, p) for m in x]


@pytest.mark.parametrize("p", [7, 13, 31])
def test_dilate_matches_scalar(p):
    x = masks(p, 300, seed=1)
    for t in range(1, p):
        got = kernels.dilate(x, t, p)
        want = [dilate(ZpSet(as_prime(p), int(m)), t).mask for m in x]
        assert [int(v) for v in got] == want
    with pytest.raises(ValueError):
        kernels.dilate(x, p, p)


@pytest.mark.parametrize("p", [7, 11])
def test_normalize_matches_scalar_exhaustively(p):
    x = masks(p)
    x = x[kernels.popcount(x) >= 2]
    N, l, a, d = kernels.normalize(x, p)
    for i, m in enumerate(x.tolist()):
        F = normalize(ZpSet(as_prime(p), m))
        assert (int(N[i]), int(l[i])) == (F.mask, F.l)
        assert (int(a[i]), int(d[i])) == (F.witness.a, F.witness.d)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([13, 17, 23, 37]), st.data())
def test_normalize_matches_scalar_on_random_sets(p, data):
    elems = data.draw(st.lists(st.sets(st.integers(0, p - 1), min_size=2, max_size=p), min_size=1, max_size=8))
    x = np.array([ZpSet.from_iterable(p, e).mask for e in elems], dtype=np.uint64)
    N, l, _, _ = kernels.normalize(x, p)
    for i, e in enumerate(elems):
        F = normalize(ZpSet.from_iterable(p, e))
        assert int(N[i]) == F.mask
        assert int(l[i]) == oracles.longest_ap_length(e, p)


def test_golden_set_normal_form_in_batch():
    A = ZpSet.parse(23, "0-3,12-13")
    N, l, a, d = kernels.normalize(np.array([A.mask], dtype=np.uint64), 23)
    assert int(l[0]) == 5 and int(kernels.popcount(N)[0]) == 6


def test_cyclic_interval_predicate():
    p = 11
    x = masks(p)
    got = kernels.is_cyclic_interval(x, p)
    want = [m != 0 and oracles.is_cyclic_run(set(ZpSet(as_prime(p), m)), p) for m in x.tolist()]
    assert got.tolist() == want


def test_block_union_and_interval_mask():
    p = 13
    b = np.array([0b1 << 5, (1 << 4) | (1 << 12)], dtype=np.uint64)
    lengths = np.array([3, 2])
    got = kernels.block_union(b, lengths, p).tolist()
    assert got == [0b111 << 5, (0b11 << 4) | (1 << 12) | 1]
    assert kernels.interval_mask(np.array([0, 1, 4])).tolist() == [0, 1, 15]


def test_masks_in_range_filters_sizes():
    x = kernels.masks_in_range(0, 1 << 7, (2, 3))
    assert len(x) == 21 + 35
    assert all(2 <= int(m).bit_count() <= 3 for m in x)


def test_rejects_large_modulus():
    with pytest.raises(ValueError):
        kernels.restricted_double(np.zeros(1, dtype=np.uint64), 67)
