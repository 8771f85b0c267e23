"""Vectorized versions of the hot scalar routines, for p <= 63.

Each array element is one subset of Z_p packed into a uint64.  These
kernels only compute masks and counts; anything that needs a decision
about theorem hypotheses is handed back to the scalar code in
:mod:`zpsum.bounds`, so the two sweep engines cannot drift apart.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

MAX_KERNEL_P = 63
U64 = np.uint64


def _check_p(p: int) -> None:
    if p > MAX_KERNEL_P:
        raise ValueError(f"numpy kernels support p <= {MAX_KERNEL_P}, got {p}")


def popcount(x: np.ndarray) -> np.ndarray:
    return np.bitwise_count(x).astype(np.int64)


def rot(x: np.ndarray, t, p: int) -> np.ndarray:
    """x -> x + t on every set; ``t`` may be a scalar or an array of shifts."""
    full = U64((1 << p) - 1)
    if np.ndim(t) == 0:
        t = int(t) % p
        if t == 0:
            return x.copy()
        return ((x << U64(t)) | (x >> U64(p - t))) & full
    t = (np.asarray(t, dtype=np.int64) % p).astype(U64)
    return ((x << t) | (x >> (U64(p) - t))) & full


def restricted_double(x: np.ndarray, p: int) -> np.ndarray:
    """Batch 2^A, same incremental scheme as the scalar version."""
    _check_p(p)
    out = np.zeros_like(x)
    seen = np.zeros_like(x)
    zero = U64(0)
    for i in range(p):
        bit = (x >> U64(i)) & U64(1)
        sel = zero - bit  # all ones where i is in the set
        if i:
            out |= rot(seen, i, p) & sel
        seen |= bit << U64(i)
    return out


def h_restricted(x: np.ndarray, h: int, p: int) -> np.ndarray:
    _check_p(p)
    levels = [np.ones_like(x)] + [np.zeros_like(x) for _ in range(h)]
    zero = U64(0)
    for i in range(p):
        sel = zero - ((x >> U64(i)) & U64(1))
        for j in range(h, 0, -1):
            levels[j] |= rot(levels[j - 1], i, p) & sel
    return levels[h]


def is_cyclic_interval(x: np.ndarray, p: int) -> np.ndarray:
    """True where the set is one cyclic run (the full set included)."""
    starts = x & ~rot(x, 1, p)
    return (x != 0) & ((starts & (starts - U64(1))) == 0)


@lru_cache(maxsize=None)
def _dilation_tables(p: int) -> np.ndarray:
    """tables[t, b, v]: image under x -> t*x of byte value v sitting at byte b."""
    vals = np.arange(256, dtype=U64)
    tables = np.zeros((p, 8, 256), dtype=U64)
    for t in range(1, p):
        for b in range(8):
            acc = np.zeros(256, dtype=U64)
            for i in range(8):
                pos = 8 * b + i
                if pos >= p:
                    break
                img = U64(1 << (pos * t % p))
                acc |= np.where((vals >> U64(i)) & U64(1), img, U64(0))
            tables[t, b] = acc
    return tables


def dilate(x: np.ndarray, t: int, p: int) -> np.ndarray:
    _check_p(p)
    t %= p
    if t == 0:
        raise ValueError("dilation by 0 is not a bijection")
    tab = _dilation_tables(p)[t]
    out = np.zeros_like(x)
    for b in range((p + 7) // 8):
        out |= tab[b][((x >> U64(8 * b)) & U64(255)).astype(np.intp)]
    return out


def lowest_bit(x: np.ndarray) -> np.ndarray:
    """Index of the lowest set bit (callers guarantee x != 0)."""
    low = x & (~x + U64(1))
    return popcount(low - U64(1))


def interval_mask(lengths: np.ndarray) -> np.ndarray:
    """Mask of [0, l-1] for each entry of ``lengths`` (l <= 63)."""
    return (U64(1) << lengths.astype(U64)) - U64(1)


def normalize(x: np.ndarray, p: int):
    """Batch normal form with the scalar tie-break (smallest d, then smallest a).

    Returns (N, l, a, d) where N is the mask of d^{-1}(A - a).  Sets with
    fewer than two elements are not meaningful inputs and come back as-is.
    """
    _check_p(p)
    full = U64((1 << p) - 1)
    n = popcount(x)
    best_r = np.zeros(len(x), dtype=np.int64)
    best_a = np.zeros(len(x), dtype=np.int64)
    best_d = np.ones(len(x), dtype=np.int64)
    best_D = x.copy()
    for d in range(1, (p - 1) // 2 + 1):
        inv = pow(d, -1, p)
        D = dilate(x, inv, p)
        # y holds starts u with [u, u+r-1] inside D; stop growing at r = p
        y = D.copy()
        r = 0
        run = np.zeros(len(x), dtype=np.int64)
        starts = np.zeros_like(x)
        while r < p:
            alive = y != 0
            if not alive.any():
                break
            r += 1
            run[alive] = r
            starts[alive] = y[alive]
            y = y & rot(D, -r, p)
        # smallest first term a = u*d among the longest runs
        a = np.zeros(len(x), dtype=np.int64)
        has = starts != 0
        if has.any():
            a[has] = lowest_bit(dilate(starts[has], d, p))
        better = run > best_r
        best_r = np.where(better, run, best_r)
        best_a = np.where(better, a, best_a)
        best_d = np.where(better, d, best_d)
        best_D = np.where(better, D, best_D)
    whole = x == full
    best_r = np.where(whole, p, best_r)
    best_a = np.where(whole, 0, best_a)
    best_d = np.where(whole, 1, best_d)
    inv_d = np.array([0] + [pow(t, -1, p) for t in range(1, p)], dtype=np.int64)
    shift = (best_a * inv_d[best_d]) % p
    N = rot(best_D, -shift, p)
    N = np.where(whole, x, N)
    small = n < 2
    N = np.where(small, x, N)
    return N, best_r, best_a, best_d


def block_union(b: np.ndarray, lengths: np.ndarray, p: int) -> np.ndarray:
    """B + [0, l-1] for each (B, l) pair."""
    out = b.copy()
    top = int(lengths.max()) if len(lengths) else 0
    for i in range(1, top):
        out |= np.where(lengths > i, rot(b, i, p), U64(0))
    return out


def masks_in_range(lo: int, hi: int, sizes: tuple[int, int]) -> np.ndarray:
    x = np.arange(lo, hi, dtype=U64)
    c = popcount(x)
    return x[(c >= sizes[0]) & (c <= sizes[1])]
