"""Brute-force reference implementations on plain Python sets.

Nothing here touches bitmasks or the package's helpers, so agreement with
the library is evidence rather than tautology.
"""

from itertools import combinations


def rsum(A, p):
    return {(a + b) % p for a, b in combinations(sorted(A), 2)}


def hsum(A, h, p):
    return {sum(c) % p for c in combinations(sorted(A), h)}


def plain_sum(A, B, p):
    return {(a + b) % p for a in A for b in B}


def is_cyclic_run(S, p):
    """S nonempty and equal to {s, s+1, ..., s+len-1} mod p for some s."""
    S = set(S)
    if not S:
        return False
    n = len(S)
    return any({(s + i) % p for i in range(n)} == S for s in S)


def longest_ap(A, p):
    """(a, d, r) scanning every pair with d in [1, p-1]; ties to smallest d, then a."""
    A = set(A)
    best = None
    for d in range(1, p):
        for a in sorted(A):
            r = 0
            while r < p and (a + r * d) % p in A:
                r += 1
            key = (-r, d, a)
            if best is None or key < best:
                best = key
    r, d, a = -best[0], best[1], best[2]
    return a, d, r


def longest_ap_length(A, p):
    A = set(A)
    best = 1
    for d in range(1, p):
        for a in A:
            r = 0
            while r < p and (a + r * d) % p in A:
                r += 1
            best = max(best, r)
    return best


def is_ap(A, p):
    return len(A) <= 2 or longest_ap_length(A, p) == len(A)


def dilate(A, t, p):
    return {a * t % p for a in A}


def translate(A, t, p):
    return {(a + t) % p for a in A}


def linear_runs(A):
    runs = []
    for x in sorted(A):
        if runs and x == runs[-1][1] + 1:
            runs[-1][1] = x
        else:
            runs.append([x, x])
    return [tuple(r) for r in runs]


def all_subsets(p, kmin, kmax):
    for k in range(kmin, kmax + 1):
        yield from combinations(range(p), k)
