"""Residues modulo a prime and bitmask subsets of Z_p.

A subset of Z_p is stored as a Python ``int`` whose bit ``i`` is set when
residue ``i`` belongs to the set.  Python ints are arbitrary precision, so
the same representation covers one machine word (p <= 64) and the
multi-word case without a separate code path.

All values are immutable; every operation returns a new object.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import EmptyResultError, ModulusMismatch, NotPrimeError, ParseError

DEFAULT_MAX_P = 61


def max_prime() -> int:
    """Prime ceiling, overridable through the ``ZPSUM_MAX_P`` environment variable."""
    raw = os.environ.get("ZPSUM_MAX_P")
    if raw is None:
        return DEFAULT_MAX_P
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"ZPSUM_MAX_P must be an integer, got {raw!r}") from None


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Prime:
    value: int

    def __post_init__(self):
        v = self.value
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"prime must be an int, got {type(v).__name__}")
        if v < 3 or not is_prime(v):
            raise NotPrimeError(f"{v} is not an odd prime")
        ceiling = max_prime()
        if v > ceiling:
            raise NotPrimeError(
                f"p={v} exceeds the configured ceiling {ceiling} (set ZPSUM_MAX_P to raise it)"
            )

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __str__(self):
        return str(self.value)


def as_prime(p) -> Prime:
    return p if isinstance(p, Prime) else Prime(p)


# -- raw mask helpers (used on hot paths by other modules) -------------------


def full_mask(p: int) -> int:
    return (1 << p) - 1


def rotate(mask: int, t: int, p: int) -> int:
    """Cyclic shift: the image of the set under x -> x + t."""
    t %= p
    if t == 0:
        return mask
    return ((mask << t) | (mask >> (p - t))) & ((1 << p) - 1)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def restricted_double(mask: int, p: int) -> int:
    """Mask of {a + b : a != b} for the set encoded by ``mask``.

    Adding residues in increasing order, each new element x contributes
    x + (elements already seen), which covers every unordered pair once.
    """
    out = 0
    seen = 0
    m = mask
    while m:
        low = m & -m
        x = low.bit_length() - 1
        if seen:
            out |= rotate(seen, x, p)
        seen |= low
        m ^= low
    return out


def runs_linear(mask: int) -> list[tuple[int, int]]:
    """Maximal runs of consecutive set bits as (lo, hi), read without wraparound."""
    runs = []
    pos = 0
    while mask:
        tz = (mask & -mask).bit_length() - 1
        mask >>= tz
        pos += tz
        ones = (~mask & (mask + 1)).bit_length() - 1
        runs.append((pos, pos + ones - 1))
        mask >>= ones
        pos += ones
    return runs


def cyclic_interval(mask: int, p: int) -> Optional[tuple[int, int]]:
    """(start, length) if ``mask`` is one cyclic run, otherwise None."""
    if mask == 0:
        return None
    full = (1 << p) - 1
    if mask == full:
        return (0, p)
    starts = mask & ~rotate(mask, 1, p)
    if starts & (starts - 1):
        return None
    return (starts.bit_length() - 1, mask.bit_count())


# -- literal text format ----------------------------------------------------

_TOKEN = re.compile(r"^\s*(\d+)\s*(?:-\s*(\d+)\s*)?$")


def parse_literal(text: str, p: int) -> int:
    """Parse ``"0-3,12-13"`` into a mask; duplicates are idempotent."""
    mask = 0
    text = text.strip()
    if text in ("", "{}"):
        return 0
    for token in text.split(","):
        m = _TOKEN.match(token)
        if m is None:
            raise ParseError(f"bad set token {token.strip()!r}", token.strip())
        lo = int(m.group(1))
        hi = int(m.group(2)) if m.group(2) is not None else lo
        if lo > hi:
            raise ParseError(f"descending range {token.strip()!r}", token.strip())
        if hi >= p:
            raise ParseError(f"residue {hi} in {token.strip()!r} is not below p={p}", token.strip())
        mask |= ((1 << (hi - lo + 1)) - 1) << lo
    return mask


def format_literal(mask: int) -> str:
    parts = []
    for lo, hi in runs_linear(mask):
        parts.append(str(lo) if lo == hi else f"{lo}-{hi}")
    return ",".join(parts)


# -- public types -------------------------------------------------------------


def width(a1: int, a2: int, p: Optional[int] = None) -> int:
    """Gap between two elements under the linear order on [0, p-1].

    ``|a1 - a2| - 1`` for distinct arguments, 0 when equal.  When ``p`` is
    given both arguments are first reduced mod p, so ``width(0, p, p) == 0``.
    """
    if p is not None:
        a1 %= p
        a2 %= p
    if a1 == a2:
        return 0
    return abs(a1 - a2) - 1


@dataclass(frozen=True, order=True)
class Interval:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"interval [{self.lo}, {self.hi}] is reversed")

    def __len__(self):
        return self.hi - self.lo + 1

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))

    def __contains__(self, x):
        return self.lo <= x <= self.hi

    def to_zpset(self, p) -> "ZpSet":
        return ZpSet.interval(p, self.lo, self.hi)

    def __str__(self):
        return f"[{self.lo},{self.hi}]"


@dataclass(frozen=True)
class ZpSet:
    """A subset of Z_p for a prime p, backed by a bitmask."""

    modulus: Prime
    mask: int

    def __post_init__(self):
        if not isinstance(self.modulus, Prime):
            object.__setattr__(self, "modulus", Prime(self.modulus))
        if self.mask < 0 or self.mask >> self.modulus.value:
            raise ValueError(f"mask has bits outside [0, {self.modulus.value - 1}]")

    # constructors

    @classmethod
    def from_iterable(cls, p, elems: Iterable[int]) -> "ZpSet":
        p = as_prime(p)
        mask = 0
        for x in elems:
            mask |= 1 << (x % p.value)
        return cls(p, mask)

    @classmethod
    def parse(cls, p, text: str) -> "ZpSet":
        p = as_prime(p)
        return cls(p, parse_literal(text, p.value))

    @classmethod
    def interval(cls, p, lo: int, hi: int) -> "ZpSet":
        """Linear interval [lo, hi]; empty when hi < lo."""
        p = as_prime(p)
        if hi < lo:
            return cls(p, 0)
        if lo < 0 or hi >= p.value:
            raise ValueError(f"[{lo}, {hi}] is not inside [0, {p.value - 1}]")
        return cls(p, ((1 << (hi - lo + 1)) - 1) << lo)

    @classmethod
    def empty(cls, p) -> "ZpSet":
        return cls(as_prime(p), 0)

    @classmethod
    def full(cls, p) -> "ZpSet":
        p = as_prime(p)
        return cls(p, full_mask(p.value))

    # container protocol

    @property
    def p(self) -> int:
        return self.modulus.value

    def __len__(self):
        return self.mask.bit_count()

    def __iter__(self):
        return iter_bits(self.mask)

    def __contains__(self, x):
        return isinstance(x, int) and 0 <= x < self.p and bool(self.mask >> x & 1)

    def __bool__(self):
        return self.mask != 0

    def elements(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def literal(self) -> str:
        return format_literal(self.mask)

    def __str__(self):
        return "{" + self.literal() + "}"

    def __repr__(self):
        return f"ZpSet(p={self.p}, {self.literal()!r})"

    def min(self) -> Optional[int]:
        if not self.mask:
            return None
        return (self.mask & -self.mask).bit_length() - 1

    def max(self) -> Optional[int]:
        if not self.mask:
            return None
        return self.mask.bit_length() - 1

    def issubset(self, other: "ZpSet") -> bool:
        _same(self, other)
        return self.mask & ~other.mask == 0

    def __or__(self, other):
        _same(self, other)
        return ZpSet(self.modulus, self.mask | other.mask)

    def __and__(self, other):
        _same(self, other)
        return ZpSet(self.modulus, self.mask & other.mask)

    def __sub__(self, other):
        _same(self, other)
        return ZpSet(self.modulus, self.mask & ~other.mask)


def _same(A: ZpSet, B: ZpSet) -> None:
    if A.modulus != B.modulus:
        raise ModulusMismatch(f"moduli differ: {A.p} vs {B.p}")


# -- operations -----------------------------------------------------------------


def sumset(A: ZpSet, B: ZpSet) -> ZpSet:
    """A + B, computed as the union of the shifts A + b."""
    _same(A, B)
    p = A.p
    out = 0
    for b in iter_bits(B.mask):
        out |= rotate(A.mask, b, p)
    return ZpSet(A.modulus, out)


def restricted_sumset(A: ZpSet, B: ZpSet) -> ZpSet:
    """{a + b : a in A, b in B, a != b}."""
    _same(A, B)
    p = A.p
    if A.mask == B.mask:
        return ZpSet(A.modulus, restricted_double(A.mask, p))
    out = 0
    for b in iter_bits(B.mask):
        out |= rotate(A.mask & ~(1 << b), b, p)
    return ZpSet(A.modulus, out)


def h_restricted_mask(mask: int, h: int, p: int) -> int:
    # level[j] = sums of j distinct elements among those processed so far
    level = [1] + [0] * h
    for x in iter_bits(mask):
        for j in range(h, 0, -1):
            if level[j - 1]:
                level[j] |= rotate(level[j - 1], x, p)
    return level[h]


def h_restricted_sumset(A: ZpSet, h: int) -> ZpSet:
    """Sums of h pairwise-distinct elements of A."""
    if h < 2:
        raise ValueError(f"h must be at least 2, got {h}")
    if h > len(A):
        raise EmptyResultError(f"h={h} exceeds |A|={len(A)}: no {h}-subsets to sum")
    return ZpSet(A.modulus, h_restricted_mask(A.mask, h, A.p))


def dilate(A: ZpSet, t: int) -> ZpSet:
    p = A.p
    t %= p
    if t == 0:
        raise ValueError("dilation by 0 is not a bijection")
    out = 0
    for a in iter_bits(A.mask):
        out |= 1 << (a * t % p)
    return ZpSet(A.modulus, out)


def translate(A: ZpSet, t: int) -> ZpSet:
    return ZpSet(A.modulus, rotate(A.mask, t, A.p))


def negate(A: ZpSet) -> ZpSet:
    p = A.p
    out = 0
    for a in iter_bits(A.mask):
        out |= 1 << (-a % p)
    return ZpSet(A.modulus, out)


def complement(A: ZpSet) -> ZpSet:
    return ZpSet(A.modulus, full_mask(A.p) & ~A.mask)


def remove(A: ZpSet, t: int) -> ZpSet:
    return ZpSet(A.modulus, A.mask & ~(1 << (t % A.p)))
