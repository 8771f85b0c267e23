"""Arithmetic progressions, normal forms and run decompositions.

A set A with |A| >= 2 always contains an arithmetic progression of length
at least two.  Picking a longest one, {a + i*d}, and mapping it onto
[0, l-1] with x -> d^{-1} (x - a) gives the normal form [0, l-1] u B.
Affine maps preserve |2^A|, so every cardinality question about A can be
asked of its normal form instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import PreconditionError
from .zp_core import (
    Interval,
    Prime,
    ZpSet,
    as_prime,
    cyclic_interval,
    dilate,
    full_mask,
    iter_bits,
    runs_linear,
    translate,
)


@dataclass(frozen=True)
class APWitness:
    """The progression {a + i*d mod p : 0 <= i < r}."""

    a: int
    d: int
    r: int

    def members(self, p: int) -> list[int]:
        return [(self.a + i * self.d) % p for i in range(self.r)]

    def to_dict(self):
        return {"a": self.a, "d": self.d, "r": self.r}


def longest_ap(A: ZpSet) -> APWitness:
    """A longest arithmetic progression inside A.

    Ties go to the smallest difference d in [1, p-1], then the smallest
    first term a.  Only d <= (p-1)/2 needs scanning: a progression with
    difference d' > p/2 is the same set read backwards with difference
    p - d', which is smaller and therefore wins the tie anyway.

    Exhaustive over (a, d) with membership walks from each run start, so
    O(p^2 |A|) in the worst case; this is the hot spot of the scalar path.
    """
    n = len(A)
    if n < 2:
        raise PreconditionError(f"longest_ap needs |A| >= 2, got {n}")
    p = A.p
    mask = A.mask
    if mask == full_mask(p):
        return APWitness(0, 1, p)
    elems = A.elements()
    best_r, best_a, best_d = 0, 0, 0
    for d in range(1, (p - 1) // 2 + 1):
        for a in elems:
            if mask >> ((a - d) % p) & 1:
                continue  # not the first term of its run
            r = 1
            x = (a + d) % p
            while mask >> x & 1:
                r += 1
                x = (x + d) % p
            # strict: earlier (smaller) d and a win ties
            if r > best_r:
                best_r, best_a, best_d = r, a, d
        if best_r == n:
            break
    return APWitness(best_a, best_d, best_r)


def is_arithmetic_progression(A: ZpSet) -> bool:
    if len(A) <= 2:
        return len(A) > 0
    return longest_ap(A).r == len(A)


@dataclass(frozen=True)
class NormalForm:
    """A set written as [0, l-1] u B with B sorted and disjoint from [0, l-1].

    ``witness`` is the progression of ``origin`` that was mapped onto
    [0, l-1].  Forms built by :meth:`from_parts` (reduction steps, hand-made
    examples) carry the identity witness and are only checked structurally.
    """

    modulus: Prime
    l: int
    B: tuple[int, ...]
    witness: APWitness
    origin: ZpSet
    # True when l is known to be the longest AP length (built by normalize)
    canonical: bool = False

    def __post_init__(self):
        p = self.modulus.value
        if self.l < 1 or self.l > p:
            raise ValueError(f"interval length {self.l} out of range for p={p}")
        B = tuple(self.B)
        object.__setattr__(self, "B", B)
        if any(not (self.l <= b < p) for b in B):
            raise ValueError(f"B={B} must lie in [{self.l}, {p - 1}]")
        if any(x >= y for x, y in zip(B, B[1:])):
            raise ValueError(f"B={B} must be strictly increasing")

    @classmethod
    def from_parts(cls, p, l: int, B) -> "NormalForm":
        p = as_prime(p)
        B = tuple(sorted(B))
        mask = ((1 << l) - 1) | sum(1 << b for b in B)
        origin = ZpSet(p, mask)
        return cls(p, l, B, APWitness(0, 1, l), origin)

    @property
    def p(self) -> int:
        return self.modulus.value

    @property
    def k(self) -> int:
        return len(self.B)

    @property
    def m(self) -> int:
        return self.l + len(self.B)

    def __len__(self):
        return self.m

    @property
    def mask(self) -> int:
        return ((1 << self.l) - 1) | self.b_mask

    @property
    def b_mask(self) -> int:
        out = 0
        for b in self.B:
            out |= 1 << b
        return out

    def as_set(self) -> ZpSet:
        return ZpSet(self.modulus, self.mask)

    def interval_set(self) -> ZpSet:
        return ZpSet(self.modulus, (1 << self.l) - 1)

    def b_set(self) -> ZpSet:
        return ZpSet(self.modulus, self.b_mask)

    def is_maximal_interval(self) -> bool:
        """[0, l-1] cannot be extended by a neighbour from B on either side."""
        if not self.B:
            return True
        return self.B[0] != self.l and self.B[-1] != self.p - 1

    def to_dict(self):
        return {"p": self.p, "l": self.l, "B": list(self.B), "witness": self.witness.to_dict()}

    def __str__(self):
        tail = "" if not self.B else " u {" + ",".join(map(str, self.B)) + "}"
        return f"[0,{self.l - 1}]{tail} (mod {self.p})"


def normalize(A: ZpSet) -> NormalForm:
    witness = longest_ap(A)
    inv = pow(witness.d, -1, A.p)
    image = dilate(translate(A, -witness.a), inv)
    l = witness.r
    B = tuple(x for x in image if x >= l)
    return NormalForm(A.modulus, l, B, witness, A, canonical=True)


@dataclass(frozen=True)
class IntervalDecomposition:
    runs: tuple[Interval, ...]

    @property
    def H(self) -> int:
        return len(self.runs) - 1

    def __len__(self):
        return len(self.runs)

    def to_dict(self):
        return {"runs": [[r.lo, r.hi] for r in self.runs], "H": self.H}


def decompose(A: ZpSet) -> IntervalDecomposition:
    """Maximal linear runs of A; residues 0 and p-1 are never merged."""
    if not A:
        raise PreconditionError("cannot decompose the empty set")
    return IntervalDecomposition(tuple(Interval(lo, hi) for lo, hi in runs_linear(A.mask)))


def run_count(elems) -> int:
    """Number of maximal runs of consecutive integers in a sorted sequence."""
    if not elems:
        return 0
    return 1 + sum(1 for x, y in zip(elems, elems[1:]) if y != x + 1)


def is_interval_cyclic(A: ZpSet) -> Optional[tuple[int, int]]:
    """(start, length) when A is a single run read cyclically, else None."""
    return cyclic_interval(A.mask, A.p)


def ap_members_mask(w: APWitness, p: int) -> int:
    out = 0
    for x in w.members(p):
        out |= 1 << x
    return out


__all__ = [
    "APWitness",
    "IntervalDecomposition",
    "NormalForm",
    "ap_members_mask",
    "decompose",
    "is_arithmetic_progression",
    "is_interval_cyclic",
    "iter_bits",
    "longest_ap",
    "normalize",
    "run_count",
]
