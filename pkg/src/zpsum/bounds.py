"""Hypothesis classification and lower-bound formulas for |2^A|.

Everything here works on a :class:`NormalForm` ``[0, l-1] u B`` with
``B = (a_1 < ... < a_k)`` and ``m = l + k``.  Three sub-sumsets drive the
case analysis:

* ``S = 2^[0,l-1] u ([0,l-1] + B)``   (T2)
* ``2^A`` itself                       (T3)
* ``J = 2^[0,l-1] u 2^B``              (T4)

Interval forms are read off the computed masks, never matched
symbolically, and thresholds such as ``p - k + 1`` enter ``width`` as plain
integers (reducing them mod p would turn ``p`` into 0 for k = 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .errors import HypothesisError, PreconditionError
from .structure import NormalForm, is_arithmetic_progression, longest_ap, run_count
from .zp_core import ZpSet, cyclic_interval, restricted_double, rotate, width


class Theorem(str, Enum):
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"


class Case(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    SINGLE = "single"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class SumsetCase:
    theorem: Theorem
    case: Case
    s: Optional[int] = None
    a_min: Optional[int] = None
    a_max: Optional[int] = None
    reason: str = ""
    # T3 case C only: the B1/B2 split of B
    B1: Optional[tuple[int, ...]] = None
    B2: Optional[tuple[int, ...]] = None

    @property
    def applicable(self) -> bool:
        return self.case is not Case.NOT_APPLICABLE


@dataclass(frozen=True)
class BoundReport:
    input: NormalForm
    case: SumsetCase
    bound: Optional[int]
    actual: int
    slack: Optional[int]
    hypotheses_met: bool
    reason: str = ""
    # the competing reading of an ambiguous threshold, when there is one
    alt_bound: Optional[int] = None

    @property
    def theorem(self) -> Theorem:
        return self.case.theorem

    @property
    def violated(self) -> bool:
        return self.hypotheses_met and self.slack is not None and self.slack < 0

    def to_dict(self):
        N = self.input
        c = self.case
        return {
            "p": N.p,
            "A": N.origin.literal(),
            "l": N.l,
            "B": list(N.B),
            "theorem": c.theorem.value,
            "case": c.case.value,
            "s": c.s,
            "a_min": c.a_min,
            "a_max": c.a_max,
            "bound": self.bound,
            "actual": self.actual,
            "slack": self.slack,
            "hypotheses_met": self.hypotheses_met,
            "reason": self.reason,
            "alt_bound": self.alt_bound,
        }


@dataclass(frozen=True)
class BPartition3:
    B1: tuple[int, ...]
    B2: tuple[int, ...]
    B3: tuple[int, ...]
    a_n: int
    a_N: int
    H: int = field(default=0)

    def to_dict(self):
        return {
            "B1": list(self.B1),
            "B2": list(self.B2),
            "B3": list(self.B3),
            "a_n": self.a_n,
            "a_N": self.a_N,
            "H": self.H,
        }


# -- shared helpers -------------------------------------------------------------


def _min_at_least(values, t):
    return min((a for a in values if a >= t), default=None)


def _max_at_most(values, t):
    return max((a for a in values if a <= t), default=None)


def block_mask(N: NormalForm, a: int) -> int:
    """Mask of a + [0, l-1]."""
    return rotate((1 << N.l) - 1, a, N.p)


def s_mask(N: NormalForm) -> int:
    """2^[0,l-1] u ([0,l-1] + B)."""
    out = restricted_double((1 << N.l) - 1, N.p)
    for a in N.B:
        out |= block_mask(N, a)
    return out


def j_mask(N: NormalForm) -> int:
    """2^[0,l-1] u 2^B."""
    return restricted_double((1 << N.l) - 1, N.p) | restricted_double(N.b_mask, N.p)


def _require_shape(N: NormalForm) -> None:
    if not N.B:
        raise PreconditionError("B is empty: the set is an arithmetic progression")
    if N.m < 4:
        raise PreconditionError(f"needs |A| >= 4, got {N.m}")
    if not N.is_maximal_interval():
        raise PreconditionError(f"{N} is not a normal form: B touches [0, l-1]")


def _not_applicable(theorem, reason):
    return SumsetCase(theorem, Case.NOT_APPLICABLE, reason=reason)


def _longest_ap_is_interval(N: NormalForm) -> bool:
    if N.canonical:
        return True
    return longest_ap(N.as_set()).r == N.l


# -- T2 -----------------------------------------------------------------------


def classify_t2(N: NormalForm) -> SumsetCase:
    """Locate S among the forms [1, a_k+l-1], [a_1, p-1] u [0, 2l-3], [a_{s+1}, p-1] u [0, a_s+l-1]."""
    _require_shape(N)
    p, l, B, k = N.p, N.l, N.B, N.k
    S = s_mask(N)
    ci = cyclic_interval(S, p)
    if ci is None:
        return _not_applicable(Theorem.T2, "S = 2^[0,l-1] u ([0,l-1]+B) is not an interval")
    if ci[1] == p:
        return _not_applicable(Theorem.T2, "S is all of Z_p")
    start = ci[0]
    if not S & 1:
        return SumsetCase(Theorem.T2, Case.A, a_min=_min_at_least(B, l + k))
    if start not in B:
        return _not_applicable(Theorem.T2, f"S wraps but starts at {start}, which is not in B")
    j = B.index(start)
    if j == 0:
        return SumsetCase(Theorem.T2, Case.B, a_max=_max_at_most(B, p - k + 1))
    s = j
    return SumsetCase(
        Theorem.T2,
        Case.C,
        s=s,
        a_min=_min_at_least(B, l + s),
        a_max=_max_at_most(B, p - k + s - 1),
    )


def _common_failures(N: NormalForm, c: SumsetCase, actual: int) -> list[str]:
    failures = []
    if not c.applicable:
        failures.append(c.reason or "not applicable")
    if actual >= N.p - 1:
        failures.append(f"|2^A| = {actual} is not below p-1 = {N.p - 1}")
    if N.B and not _longest_ap_is_interval(N):
        failures.append("[0, l-1] is not a longest arithmetic progression")
    return failures


def bound_t2(N: NormalForm, c: SumsetCase) -> BoundReport:
    if c.theorem is not Theorem.T2:
        raise ValueError(f"expected a T2 case, got {c.theorem.value}")
    p, l, k, m = N.p, N.l, N.k, N.m
    actual = restricted_double(N.mask, p).bit_count()
    failures = _common_failures(N, c, actual)
    bound = alt = None
    if c.case is Case.A:
        if c.a_min is None:
            failures.append("a_min undefined: no a in B with a >= l+k")
        else:
            bound = 2 * m - 3 + width(l + k - 2, c.a_min)
    elif c.case is Case.B:
        if c.a_max is None:
            failures.append("a_max undefined: no a in B with a <= p-k+1")
        else:
            bound = 2 * m - 3 + width(c.a_max, p - k + 1)
        # threshold the reflection argument needs
        refl_a_max = _max_at_most(N.B, p - k - 1)
        if refl_a_max is not None:
            alt = 2 * m - 3 + width(refl_a_max, p - k + 1)
    elif c.case is Case.C:
        s = c.s
        if c.a_min is None or c.a_max is None:
            failures.append("a_min or a_max undefined for the case C split")
        else:
            bound = 2 * m - 3 + width(l + s - 2, c.a_min) + width(c.a_max, p - k + s + 1)
    return _report(N, c, bound, actual, failures, alt)


def _report(N, c, bound, actual, failures, alt=None):
    return BoundReport(
        input=N,
        case=c,
        bound=bound,
        actual=actual,
        slack=None if bound is None else actual - bound,
        hypotheses_met=not failures,
        reason="; ".join(failures),
        alt_bound=alt,
    )


# -- T3 -----------------------------------------------------------------------


def classify_t3(N: NormalForm) -> SumsetCase:
    """Locate 2^A among [1, c], [d, p-1] u [0, 2l-3] and [d, p-1] u [0, c]."""
    _require_shape(N)
    p, l, B, k = N.p, N.l, N.B, N.k
    R = restricted_double(N.mask, p)
    if R.bit_count() >= p - 1:
        return _not_applicable(Theorem.T3, f"|2^A| = {R.bit_count()} is not below p-1")
    ci = cyclic_interval(R, p)
    if ci is None:
        return _not_applicable(Theorem.T3, "2^A is not an interval")
    start, length = ci
    if not R & 1:
        return SumsetCase(Theorem.T3, Case.A, a_min=_min_at_least(B, l + k))
    end = (start + length - 1) % p
    if end == 2 * l - 3:
        return SumsetCase(Theorem.T3, Case.B, a_max=_max_at_most(B, p - k - 1))
    low = (1 << (end + 1)) - 1  # [0, c]
    # [d, p-1] u [0, 2l-3]; when 2^A = [0, c] there is no upper part at all
    upper = ((1 << (p - start)) - 1) << start if start else 0
    high = upper | ((1 << (2 * l - 2)) - 1)
    B1, B2 = [], []
    for a in B:
        blk = block_mask(N, a)
        in_low = blk & ~low == 0
        in_high = blk & ~high == 0
        if in_low == in_high:
            return _not_applicable(Theorem.T3, f"a={a} lands in {'both' if in_low else 'neither'} of B1, B2")
        (B1 if in_low else B2).append(a)
    s = len(B1)
    return SumsetCase(
        Theorem.T3,
        Case.C,
        s=s,
        a_min=_min_at_least(B1, l + s),
        a_max=_max_at_most(B2, p - k + s - 1),
        B1=tuple(B1),
        B2=tuple(B2),
    )


def bound_t3(N: NormalForm, c: SumsetCase) -> BoundReport:
    if c.theorem is not Theorem.T3:
        raise ValueError(f"expected a T3 case, got {c.theorem.value}")
    p, l, k, m = N.p, N.l, N.k, N.m
    actual = restricted_double(N.mask, p).bit_count()
    failures = _common_failures(N, c, actual)
    bound = alt = None
    if c.case is Case.A:
        if c.a_min is None:
            failures.append("a_min undefined: no a in B with a >= l+k")
        else:
            bound = 2 * m - 3 + width(l + k - 2, c.a_min)
    elif c.case is Case.B:
        if c.a_max is None:
            failures.append("a_max undefined: no a in B with a <= p-k-1")
        else:
            bound = 2 * m - 3 + width(c.a_max, p - k + 2)
            alt = 2 * m - 3 + width(c.a_max, p - k + 1)
    elif c.case is Case.C:
        s = c.s
        if c.a_min is None:
            failures.append(f"a_min undefined: no a in B1={list(c.B1)} with a >= l+s")
        if c.a_max is None:
            failures.append(f"a_max undefined: no a in B2={list(c.B2)} with a <= p-k+s-1")
        if c.a_min is not None and c.a_max is not None:
            bound = 2 * m - 3 + width(l + s - 2, c.a_min) + width(c.a_max, p - k + s + 1)
    return _report(N, c, bound, actual, failures, alt)


# -- T4 -----------------------------------------------------------------------


def partition_t4(N: NormalForm) -> BPartition3:
    """Split B around the blocks a + [0, l-1] that miss J entirely."""
    if not N.B:
        raise HypothesisError("B is empty", hypothesis="B nonempty")
    p = N.p
    J = j_mask(N)
    if cyclic_interval(J, p) is None:
        raise HypothesisError("2^[0,l-1] u 2^B is not an interval", hypothesis="J interval")
    if cyclic_interval(restricted_double(N.mask, p), p) is not None:
        raise HypothesisError("2^A is an interval", hypothesis="2^A not interval")
    missing = [a for a in N.B if block_mask(N, a) & J == 0]
    if not missing:
        # cannot happen: blocks all meeting the interval J would make 2^A an interval
        raise HypothesisError("no block a + [0,l-1] misses J", hypothesis="a_n defined")
    a_n, a_N = missing[0], missing[-1]
    B1 = tuple(a for a in N.B if a < a_n)
    B2 = tuple(a for a in N.B if a_n <= a <= a_N)
    B3 = tuple(a for a in N.B if a > a_N)
    return BPartition3(B1, B2, B3, a_n, a_N, H=run_count(B2) - 1)


def classify_t4(N: NormalForm) -> SumsetCase:
    _require_shape(N)
    try:
        partition_t4(N)
    except HypothesisError as exc:
        return _not_applicable(Theorem.T4, str(exc))
    return SumsetCase(Theorem.T4, Case.SINGLE)


def bound_t4(N: NormalForm, part: BPartition3) -> BoundReport:
    actual = restricted_double(N.mask, N.p).bit_count()
    failures = []
    if N.m < 4:
        failures.append(f"needs |A| >= 4, got {N.m}")
    if not _longest_ap_is_interval(N):
        failures.append("[0, l-1] is not a longest arithmetic progression")
    c = SumsetCase(Theorem.T4, Case.SINGLE)
    bound = 2 * N.m - 2 + part.H
    return _report(N, c, bound, actual, failures)


# -- dispatch -------------------------------------------------------------------


def evaluate(N: NormalForm, theorem) -> BoundReport:
    """Classify and bound in one call; unmet preconditions become a not-applicable report."""
    theorem = Theorem(theorem)
    try:
        if theorem is Theorem.T2:
            return bound_t2(N, classify_t2(N))
        if theorem is Theorem.T3:
            return bound_t3(N, classify_t3(N))
        _require_shape(N)
        try:
            part = partition_t4(N)
        except HypothesisError as exc:
            c = _not_applicable(Theorem.T4, str(exc))
            return _report(N, c, None, restricted_double(N.mask, N.p).bit_count(), [str(exc)])
        return bound_t4(N, part)
    except PreconditionError as exc:
        c = _not_applicable(theorem, str(exc))
        return _report(N, c, None, restricted_double(N.mask, N.p).bit_count(), [str(exc)])


# -- classical bounds -----------------------------------------------------------


def erdos_heilbronn_bound(A: ZpSet) -> int:
    k = len(A)
    if k < 2:
        raise ValueError(f"needs |A| >= 2, got {k}")
    return min(A.p, 2 * k - 3)


def dsh_bound(A: ZpSet, h: int) -> int:
    k = len(A)
    if h < 2 or h > k:
        raise ValueError(f"needs 2 <= h <= |A|, got h={h}, |A|={k}")
    return min(A.p, h * k - h * h + 1)


def karolyi_holds(A: ZpSet) -> Optional[bool]:
    """Whether |2^A| = 2|A|-3 exactly when A is an AP; None if |A| < 5 or p <= 2|A|-3."""
    k = len(A)
    if k < 5 or A.p <= 2 * k - 3:
        return None
    equal = restricted_double(A.mask, A.p).bit_count() == 2 * k - 3
    return equal == is_arithmetic_progression(A)
