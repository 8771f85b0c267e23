"""Cardinality-preserving transformations that shrink 2^A.

The case-a step replaces ``[0, L-1] u C`` by ``[0, L] u (C minus max C)``.
Since every other block c + [0, L] ends at most at ``max C + L - 1``, the new
restricted sumset sits inside the old one.  Elements of C that become
adjacent to the growing interval are absorbed (same set, new bookkeeping).
The walk stops once ``max C`` is ``a_min = min{a in B : a >= l+k}``, at
which point the remaining elements of C below a_min fill
``[L+1, l+k-1]`` exactly, so the terminal set is one of

* FormI   ``[0, m-2] u {a_min}``
* FormII  ``[0, L-1] u [L+1, a_min]``        with a_min = m
* FormIII ``[0, L-1] u [L+1, m-1] u {a_min}`` with a_min > m

where ``m = l + k`` never changes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .bounds import BPartition3, block_mask, s_mask
from .errors import CaseMismatch, DegenerateReduction, NonTermination, PreconditionError, TerminalInput
from .structure import NormalForm, is_arithmetic_progression
from .zp_core import ZpSet, cyclic_interval, restricted_double, width


class Terminal(str, Enum):
    FORM_I = "FormI"
    FORM_II = "FormII"
    FORM_III = "FormIII"
    ALREADY_TERMINAL = "AlreadyTerminal"
    COMBINED = "Combined"


@dataclass(frozen=True)
class ReductionTrace:
    """A = A_0, A_1, ..., A_j with |A_i| constant and 2^A_{i+1} inside 2^A_i.

    ``terminal`` is AlreadyTerminal when no step was needed; ``shape`` always
    names the form of the last set.  For reflected (case b) traces ``a_min``
    and ``shape`` refer to the reflected coordinates the walk ran in.
    """

    p: int
    steps: tuple[ZpSet, ...]
    terminal: Terminal
    shape: Terminal
    a_min: Optional[int] = None
    q: Optional[int] = None
    middle: int = 0
    reflected: bool = False
    parts: tuple["ReductionTrace", ...] = ()
    # both sides of the reflection identity w(a_max, p-k+1) = w(l+k-2, a_min')
    identity: Optional[tuple[int, int]] = None

    @property
    def j(self) -> int:
        return len(self.steps) - 1

    @property
    def final(self) -> ZpSet:
        return self.steps[-1]

    @property
    def literal(self) -> bool:
        """True unless the terminal is FormIII with a middle run longer than one element."""
        if self.shape is Terminal.COMBINED:
            return all(t.literal for t in self.parts)
        return self.shape is not Terminal.FORM_III or self.middle == 1

    def bound(self) -> Optional[int]:
        """2m - 3 + w(m-2, a_min); the value FormI and FormIII attain exactly."""
        if self.a_min is None:
            return None
        m = len(self.steps[0])
        return 2 * m - 3 + width(m - 2, self.a_min)

    def problems(self) -> list[str]:
        """Recheck every invariant by direct computation; empty means certified."""
        out = []
        p = self.p
        sizes = {len(s) for s in self.steps}
        if len(sizes) != 1:
            out.append(f"cardinality changes along the trace: {sorted(sizes)}")
        prev = None
        for i, s in enumerate(self.steps):
            r = restricted_double(s.mask, p)
            if prev is not None and r & ~prev:
                out.append(f"2^A_{i} is not contained in 2^A_{i - 1}")
            prev = r
        k = max(len(s) for s in self.steps)
        if self.steps and self.j > max(len(self.steps[0]) - 1, 0):
            out.append(f"took {self.j} steps for |A| = {k}")
        if self.shape is Terminal.COMBINED:
            for t in self.parts:
                out.extend(t.problems())
            return out
        bound = self.bound()
        if bound is not None:
            size = restricted_double(self.final.mask, p).bit_count()
            if self.shape in (Terminal.FORM_I, Terminal.FORM_III) and size != bound:
                out.append(f"{self.shape.value} terminal has |2^A_j| = {size}, expected {bound}")
            if self.shape is Terminal.FORM_II and size < bound:
                out.append(f"FormII terminal has |2^A_j| = {size} < {bound}")
        return out

    def to_dict(self):
        out = {
            "p": self.p,
            "steps": [s.literal() for s in self.steps],
            "terminal": self.terminal.value,
            "j": self.j,
            "shape": self.shape.value,
            "a_min": self.a_min,
            "q": self.q,
            "middle": self.middle,
            "literal": self.literal,
            "reflected": self.reflected,
        }
        if self.parts:
            out["parts"] = [t.to_dict() for t in self.parts]
        if self.identity is not None:
            out["identity"] = list(self.identity)
        return out


def _a_min(N: NormalForm) -> Optional[int]:
    return min((a for a in N.B if a >= N.m), default=None)


def _check_case_a(N: NormalForm) -> int:
    if not N.B:
        raise PreconditionError("B is empty")
    S = s_mask(N)
    if cyclic_interval(S, N.p) != (1, N.B[-1] + N.l - 1):
        raise CaseMismatch(f"{N}: S is not of the form [1, a_k + l - 1]")
    a_min = _a_min(N)
    if a_min is None:
        raise CaseMismatch(f"{N}: no a in B with a >= l + k")
    return a_min


def _check_case_b(N: NormalForm) -> None:
    if not N.B:
        raise PreconditionError("B is empty")
    S = s_mask(N)
    ci = cyclic_interval(S, N.p)
    if ci is None or not S & 1 or ci[0] != N.B[0]:
        raise CaseMismatch(f"{N}: S is not of the form [a_1, p-1] u [0, 2l-3]")


def terminal_shape(N: NormalForm, a_min: int) -> Optional[tuple[Terminal, int]]:
    """(shape, middle-run length) when N is a stopping point of the case-a walk."""
    if not N.B or N.B[-1] != a_min:
        return None
    mids = N.B[:-1]
    if not mids:
        return Terminal.FORM_I, 0
    if list(mids) != list(range(N.l + 1, N.m)):
        return None
    if a_min == N.m:
        return Terminal.FORM_II, len(mids)
    return Terminal.FORM_III, len(mids)


def reduce_step_a(N: NormalForm, check_case: bool = False) -> NormalForm:
    """[0, l-1] u B  ->  [0, l] u (B minus max B), absorbing new neighbours.

    The step itself only needs a_min to exist; the interval hypothesis on S
    is checked by :func:`reduce_case_a` (or here with ``check_case=True``).
    """
    if check_case:
        a_min = _check_case_a(N)
    else:
        if not N.B:
            raise PreconditionError("B is empty")
        a_min = _a_min(N)
        if a_min is None:
            raise CaseMismatch(f"{N}: no a in B with a >= l + k")
    if N.B[-1] == a_min:
        raise TerminalInput(f"{N} is terminal: max B is a_min = {a_min}")
    rest = list(N.B[:-1])
    L = N.l + 1
    i = 0
    while i < len(rest) and rest[i] == L:
        i += 1
        L += 1
    rest = rest[i:]
    if not rest:
        raise DegenerateReduction(f"reducing {N} produced an arithmetic progression")
    return NormalForm.from_parts(N.modulus, L, rest)


def reduce_case_a(N: NormalForm) -> ReductionTrace:
    a_min = _check_case_a(N)
    l0 = N.l
    current = N
    steps = [N.as_set()]
    for _ in range(N.k + 1):
        found = terminal_shape(current, a_min)
        if found is not None:
            shape, middle = found
            return ReductionTrace(
                p=N.p,
                steps=tuple(steps),
                terminal=Terminal.ALREADY_TERMINAL if len(steps) == 1 else shape,
                shape=shape,
                a_min=a_min,
                q=current.l - l0 if shape is Terminal.FORM_II else None,
                middle=middle,
            )
        current = reduce_step_a(current)
        steps.append(current.as_set())
    raise NonTermination(f"case-a reduction of {N} did not stop within k = {N.k} steps")


def reflect(N: NormalForm) -> NormalForm:
    """-A + (l-1): fixes [0, l-1] and reverses B."""
    p = N.p
    return NormalForm.from_parts(N.modulus, N.l, [(N.l - 1 - a) % p for a in N.B])


def _reflect_set(X: ZpSet, l: int) -> ZpSet:
    p = X.p
    return ZpSet.from_iterable(X.modulus, ((l - 1 - x) % p for x in X))


def reduce_case_b(N: NormalForm) -> ReductionTrace:
    _check_case_b(N)
    p, l, k = N.p, N.l, N.k
    inner = reduce_case_a(reflect(N))
    steps = tuple(_reflect_set(s, l) for s in inner.steps)
    a_max = max((a for a in N.B if a <= p - k - 1), default=None)
    identity = None
    if a_max is not None:
        identity = (width(a_max, p - k + 1), width(l + k - 2, inner.a_min))
    return ReductionTrace(
        p=p,
        steps=steps,
        terminal=inner.terminal,
        shape=inner.shape,
        a_min=inner.a_min,
        q=inner.q,
        middle=inner.middle,
        reflected=True,
        identity=identity,
    )


def reduce_case_c(N: NormalForm, s: int) -> ReductionTrace:
    """Reduce [0,l-1] u B_1 by case a and [0,l-1] u B_2 by case b, then take the union."""
    if not 1 <= s <= N.k - 1:
        raise PreconditionError(f"split s={s} outside [1, {N.k - 1}]")
    left = NormalForm.from_parts(N.modulus, N.l, N.B[:s])
    right = NormalForm.from_parts(N.modulus, N.l, N.B[s:])
    t1 = reduce_case_a(left)
    t2 = reduce_case_b(right)
    start = N.as_set()
    combined = t1.final | t2.final
    untouched = t1.j == 0 and t2.j == 0
    return ReductionTrace(
        p=N.p,
        steps=(start,) if combined == start else (start, combined),
        terminal=Terminal.ALREADY_TERMINAL if untouched else Terminal.COMBINED,
        shape=Terminal.COMBINED,
        parts=(t1, t2),
    )


@dataclass(frozen=True)
class CompressionCert:
    """Numbers behind replacing B_2 by the packed interval [a_n, a_n + |B_2| - 1]."""

    original: ZpSet
    compressed: ZpSet
    lhs: int
    rhs: int
    drop: int
    H: int
    compressed_is_ap: bool
    compressed_size: int

    @property
    def b1_holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def d1_holds(self) -> bool:
        return self.drop >= self.H

    @property
    def c1_holds(self) -> bool:
        """|2^A'| >= 2|A'| - 2 unless A' is an AP."""
        return self.compressed_is_ap or self.compressed_size >= 2 * len(self.compressed) - 2

    def to_dict(self):
        return {
            "p": self.original.p,
            "original": self.original.literal(),
            "compressed": self.compressed.literal(),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "drop": self.drop,
            "H": self.H,
            "compressed_is_ap": self.compressed_is_ap,
            "compressed_size": self.compressed_size,
            "b1_holds": self.b1_holds,
            "d1_holds": self.d1_holds,
            "c1_holds": self.c1_holds,
        }


def _blocks(N: NormalForm, elems) -> int:
    out = 0
    for a in elems:
        out |= block_mask(N, a)
    return out


def compress_b2(N: NormalForm, part: BPartition3) -> CompressionCert:
    packed = tuple(range(part.a_n, part.a_n + len(part.B2)))
    Bp = part.B1 + packed + part.B3
    compressed = NormalForm.from_parts(N.modulus, N.l, Bp).as_set()
    drop = _blocks(N, part.B2).bit_count() - _blocks(N, packed).bit_count()
    size = restricted_double(compressed.mask, N.p).bit_count()
    return CompressionCert(
        original=N.as_set(),
        compressed=compressed,
        lhs=size + drop,
        rhs=restricted_double(N.mask, N.p).bit_count(),
        drop=drop,
        H=part.H,
        compressed_is_ap=is_arithmetic_progression(compressed),
        compressed_size=size,
    )
