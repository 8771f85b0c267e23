"""Exhaustive sweeps that turn each bound into a batch of falsifiable checks.

Two engines walk the same mask range:

* ``python`` evaluates every check on every set with the scalar code.
* ``numpy`` computes normal forms and sumset sizes for a whole block of
  masks at once, settles the cheap checks (EH, DSH, T1, CLASS_2M1) with
  array arithmetic, and forwards only sets that pass a vectorized
  hypothesis prefilter to the scalar theorem checks.

The prefilters are necessary conditions, so both engines produce equal
reports; a test enforces this.
"""

from __future__ import annotations

import csv
import io
import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import kernels
from .bounds import Case, BoundReport, evaluate, partition_t4, s_mask
from .errors import HypothesisError, PreconditionError, ReductionError, CaseMismatch
from .reduction import compress_b2, reduce_case_a, reduce_case_b, reduce_case_c
from .structure import APWitness, NormalForm, normalize
from .zp_core import ZpSet, as_prime, cyclic_interval, format_literal, h_restricted_mask, restricted_double

SCHEMA = "v1"
CHECKS = ("EH", "DSH", "T1", "T2", "T3", "T4", "TRACES", "CERTS", "CLASS_2M1")
BLOCK = 1 << 18


@dataclass(frozen=True)
class SweepSpec:
    p: int
    sizes: tuple[int, int] = (2, 0)  # 0 means "up to p"
    checks: frozenset = frozenset(CHECKS)
    h: int = 3
    shard: tuple[int, int] = (0, 1)
    dedup: bool = False
    max_counterexamples: int = 100

    def __post_init__(self):
        p = as_prime(self.p).value
        object.__setattr__(self, "p", p)
        lo, hi = self.sizes
        if hi == 0:
            hi = p
        if not 2 <= lo <= hi <= p:
            raise ValueError(f"size range {lo}..{hi} must lie within [2, {p}]")
        object.__setattr__(self, "sizes", (lo, hi))
        checks = frozenset(c.upper() for c in self.checks)
        unknown = checks - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown checks {sorted(unknown)}; choose from {', '.join(CHECKS)}")
        object.__setattr__(self, "checks", checks)
        i, n = self.shard
        if n < 1 or not 0 <= i < n:
            raise ValueError(f"shard {i}/{n} is not valid")
        if self.h < 2:
            raise ValueError(f"h must be at least 2, got {self.h}")

    def mask_range(self) -> tuple[int, int]:
        i, n = self.shard
        total = 1 << self.p
        return i * total // n, (i + 1) * total // n

    def echo(self):
        return {
            "p": self.p,
            "sizes": list(self.sizes),
            "checks": sorted(self.checks),
            "h": self.h,
            "dedup": self.dedup,
            "max_counterexamples": self.max_counterexamples,
        }


@dataclass
class CheckCounts:
    applicable: int = 0
    inapplicable: int = 0
    passed: int = 0
    failed: int = 0

    def add(self, other: "CheckCounts") -> None:
        self.applicable += other.applicable
        self.inapplicable += other.inapplicable
        self.passed += other.passed
        self.failed += other.failed

    def to_dict(self):
        return {
            "applicable": self.applicable,
            "inapplicable": self.inapplicable,
            "passed": self.passed,
            "failed": self.failed,
        }


def _merge_ranges(ranges):
    out = []
    for lo, hi in sorted(ranges):
        if out and lo <= out[-1][1]:
            out[-1][1] = max(out[-1][1], hi)
        else:
            out.append([lo, hi])
    return [tuple(r) for r in out]


@dataclass
class SweepReport:
    spec: dict
    ranges: list
    sets_examined: int = 0
    checks: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    classes: dict = field(default_factory=dict)  # (size, excess) -> [count, min mask]
    diagnostics: Counter = field(default_factory=Counter)
    note: str = ""
    wall_time: float = field(default=0.0, compare=False)

    @classmethod
    def empty(cls, spec: SweepSpec, note: str = "") -> "SweepReport":
        lo, hi = spec.mask_range()
        return cls(
            spec=spec.echo(),
            ranges=[(lo, hi)],
            checks={c: CheckCounts() for c in sorted(spec.checks)},
            note=note,
        )

    @property
    def total_failures(self) -> int:
        return sum(c.failed for c in self.checks.values())

    def ok(self) -> bool:
        return self.total_failures == 0

    def _cap(self) -> None:
        cap = self.spec["max_counterexamples"]
        self.counterexamples.sort(key=lambda c: (c["check"], c["mask"]))
        kept, seen = [], Counter()
        for c in self.counterexamples:
            if seen[c["check"]] < cap:
                kept.append(c)
                seen[c["check"]] += 1
        kept.sort(key=lambda c: (c["mask"], c["check"]))
        self.counterexamples = kept

    def merge(self, other: "SweepReport") -> "SweepReport":
        """Combine two disjoint pieces of the same sweep; associative and commutative."""
        if self.spec != other.spec:
            raise ValueError("cannot merge reports of different sweeps")
        out = SweepReport(
            spec=dict(self.spec),
            ranges=_merge_ranges(list(self.ranges) + list(other.ranges)),
            sets_examined=self.sets_examined + other.sets_examined,
            checks={},
            counterexamples=self.counterexamples + other.counterexamples,
            classes={},
            diagnostics=self.diagnostics + other.diagnostics,
            note=_merge_notes(self.note, other.note),
            wall_time=self.wall_time + other.wall_time,
        )
        for name in sorted(set(self.checks) | set(other.checks)):
            c = CheckCounts()
            c.add(self.checks.get(name, CheckCounts()))
            c.add(other.checks.get(name, CheckCounts()))
            out.checks[name] = c
        for src in (self.classes, other.classes):
            for key, (count, rep) in src.items():
                if key in out.classes:
                    old = out.classes[key]
                    out.classes[key] = [old[0] + count, min(old[1], rep)]
                else:
                    out.classes[key] = [count, rep]
        out._cap()
        return out

    def to_dict(self):
        return {
            "schema": SCHEMA,
            "spec": self.spec,
            "ranges": [list(r) for r in self.ranges],
            "sets_examined": self.sets_examined,
            "checks": {k: v.to_dict() for k, v in sorted(self.checks.items())},
            "counterexamples": self.counterexamples,
            "classes": [
                {
                    "size": k,
                    "excess": e,
                    "count": count,
                    "mask": rep,
                    "representative": format_literal(rep),
                }
                for (k, e), (count, rep) in sorted(self.classes.items())
            ],
            "diagnostics": dict(sorted(self.diagnostics.items())),
            "note": self.note,
            "wall_time": self.wall_time,
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, d) -> "SweepReport":
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        return cls(
            spec=d["spec"],
            ranges=[tuple(r) for r in d["ranges"]],
            sets_examined=d["sets_examined"],
            checks={k: CheckCounts(**v) for k, v in d["checks"].items()},
            counterexamples=list(d["counterexamples"]),
            classes={(c["size"], c["excess"]): [c["count"], c["mask"]] for c in d["classes"]},
            diagnostics=Counter(d["diagnostics"]),
            note=d.get("note", ""),
            wall_time=d.get("wall_time", 0.0),
        )

    @classmethod
    def from_json(cls, text: str) -> "SweepReport":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["kind", "check", "set", "mask", "size", "excess", "count", "details"])
        for name, c in sorted(self.checks.items()):
            w.writerow(["check", name, "", "", "", "", c.applicable, json.dumps(c.to_dict(), sort_keys=True)])
        for c in self.counterexamples:
            w.writerow(["counterexample", c["check"], c["set"], c["mask"], "", "", "", json.dumps(c["details"], sort_keys=True)])
        for (k, e), (count, rep) in sorted(self.classes.items()):
            w.writerow(["class", "CLASS_2M1", format_literal(rep), rep, k, e, count, ""])
        return buf.getvalue()


def _merge_notes(a: str, b: str) -> str:
    notes = sorted({n for n in (a, b) if n})
    return "; ".join(notes)


# -- per-set checks -------------------------------------------------------------


class SetContext:
    """One set plus lazily computed facts shared between checks."""

    def __init__(self, A: ZpSet, N: Optional[NormalForm] = None, size: Optional[int] = None):
        self.A = A
        self.k = len(A)
        self._N = N
        self.size = restricted_double(A.mask, A.p).bit_count() if size is None else size
        self._reports: dict = {}

    @property
    def N(self) -> Optional[NormalForm]:
        if self._N is None and self.k >= 2:
            self._N = normalize(self.A)
        return self._N

    def report(self, theorem: str) -> BoundReport:
        if theorem not in self._reports:
            self._reports[theorem] = evaluate(self.N, theorem)
        return self._reports[theorem]


# A check returns None when its hypotheses fail, else (passed, details).
Outcome = Optional[tuple[bool, dict]]


def _eh_outcome(k: int, size: int, p: int) -> Outcome:
    bound = min(p, 2 * k - 3)
    return size >= bound, {"bound": bound, "actual": size}


def _dsh_outcome(k: int, size: int, p: int, h: int) -> Outcome:
    if k < h:
        return None
    bound = min(p, h * k - h * h + 1)
    return size >= bound, {"h": h, "bound": bound, "actual": size}


def _t1_outcome(k: int, size: int, p: int, is_ap: bool, diag: Counter) -> Outcome:
    if k < 5 or p <= 2 * k - 3:
        return None
    if is_ap:
        diag["T1_ap_sets"] += 1
    equal = size == 2 * k - 3
    return equal == is_ap, {"actual": size, "is_ap": is_ap, "equality": equal}


def _class_outcome(k: int, size: int, p: int, is_ap: bool) -> Outcome:
    if k < 5 or p <= 2 * k - 3 or is_ap:
        return None
    return size >= 2 * k - 2, {"actual": size, "bound": 2 * k - 2}


def check_t2(ctx: SetContext, spec, diag: Counter) -> Outcome:
    rep = ctx.report("T2")
    if not rep.hypotheses_met:
        return None
    c = rep.case
    diag[f"T2_case_{c.case.value}"] += 1
    if c.case is Case.C and c.s == 1:
        diag["T2_case_C_s1"] += 1
        if rep.violated:
            diag["T2_case_C_s1_failed"] += 1
    if c.case is Case.B and rep.alt_bound is not None and rep.actual < rep.alt_bound:
        diag["T2_case_B_alt_failed"] += 1
    if rep.actual < 2 * ctx.k - 1:
        diag["T2_below_2m_minus_1"] += 1
    return not rep.violated, rep.to_dict()


def check_t3(ctx: SetContext, spec, diag: Counter) -> Outcome:
    rep = ctx.report("T3")
    if not rep.hypotheses_met:
        return None
    c = rep.case
    diag[f"T3_case_{c.case.value}"] += 1
    if c.case is Case.B and rep.alt_bound is not None and rep.actual < rep.alt_bound:
        diag["T3_case_B_alt_failed"] += 1
    if cyclic_interval(s_mask(ctx.N), ctx.A.p) is None:
        diag["T3_applies_S_not_interval"] += 1
    if rep.actual < 2 * ctx.k - 1:
        diag["T3_below_2m_minus_1"] += 1
    return not rep.violated, rep.to_dict()


def _t4_partition(ctx: SetContext):
    rep = ctx.report("T4")
    if not rep.hypotheses_met:
        return None, rep
    return partition_t4(ctx.N), rep


def check_t4(ctx: SetContext, spec, diag: Counter) -> Outcome:
    part, rep = _t4_partition(ctx)
    if part is None:
        return None
    if part.H >= 1:
        diag["T4_H_ge_1"] += 1
    details = rep.to_dict()
    details["partition"] = part.to_dict()
    return not rep.violated, details


def check_traces(ctx: SetContext, spec, diag: Counter) -> Outcome:
    rep = ctx.report("T2")
    if not rep.hypotheses_met:
        return None
    N = ctx.N
    case = rep.case.case
    if case is Case.C:
        # case-c combination: logged, not part of the trace verdict
        try:
            combo = reduce_case_c(N, rep.case.s)
        except (CaseMismatch, PreconditionError):
            diag["combo_not_reducible"] += 1
        except ReductionError:
            diag["combo_errors"] += 1
        else:
            diag["combo_checked"] += 1
            if combo.problems():
                diag["combo_problems"] += 1
            size = restricted_double(combo.final.mask, N.p).bit_count()
            if rep.bound is not None and size < rep.bound:
                diag["combo_below_bound"] += 1
        return None
    reducer = reduce_case_a if case is Case.A else reduce_case_b
    try:
        trace = reducer(N)
    except (CaseMismatch, PreconditionError):
        diag[f"trace_case_{case.value}_not_reducible"] += 1
        return None
    except ReductionError as exc:
        return False, {"error": type(exc).__name__, "message": str(exc)}
    diag[f"trace_case_{case.value}"] += 1
    diag[f"trace_shape_{trace.shape.value}"] += 1
    diag[f"trace_j_{trace.j}"] += 1
    if not trace.literal:
        diag["trace_nonliteral_FormIII"] += 1
    if trace.identity is not None and trace.identity[0] != trace.identity[1]:
        diag["trace_reflection_identity_failed"] += 1
    problems = trace.problems()
    return not problems, {"trace": trace.to_dict(), "problems": problems}


def check_certs(ctx: SetContext, spec, diag: Counter) -> Outcome:
    part, _ = _t4_partition(ctx)
    if part is None:
        return None
    cert = compress_b2(ctx.N, part)
    if not cert.c1_holds:
        diag["cert_c1_failed"] += 1
    if cert.compressed_is_ap:
        diag["cert_compressed_is_ap"] += 1
    if not cert.b1_holds:
        diag["cert_b1_failed"] += 1
    if not cert.d1_holds:
        diag["cert_d1_failed"] += 1
    return cert.b1_holds and cert.d1_holds, cert.to_dict()


SCALAR_CHECKS: dict[str, Callable] = {
    "T2": check_t2,
    "T3": check_t3,
    "T4": check_t4,
    "TRACES": check_traces,
    "CERTS": check_certs,
}


@dataclass(frozen=True)
class Verdict:
    applicable: bool
    passed: Optional[bool]
    details: dict

    def to_dict(self):
        return {"applicable": self.applicable, "passed": self.passed, "details": self.details}


def _simple_outcomes(ctx: SetContext, checks, h: int, diag: Counter):
    k, size, p = ctx.k, ctx.size, ctx.A.p
    is_ap = ctx.N is not None and ctx.N.l == k
    out = {}
    if "EH" in checks:
        out["EH"] = _eh_outcome(k, size, p) if k >= 2 else None
    if "DSH" in checks:
        out["DSH"] = None
        if 2 <= h <= k:
            hsize = h_restricted_mask(ctx.A.mask, h, p).bit_count()
            out["DSH"] = _dsh_outcome(k, hsize, p, h)
    if "T1" in checks:
        out["T1"] = _t1_outcome(k, size, p, is_ap, diag)
    if "CLASS_2M1" in checks:
        out["CLASS_2M1"] = _class_outcome(k, size, p, is_ap)
    return out


def check_one(A: ZpSet, checks=CHECKS, h: int = 3) -> dict[str, Verdict]:
    """Evaluate the selected checks on a single set."""
    checks = {c.upper() for c in checks}
    diag: Counter = Counter()
    ctx = SetContext(A)
    outcomes = _simple_outcomes(ctx, checks, h, diag)
    for name in CHECKS:
        if name in checks and name in SCALAR_CHECKS:
            outcomes[name] = SCALAR_CHECKS[name](ctx, None, diag) if ctx.k >= 2 else None
    return {
        name: Verdict(False, None, {}) if o is None else Verdict(True, o[0], o[1])
        for name, o in outcomes.items()
    }


# -- engines --------------------------------------------------------------------


def _record(report: SweepReport, name: str, mask: int, outcome: Outcome) -> None:
    c = report.checks[name]
    if outcome is None:
        c.inapplicable += 1
        return
    c.applicable += 1
    passed, details = outcome
    if passed:
        c.passed += 1
    else:
        c.failed += 1
        report.counterexamples.append(
            {"mask": mask, "set": format_literal(mask), "check": name, "details": details}
        )


def _add_class(report: SweepReport, k: int, size: int, mask: int) -> None:
    key = (k, size - 2 * k)
    if key in report.classes:
        old = report.classes[key]
        report.classes[key] = [old[0] + 1, min(old[1], mask)]
    else:
        report.classes[key] = [1, mask]


def _sweep_python(spec: SweepSpec, lo: int, hi: int, report: SweepReport) -> None:
    p = spec.p
    kmin, kmax = spec.sizes
    for mask in range(lo, hi):
        k = mask.bit_count()
        if k < kmin or k > kmax:
            continue
        A = ZpSet(as_prime(p), mask)
        ctx = SetContext(A)
        if spec.dedup and ctx.N.mask != mask:
            continue
        report.sets_examined += 1
        for name, o in _simple_outcomes(ctx, spec.checks, spec.h, report.diagnostics).items():
            _record(report, name, mask, o)
        if "CLASS_2M1" in spec.checks:
            _add_class(report, k, ctx.size, mask)
        for name in CHECKS:
            if name in spec.checks and name in SCALAR_CHECKS:
                _record(report, name, mask, SCALAR_CHECKS[name](ctx, spec, report.diagnostics))
        if len(report.counterexamples) > 4 * spec.max_counterexamples * len(CHECKS):
            report._cap()


def _record_vector(report, name, masks, applicable, failed, details_fn):
    """Bulk version of _record for checks decided by array arithmetic."""
    c = report.checks[name]
    n_app = int(applicable.sum())
    n_fail = int((applicable & failed).sum())
    c.applicable += n_app
    c.inapplicable += len(masks) - n_app
    c.failed += n_fail
    c.passed += n_app - n_fail
    for i in np.flatnonzero(applicable & failed)[: spec_cap(report)]:
        m = int(masks[i])
        report.counterexamples.append(
            {"mask": m, "set": format_literal(m), "check": name, "details": details_fn(i)}
        )


def spec_cap(report) -> int:
    return report.spec["max_counterexamples"]


def _sweep_numpy_block(spec: SweepSpec, x: np.ndarray, report: SweepReport) -> None:
    p = spec.p
    prime = as_prime(p)
    N, l, a, d = kernels.normalize(x, p)
    if spec.dedup:
        keep = N == x
        x, N, l, a, d = x[keep], N[keep], l[keep], a[keep], d[keep]
    if len(x) == 0:
        return
    report.sets_examined += len(x)
    k = kernels.popcount(x)
    R = kernels.restricted_double(N, p)
    size = kernels.popcount(R)
    is_ap = l == k
    checks = spec.checks
    ones = np.ones(len(x), dtype=bool)

    if "EH" in checks:
        bound = np.minimum(p, 2 * k - 3)
        _record_vector(
            report, "EH", x, ones, size < bound,
            lambda i: {"bound": int(bound[i]), "actual": int(size[i])},
        )
    if "DSH" in checks:
        h = spec.h
        app = k >= h
        hsize = kernels.popcount(kernels.h_restricted(x, h, p))
        hb = np.minimum(p, h * k - h * h + 1)
        _record_vector(
            report, "DSH", x, app, hsize < hb,
            lambda i: {"h": h, "bound": int(hb[i]), "actual": int(hsize[i])},
        )
    karolyi = (k >= 5) & (p > 2 * k - 3)
    if "T1" in checks:
        equal = size == 2 * k - 3
        n_ap = int((karolyi & is_ap).sum())
        if n_ap:
            report.diagnostics["T1_ap_sets"] += n_ap
        _record_vector(
            report, "T1", x, karolyi, equal != is_ap,
            lambda i: {"actual": int(size[i]), "is_ap": bool(is_ap[i]), "equality": bool(equal[i])},
        )
    if "CLASS_2M1" in checks:
        app = karolyi & ~is_ap
        _record_vector(
            report, "CLASS_2M1", x, app, size < 2 * k - 2,
            lambda i: {"actual": int(size[i]), "bound": int(2 * k[i] - 2)},
        )
        excess = size - 2 * k
        keys = k * (2 * p + 1) + (excess + p)
        uniq, inv = np.unique(keys, return_inverse=True)
        counts = np.bincount(inv)
        reps = np.full(len(uniq), np.iinfo(np.int64).max, dtype=np.int64)
        np.minimum.at(reps, inv, x.astype(np.int64))
        for key, count, rep in zip(uniq.tolist(), counts.tolist(), reps.tolist()):
            kk, ee = divmod(key, 2 * p + 1)
            ck = (kk, ee - p)
            if ck in report.classes:
                old = report.classes[ck]
                report.classes[ck] = [old[0] + count, min(old[1], rep)]
            else:
                report.classes[ck] = [count, rep]

    wanted = checks & set(SCALAR_CHECKS)
    if not wanted:
        return
    base = (k >= 4) & (l < k)
    I = kernels.interval_mask(l)
    Bm = N & ~I
    R_I = kernels.restricted_double(I, p)
    full = np.uint64((1 << p) - 1)
    cand = {}
    if wanted & {"T2", "TRACES"}:
        S = R_I | kernels.block_union(Bm, l, p)
        t2 = base & (size < p - 1) & kernels.is_cyclic_interval(S, p) & (S != full)
        cand["T2"] = cand["TRACES"] = t2
    if "T3" in wanted:
        cand["T3"] = base & (size < p - 1) & kernels.is_cyclic_interval(R, p)
    if wanted & {"T4", "CERTS"}:
        J = R_I | kernels.restricted_double(Bm, p)
        t4 = base & kernels.is_cyclic_interval(J, p) & ~kernels.is_cyclic_interval(R, p)
        cand["T4"] = cand["CERTS"] = t4
    any_cand = np.zeros(len(x), dtype=bool)
    for name in wanted:
        any_cand |= cand[name]
    # sets outside every prefilter are inapplicable for all scalar checks
    n_skip = len(x) - int(any_cand.sum())
    for name in wanted:
        report.checks[name].inapplicable += n_skip
    for i in np.flatnonzero(any_cand):
        mask = int(x[i])
        li = int(l[i])
        Ni = int(N[i])
        B = tuple(b for b in range(li, p) if Ni >> b & 1)
        NF = NormalForm(prime, li, B, APWitness(int(a[i]), int(d[i]), li), ZpSet(prime, mask), canonical=True)
        ctx = SetContext(NF.origin, NF, int(size[i]))
        for name in CHECKS:
            if name not in wanted:
                continue
            if cand[name][i]:
                _record(report, name, mask, SCALAR_CHECKS[name](ctx, spec, report.diagnostics))
            else:
                report.checks[name].inapplicable += 1


def _run_range(args) -> SweepReport:
    spec, lo, hi, engine = args
    report = SweepReport.empty(spec)
    report.ranges = [(lo, hi)]
    t0 = time.perf_counter()
    if engine == "python":
        _sweep_python(spec, lo, hi, report)
    else:
        for start in range(lo, hi, BLOCK):
            x = kernels.masks_in_range(start, min(hi, start + BLOCK), spec.sizes)
            if len(x):
                _sweep_numpy_block(spec, x, report)
            if len(report.counterexamples) > 4 * spec.max_counterexamples * len(CHECKS):
                report._cap()
    report._cap()
    report.wall_time = time.perf_counter() - t0
    return report


def sweep(spec: SweepSpec, jobs: int = 1, engine: str = "auto", note: str = "") -> SweepReport:
    """Enumerate the shard's mask range and aggregate every enabled check."""
    if engine == "auto":
        engine = "numpy" if spec.p <= kernels.MAX_KERNEL_P else "python"
    if engine not in ("numpy", "python"):
        raise ValueError(f"unknown engine {engine!r}")
    if engine == "numpy" and spec.p > kernels.MAX_KERNEL_P:
        raise ValueError(f"numpy engine supports p <= {kernels.MAX_KERNEL_P}")
    lo, hi = spec.mask_range()
    t0 = time.perf_counter()
    if jobs <= 1 or hi - lo < 2 * BLOCK:
        report = _run_range((spec, lo, hi, engine))
    else:
        pieces = jobs * 4
        bounds = [lo + (hi - lo) * i // pieces for i in range(pieces + 1)]
        tasks = [(spec, bounds[i], bounds[i + 1], engine) for i in range(pieces)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_range, tasks))
        report = parts[0]
        for part in parts[1:]:
            report = report.merge(part)
    report.note = note
    report.wall_time = time.perf_counter() - t0
    return report


def merge_all(reports) -> SweepReport:
    reports = list(reports)
    if not reports:
        raise ValueError("nothing to merge")
    out = reports[0]
    for r in reports[1:]:
        out = out.merge(r)
    return out


__all__ = [
    "CHECKS",
    "CheckCounts",
    "SCHEMA",
    "SetContext",
    "SweepReport",
    "SweepSpec",
    "Verdict",
    "check_one",
    "merge_all",
    "sweep",
]
