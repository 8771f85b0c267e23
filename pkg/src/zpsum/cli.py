"""Command-line front end: ``zpsum <command> [options]``.

Exit codes: 0 success (including "not applicable"), 1 internal error,
2 usage or parse error, 3 a bound was violated.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional

from . import __version__
from .bounds import Theorem, classify_t2, classify_t3, classify_t4, evaluate
from .errors import NotPrimeError, ParseError, PreconditionError, ReductionError
from .reduction import reduce_case_a, reduce_case_b, reduce_case_c
from .structure import decompose, normalize
from .verify import CHECKS, SweepReport, SweepSpec, check_one, merge_all, sweep
from .zp_core import ZpSet, as_prime, dilate, h_restricted_sumset, restricted_sumset

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_COUNTEREXAMPLE = 3


class UsageError(Exception):
    pass


def _parse_sizes(text: str) -> tuple[int, int]:
    parts = text.split("..")
    try:
        if len(parts) == 1:
            n = int(parts[0])
            return n, n
        if len(parts) == 2:
            return int(parts[0]), int(parts[1])
    except ValueError:
        pass
    raise UsageError(f"--sizes expects min..max, got {text!r}")


def _parse_shard(text: str) -> tuple[int, int]:
    try:
        i, n = text.split("/")
        return int(i), int(n)
    except ValueError:
        raise UsageError(f"--shard expects i/n, got {text!r}") from None


def _parse_checks(text: str) -> frozenset:
    names = {t.strip().upper() for t in text.split(",") if t.strip()}
    if "ALL" in names:
        return frozenset(CHECKS)
    bad = names - set(CHECKS)
    if bad:
        raise UsageError(f"unknown check {sorted(bad)[0]!r}; choose from {','.join(CHECKS).lower()}")
    return frozenset(names)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zpsum", description="Restricted sumsets 2^A in Z_p.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(name, help_text, needs_set=True):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--p", type=int, required=True, help="odd prime modulus")
        if needs_set:
            sp.add_argument("--set", dest="set_literal", required=True, help='set literal, e.g. "0-3,12-13"')
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--out", help="write output to this file instead of stdout")
        return sp

    sp = common("compute", "print 2^A (or the h-fold restricted sumset) and its runs")
    sp.add_argument("--h", type=int, default=2, help="number of distinct summands (default 2)")
    sp.add_argument("--dilate", type=int, help="replace A by t*A before computing")

    common("normalize", "write A as [0, l-1] u B via a longest arithmetic progression")

    sp = common("classify", "which theorem cases apply, plus per-check verdicts")
    sp.add_argument("--theorem", choices=("t2", "t3", "t4", "all"), default="all")

    sp = common("bound", "bound report(s) with slack against the actual |2^A|")
    sp.add_argument("--theorem", choices=("t2", "t3", "t4", "all"), default="all")

    common("reduce", "run the cardinality-preserving reduction for the applicable case")

    sp = common("sweep", "exhaustive check over all subsets in a mask range", needs_set=False)
    sp.add_argument("--sizes", default=None, help="min..max subset sizes (default 2..p)")
    sp.add_argument("--checks", default="all", help="comma list from " + ",".join(CHECKS).lower())
    sp.add_argument("--h", type=int, default=3, help="h for the DSH check")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--shard", default="0/1", help="i/n: sweep the i-th of n mask ranges")
    sp.add_argument("--engine", choices=("auto", "numpy", "python"), default="auto")
    sp.add_argument("--dedup", action="store_true", help="only sets that are their own normal form")
    sp.add_argument("--max-counterexamples", type=int, default=100)
    sp.add_argument("--seed-note", default="", help="free text stored in the report")

    sp = sub.add_parser("merge", help="merge shard reports (JSON) into one")
    sp.add_argument("reports", nargs="+")
    sp.add_argument("--format", choices=("text", "json", "csv"), default="json")
    sp.add_argument("--out")
    return parser


# -- rendering --------------------------------------------------------------------


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _kv_text(d: dict, indent: str = "") -> str:
    lines = []
    for key, value in d.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_kv_text(value, indent + "  "))
        else:
            lines.append(f"{indent}{key}: {value}")
    return "\n".join(lines)


def _csv_rows(rows: list[dict]) -> str:
    buf = io.StringIO()
    fields = list(rows[0]) if rows else []
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
    return buf.getvalue()


def _render(payload, fmt: str, text=None) -> str:
    if fmt == "json":
        return _dump(payload)
    if fmt == "csv":
        rows = payload if isinstance(payload, list) else [payload]
        return _csv_rows(rows)
    if text is not None:
        return text
    if isinstance(payload, list):
        return "\n\n".join(_kv_text(p) for p in payload)
    return _kv_text(payload)


# -- commands -----------------------------------------------------------------------


def _load_set(args) -> ZpSet:
    return ZpSet.parse(as_prime(args.p), args.set_literal)


def cmd_compute(args):
    A = _load_set(args)
    if args.dilate is not None:
        A = dilate(A, args.dilate)
    S = restricted_sumset(A, A) if args.h == 2 else h_restricted_sumset(A, args.h)
    runs = decompose(S) if S else None
    payload = {
        "p": A.p,
        "A": A.literal(),
        "h": args.h,
        "sumset": S.literal(),
        "size": len(S),
        "runs": [[r.lo, r.hi] for r in runs.runs] if runs else [],
        "H": runs.H if runs else None,
    }
    label = "2^A" if args.h == 2 else f"{args.h}^A"
    text = "\n".join([
        f"A = {{{A.literal()}}} in Z_{A.p}  (|A| = {len(A)})",
        f"{label} = {{{S.literal()}}}",
        f"|{label}| = {len(S)}",
        f"runs: {' '.join(f'[{r.lo},{r.hi}]' for r in runs.runs) if runs else '(empty)'}",
    ])
    return payload, text, EXIT_OK


def cmd_normalize(args):
    A = _load_set(args)
    N = normalize(A)
    payload = N.to_dict()
    w = N.witness
    text = "\n".join([
        f"l = {N.l}",
        f"B = {{{','.join(map(str, N.B))}}}",
        f"witness: a={w.a} d={w.d} r={w.r}",
        f"normal form: {N}",
    ])
    return payload, text, EXIT_OK


def _theorems(choice: str):
    if choice == "all":
        return [Theorem.T2, Theorem.T3, Theorem.T4]
    return [Theorem(choice.upper())]


_CLASSIFIERS = {Theorem.T2: classify_t2, Theorem.T3: classify_t3, Theorem.T4: classify_t4}


def cmd_classify(args):
    A = _load_set(args)
    N = normalize(A)
    cases = {}
    for t in _theorems(args.theorem):
        try:
            c = _CLASSIFIERS[t](N)
            cases[t.value] = {
                "case": c.case.value,
                "s": c.s,
                "a_min": c.a_min,
                "a_max": c.a_max,
                "reason": c.reason,
            }
        except PreconditionError as exc:
            cases[t.value] = {"case": "NotApplicable", "reason": str(exc)}
    verdicts = {k: v.to_dict() for k, v in check_one(A).items()}
    payload = {"p": A.p, "A": A.literal(), "normal_form": N.to_dict(), "cases": cases, "checks": verdicts}
    lines = [f"normal form: {N}"]
    for name, c in cases.items():
        if c["case"] == "NotApplicable":
            lines.append(f"{name}: not applicable: {c['reason']}")
        else:
            extra = ", ".join(f"{k}={c[k]}" for k in ("s", "a_min", "a_max") if c.get(k) is not None)
            lines.append(f"{name}: case {c['case']}" + (f" ({extra})" if extra else ""))
    for name, v in verdicts.items():
        state = "n/a" if not v["applicable"] else ("pass" if v["passed"] else "FAIL")
        lines.append(f"check {name}: {state}")
    failed = any(v["applicable"] and v["passed"] is False for v in verdicts.values())
    return payload, "\n".join(lines), EXIT_COUNTEREXAMPLE if failed else EXIT_OK


def cmd_bound(args):
    A = _load_set(args)
    N = normalize(A)
    reports = [evaluate(N, t) for t in _theorems(args.theorem)]
    payload = [r.to_dict() for r in reports]
    lines = []
    for r in reports:
        if not r.hypotheses_met:
            lines.append(f"{r.theorem.value}: not applicable: {r.reason}")
        else:
            flag = "  VIOLATED" if r.violated else ""
            lines.append(
                f"{r.theorem.value} case {r.case.case.value}: bound {r.bound}, "
                f"actual {r.actual}, slack {r.slack}{flag}"
            )
    if len(payload) == 1 and args.format == "json":
        payload = payload[0]
    code = EXIT_COUNTEREXAMPLE if any(r.violated for r in reports) else EXIT_OK
    return payload, "\n".join(lines), code


def cmd_reduce(args):
    A = _load_set(args)
    N = normalize(A)
    rep = evaluate(N, Theorem.T2)
    if not rep.hypotheses_met:
        payload = {"p": A.p, "A": A.literal(), "applicable": False, "reason": rep.reason}
        return payload, f"not applicable: {rep.reason}", EXIT_OK
    case = rep.case.case.value
    try:
        if case == "A":
            trace = reduce_case_a(N)
        elif case == "B":
            trace = reduce_case_b(N)
        else:
            trace = reduce_case_c(N, rep.case.s)
    except (PreconditionError, ReductionError) as exc:
        payload = {"p": A.p, "A": A.literal(), "applicable": False, "reason": f"{type(exc).__name__}: {exc}"}
        return payload, f"not applicable: {type(exc).__name__}: {exc}", EXIT_OK
    payload = trace.to_dict()
    payload["case"] = case
    problems = trace.problems()
    payload["problems"] = problems
    lines = [f"case {case}, {trace.j} step(s), terminal {trace.terminal.value} ({trace.shape.value})"]
    for i, s in enumerate(trace.steps):
        lines.append(f"  A_{i} = {{{s.literal()}}}")
    lines.extend(f"  problem: {p}" for p in problems)
    return payload, "\n".join(lines), EXIT_COUNTEREXAMPLE if problems else EXIT_OK


def _report_text(r: SweepReport) -> str:
    lines = [f"p={r.spec['p']} sizes={r.spec['sizes'][0]}..{r.spec['sizes'][1]} sets={r.sets_examined}"]
    lines.append(f"{'check':<10} {'applicable':>10} {'passed':>10} {'failed':>8}")
    for name, c in sorted(r.checks.items()):
        lines.append(f"{name:<10} {c.applicable:>10} {c.passed:>10} {c.failed:>8}")
    if r.counterexamples:
        lines.append("counterexamples (first 10):")
        for c in r.counterexamples[:10]:
            lines.append(f"  {c['check']}: {{{c['set']}}}")
    if r.diagnostics:
        lines.append("diagnostics:")
        lines.extend(f"  {k}: {v}" for k, v in sorted(r.diagnostics.items()))
    if r.note:
        lines.append(f"note: {r.note}")
    lines.append(f"wall time: {r.wall_time:.2f}s")
    return "\n".join(lines)


def _sweep_output(report: SweepReport, fmt: str):
    if fmt == "json":
        return report.to_json()
    if fmt == "csv":
        return report.to_csv()
    return _report_text(report)


def cmd_sweep(args):
    sizes = _parse_sizes(args.sizes) if args.sizes else (2, args.p)
    spec = SweepSpec(
        p=args.p,
        sizes=sizes,
        checks=_parse_checks(args.checks),
        h=args.h,
        shard=_parse_shard(args.shard),
        dedup=args.dedup,
        max_counterexamples=args.max_counterexamples,
    )
    report = sweep(spec, jobs=args.jobs, engine=args.engine, note=args.seed_note)
    code = EXIT_OK if report.ok() else EXIT_COUNTEREXAMPLE
    return None, _sweep_output(report, args.format), code


def cmd_merge(args):
    reports = []
    for path in args.reports:
        with open(path) as fh:
            reports.append(SweepReport.from_json(fh.read()))
    report = merge_all(reports)
    code = EXIT_OK if report.ok() else EXIT_COUNTEREXAMPLE
    return None, _sweep_output(report, args.format), code


COMMANDS = {
    "compute": cmd_compute,
    "normalize": cmd_normalize,
    "classify": cmd_classify,
    "bound": cmd_bound,
    "reduce": cmd_reduce,
    "sweep": cmd_sweep,
    "merge": cmd_merge,
}


def _emit(text: str, out: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on bad flags
    try:
        if args.command not in ("sweep", "merge", "bound", "classify") and args.format == "csv":
            raise UsageError(f"--format csv is not available for {args.command}")
        payload, text, code = COMMANDS[args.command](args)
        if payload is not None:
            text = _render(payload, args.format, text if args.format == "text" else None)
        _emit(text, args.out)
        return code
    except (UsageError, ParseError, NotPrimeError) as exc:
        print(f"zpsum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"not applicable: {exc}")
        return EXIT_OK
    except ValueError as exc:
        # remaining value errors come from bad flag values (t = 0, h < 2, ...)
        print(f"zpsum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - last resort
        print(f"zpsum: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
