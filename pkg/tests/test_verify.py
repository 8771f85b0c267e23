import csv
import io
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from zpsum.verify import CHECKS, SweepReport, SweepSpec, _run_range, check_one, merge_all, sweep
from zpsum.zp_core import ZpSet


def strip(report):
    d = report.to_dict()
    d.pop("wall_time")
    d.pop("note")
    return d


# -- SweepSpec validation--------------------------------------------------------------


def test_spec_validation():
    with pytest.raises(ValueError):
        SweepSpec(7, sizes=(1, 3))
    with pytest.raises(ValueError):
        SweepSpec(7, sizes=(3, 8))
    with pytest.raises(ValueError):
        SweepSpec(7, checks={"NOPE"})
    with pytest.raises(ValueError):
        SweepSpec(7, shard=(4, 4))
    assert SweepSpec(7).sizes == (2, 7)
    assert SweepSpec(7, checks={"eh"}).checks == {"EH"}


def test_shard_ranges_partition_the_masks():
    p, n = 11, 5
    ranges = [SweepSpec(p, shard=(i, n)).mask_range() for i in range(n)]
    assert ranges[0][0] == 0 and ranges[-1][1] == 1 << p
    assert all(a[1] == b[0] for a, b in zip(ranges, ranges[1:]))


# -- single sets -----------------------------------------------------------------------


def test_check_one_interval_is_karolyi_equality():
    v = check_one(ZpSet.interval(13, 0, 4), {"T1"})["T1"]
    assert v.applicable and v.passed
    assert v.details == {"actual": 7, "is_ap": True, "equality": True}


def test_check_one_non_ap_misses_equality():
    A = ZpSet.from_iterable(13, [0, 1, 2, 4])
    out = check_one(A, {"EH", "T1"})
    assert out["EH"].details["actual"] == 6 == len(oracles.rsum(set(A), 13))
    # |A| = 4 is below the range where the characterization is stated
    assert not out["T1"].applicable
    B = ZpSet.from_iterable(13, [0, 1, 2, 3, 5])
    v = check_one(B, {"T1"})["T1"]
    assert v.passed and v.details["is_ap"] is False and v.details["equality"] is False


def test_check_one_tiny_set():
    v = check_one(ZpSet.from_iterable(5, [0, 1]), {"EH"})["EH"]
    assert v.passed and v.details == {"bound": 1, "actual": 1}


def test_check_one_reports_every_requested_check():
    out = check_one(ZpSet.parse(23, "0-3,12-13"))
    assert set(out) == set(CHECKS)
    assert out["CLASS_2M1"].passed


# -- small sweeps -----------------------------------------------------------------------


def test_eh_mod_7_covers_all_subsets():
    r = sweep(SweepSpec(7, sizes=(2, 7), checks={"EH"}))
    assert r.sets_examined == 120
    assert r.checks["EH"].applicable == 120 and r.ok()
    assert r.counterexamples == []


def test_eh_sweep_agrees_with_oracle_counts():
    p = 7
    fails = sum(
        1 for c in oracles.all_subsets(p, 2, p) if len(oracles.rsum(set(c), p)) < min(p, 2 * len(c) - 3)
    )
    assert fails == 0


def test_t1_counts_ap_sets_mod_13():
    r = sweep(SweepSpec(13, sizes=(5, 5), checks={"T1"}))
    assert r.ok()
    n_ap = sum(1 for c in oracles.all_subsets(13, 5, 5) if oracles.is_ap(set(c), 13))
    assert r.diagnostics["T1_ap_sets"] == n_ap


def test_class_table_contains_golden_set():
    p = 23
    A = ZpSet.parse(p, "0-3,12-13")
    lo = A.mask
    spec = SweepSpec(p, sizes=(6, 6), checks={"CLASS_2M1"})
    r = _run_range((spec, lo, lo + 1, "python"))
    assert r.classes[(6, -2)] == [1, A.mask]
    assert r.ok()


@pytest.mark.parametrize("checks", [{"EH", "DSH", "T1", "CLASS_2M1"}, {"T2", "T3", "T4", "TRACES", "CERTS"}])
def test_engines_agree(checks):
    spec = SweepSpec(11, sizes=(2, 11), checks=checks)
    a = sweep(spec, engine="python")
    b = sweep(spec, engine="numpy")
    assert strip(a) == strip(b)


def test_engines_agree_with_dedup():
    spec = SweepSpec(11, sizes=(4, 8), checks={"EH", "T2", "T4"}, dedup=True)
    a = sweep(spec, engine="python")
    b = sweep(spec, engine="numpy")
    assert strip(a) == strip(b)
    assert a.sets_examined < sweep(SweepSpec(11, sizes=(4, 8), checks={"EH"})).sets_examined


def test_determinism():
    spec = SweepSpec(13, sizes=(4, 7), checks={"EH", "T2", "T3"})
    assert strip(sweep(spec)) == strip(sweep(spec))


def test_shards_merge_to_unsharded():
    full = sweep(SweepSpec(11, checks={"EH", "T1", "T4", "CLASS_2M1"}))
    parts = [sweep(SweepSpec(11, checks={"EH", "T1", "T4", "CLASS_2M1"}, shard=(i, 3))) for i in range(3)]
    assert strip(merge_all(parts)) == strip(full)


@settings(max_examples=15, deadline=None)
@given(st.permutations(range(4)))
def test_merge_is_order_independent(order):
    parts = [_parts()[i] for i in order]
    assert strip(merge_all(parts)) == strip(merge_all(_parts()))


_cache = {}


def _parts():
    if "p" not in _cache:
        _cache["p"] = [
            sweep(SweepSpec(11, sizes=(4, 9), checks={"T3", "CLASS_2M1"}, shard=(i, 4), max_counterexamples=3))
            for i in range(4)
        ]
    return _cache["p"]


def test_counterexample_cap_keeps_lowest_masks():
    spec = SweepSpec(13, sizes=(4, 8), checks={"T3"}, max_counterexamples=2)
    r = sweep(spec)
    assert r.checks["T3"].failed > 2
    assert len(r.counterexamples) == 2
    big = sweep(SweepSpec(13, sizes=(4, 8), checks={"T3"}, max_counterexamples=1000))
    assert [c["mask"] for c in r.counterexamples] == [c["mask"] for c in big.counterexamples][:2]


def test_merge_rejects_different_specs():
    a = sweep(SweepSpec(7, checks={"EH"}))
    b = sweep(SweepSpec(7, checks={"T1"}))
    with pytest.raises(ValueError):
        a.merge(b)
    with pytest.raises(ValueError):
        merge_all([])


def test_parallel_jobs_match_serial():
    spec = SweepSpec(19, sizes=(2, 5), checks={"EH"})
    assert strip(sweep(spec, jobs=2)) == strip(sweep(spec, jobs=1))


# -- serialization ----------------------------------------------------------------------


def test_json_round_trip():
    r = sweep(SweepSpec(11, sizes=(4, 9), checks={"T3", "CLASS_2M1"}), note="round trip")
    text = r.to_json()
    back = SweepReport.from_json(text)
    assert back == r
    assert back.to_json() == text
    assert json.loads(text)["schema"] == "v1"
    with pytest.raises(ValueError):
        SweepReport.from_dict({**json.loads(text), "schema": "v0"})


def test_counterexamples_empty_iff_ok():
    good = sweep(SweepSpec(11, checks={"EH"}))
    bad = sweep(SweepSpec(11, sizes=(4, 9), checks={"T3"}))
    assert good.ok() and not good.counterexamples
    assert not bad.ok() and bad.counterexamples


def test_csv_rows():
    r = sweep(SweepSpec(11, sizes=(4, 9), checks={"T3", "CLASS_2M1"}))
    rows = list(csv.DictReader(io.StringIO(r.to_csv())))
    kinds = {row["kind"] for row in rows}
    assert kinds == {"check", "counterexample", "class"}
    n_class = sum(1 for row in rows if row["kind"] == "class")
    assert n_class == len(r.classes)
    assert sum(1 for row in rows if row["kind"] == "counterexample") == len(r.counterexamples)
