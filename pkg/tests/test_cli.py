import json
import subprocess
import sys

import pytest

import oracles
from zpsum.cli import main
from zpsum.verify import SweepReport


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_golden_set(capsys):
    code, out, _ = run(capsys, "compute", "--p", "23", "--set", "0-3,12-13")
    assert code == 0
    assert "|2^A| = 10" in out


def test_compute_pair(capsys):
    code, out, _ = run(capsys, "compute", "--p", "7", "--set", "0,1", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["sumset"] == "1" and d["size"] == 1


def test_compute_h_fold_matches_oracle(capsys):
    code, out, _ = run(capsys, "compute", "--p", "13", "--set", "0,1,2,4", "--h", "3", "--format", "json")
    d = json.loads(out)
    want = oracles.hsum({0, 1, 2, 4}, 3, 13)
    assert code == 0 and d["size"] == len(want) == 4
    assert d["sumset"] == "3,5-7"


def test_compute_with_dilation(capsys):
    code, out, _ = run(capsys, "compute", "--p", "23", "--set", "0-3,12-13", "--dilate", "2", "--format", "json")
    d = json.loads(out)
    assert d["A"] == "0-4,6" and d["sumset"] == "1-10"


def test_normalize_example(capsys):
    code, out, _ = run(capsys, "normalize", "--p", "13", "--set", "0,2,4,8", "--format", "json")
    d = json.loads(out)
    assert code == 0 and (d["l"], d["B"]) == (3, [4])


def test_parse_error_names_token(capsys):
    code, _, err = run(capsys, "compute", "--p", "23", "--set", "0-3,1x")
    assert code == 2 and "1x" in err


def test_non_prime_is_usage_error(capsys):
    code, _, err = run(capsys, "compute", "--p", "21", "--set", "0,1")
    assert code == 2


def test_missing_set_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["compute", "--p", "7"])
    assert info.value.code == 2


def test_csv_refused_for_compute(capsys):
    code, _, err = run(capsys, "compute", "--p", "7", "--set", "0,1", "--format", "csv")
    assert code == 2 and "csv" in err


def test_bound_case_a_instance(capsys):
    code, out, _ = run(capsys, "bound", "--p", "23", "--set", "0-3,6", "--theorem", "t2", "--format", "json")
    d = json.loads(out)
    assert code == 0
    assert d["case"] == "A" and d["slack"] >= 0 and d["hypotheses_met"]


def test_bound_violation_exits_3(capsys):
    code, out, _ = run(capsys, "bound", "--p", "17", "--set", "0-3,5-6,13,15", "--theorem", "t2")
    assert code == 3 and "VIOLATED" in out


def test_bound_not_applicable_exits_0(capsys):
    code, out, _ = run(capsys, "bound", "--p", "13", "--set", "0-4", "--theorem", "t4")
    assert code == 0 and "not applicable" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--p", "17", "--set", "0-3,6", "--format", "json")
    d = json.loads(out)
    assert d["cases"]["T2"]["case"] == "A"
    assert set(d["checks"]) >= {"EH", "T1", "T2"}
    assert code == 0


def test_reduce_trace(capsys):
    code, out, _ = run(capsys, "reduce", "--p", "23", "--set", "0-3,6-8,11", "--format", "json")
    d = json.loads(out)
    assert code == 0
    assert d["steps"] == ["0-3,6-8,11", "0-4,6-8"] and d["problems"] == []


def test_reduce_not_applicable(capsys):
    code, out, _ = run(capsys, "reduce", "--p", "13", "--set", "0-4")
    assert code == 0 and out.startswith("not applicable")


def test_sweep_clean_exit_0(capsys, tmp_path):
    path = tmp_path / "eh.json"
    code, out, _ = run(capsys, "sweep", "--p", "11", "--checks", "eh,t1", "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    r = SweepReport.from_json(path.read_text())
    assert r.ok() and r.sets_examined == 2 ** 11 - 12


def test_sweep_counterexample_exit_3(capsys):
    code, out, _ = run(capsys, "sweep", "--p", "11", "--sizes", "4..9", "--checks", "t3")
    assert code == 3 and "T3" in out


def test_sweep_bad_flags(capsys):
    assert run(capsys, "sweep", "--p", "11", "--sizes", "9..4")[0] == 2
    assert run(capsys, "sweep", "--p", "11", "--checks", "t9")[0] == 2
    assert run(capsys, "sweep", "--p", "11", "--shard", "3/2")[0] == 2


def test_sweep_csv(capsys):
    code, out, _ = run(capsys, "sweep", "--p", "7", "--checks", "class_2m1", "--format", "csv")
    assert out.splitlines()[0].startswith("kind,check")


def test_shard_files_merge(capsys, tmp_path):
    paths = []
    for i in range(3):
        path = tmp_path / f"s{i}.json"
        run(capsys, "sweep", "--p", "11", "--checks", "eh,t4", "--shard", f"{i}/3", "--format", "json",
            "--out", str(path), "--seed-note", "shard")
        paths.append(str(path))
    code, out, _ = run(capsys, "merge", *paths)
    merged = SweepReport.from_json(out)
    _, full_out, _ = run(capsys, "sweep", "--p", "11", "--checks", "eh,t4", "--format", "json", "--seed-note", "shard")
    full = SweepReport.from_json(full_out)
    assert merged == full
    assert merged.note == "shard"


def test_json_output_round_trips(capsys):
    _, out, _ = run(capsys, "sweep", "--p", "7", "--format", "json")
    assert SweepReport.from_json(out).to_json() == out.rstrip("\n")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zpsum", "compute", "--p", "7", "--set", "0,1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "{1}" in proc.stdout
