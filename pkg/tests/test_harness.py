import json

import pytest

from cherednik.fields import InvalidInput
from cherednik.harness import ExperimentSpec, ResultRecord, ResultStore, sweep, verify
from cherednik.harness.cli import main


def test_record_hash_ignores_timings():
    a = verify("T3.2", n=2, p=5)
    b = verify("T3.2", n=2, p=5)
    assert a.hash == b.hash
    b.timings = {"total": 123.0}
    assert a.hash == b.hash
    assert ResultRecord.from_json(a.to_json()).hash == a.hash


def test_tampered_record_is_rejected():
    d = json.loads(verify("T3.1", n=2, p=2).to_json())
    d["outputs"]["expected"] = [9]
    with pytest.raises(ValueError):
        ResultRecord.from_dict(d)


def test_hypotheses_are_checked():
    with pytest.raises(InvalidInput):
        verify("T4.2", m=8, p=2, a=3)
    with pytest.raises(InvalidInput):
        verify("T4.2", m=7, p=2, a=2)
    with pytest.raises(InvalidInput):
        verify("T3.2", n=5, p=5)
    with pytest.raises(InvalidInput):
        verify("T3.4", p=7, c=0)
    with pytest.raises(InvalidInput):
        verify("T3.1", n=2, p=2, bogus=1)
    with pytest.raises(InvalidInput):
        verify("X9.9")


def test_theorem_checks_pass():
    assert verify("T5.1", n=2).status == "PASS"
    assert verify("T4.2", m=7, p=2, a=3).status == "PASS"
    rec = verify("T4.4", m=7, p=2)
    assert rec.status == "PASS" and len(rec.checks) == 5


def test_conjecture_checks_are_evidence():
    rec = verify("C3.7", p=5)
    assert rec.status == "EVIDENCE"
    assert all(row["palindromic"] for row in rec.outputs["table"])
    rec = verify("T3.4", p=7, c=5)      # third range: reported, not asserted
    assert rec.status == "EVIDENCE"
    assert rec.outputs["min_generator_degrees"] == [1, 1, 7]


def _spec(**kw):
    base = {"group": "Sn:3", "p": 7, "c": [1, 2, 3, 4, 5, 6], "maxDegree": 60,
            "tasks": ["hilbert", "min-gens"]}
    base.update(kw)
    return base


def test_sweep_records_and_determinism(tmp_path):
    store = ResultStore(tmp_path / "a")
    recs = sweep(_spec(), store=store)
    assert len(recs) == 6
    assert len(list((tmp_path / "a").glob("*.json"))) == 6
    again = sweep(_spec(), workers=2, store=ResultStore(tmp_path / "b"))
    assert [r.hash for r in recs] == [r.hash for r in again]
    assert recs[2].outputs["min_generator_degrees"]["degrees"] == [2, 2, 7]


def test_sweep_resumes_from_store(tmp_path, monkeypatch):
    store = ResultStore(tmp_path)
    first = sweep(_spec(c=[1, 2]), store=store)
    import cherednik.harness.experiments as sw
    monkeypatch.setattr(sw, "run_point", lambda pt: (_ for _ in ()).throw(AssertionError("recomputed")))
    assert [r.hash for r in sweep(_spec(c=[1, 2]), store=store)] == [r.hash for r in first]


def test_incomplete_points_are_flagged():
    recs = sweep(_spec(c=[1], maxDegree=10))
    assert recs[0].outputs["hilbert"]["complete"] is False
    assert recs[0].outputs["min_generator_degrees"]["complete"] is False


def test_spec_validation():
    with pytest.raises(InvalidInput):
        ExperimentSpec.from_dict(_spec(tasks=["recursion"], a=[1, 2, 0]))     # 7 does not divide 3
    with pytest.raises(InvalidInput):
        ExperimentSpec.from_dict(_spec(tasks=["nope"]))
    with pytest.raises(InvalidInput):
        ExperimentSpec.from_dict(_spec(tau="rho:1"))
    assert len(ExperimentSpec.from_dict(_spec(c="sweep")).points()) == 7


def test_store_is_append_only(tmp_path):
    store = ResultStore(tmp_path)
    rec = verify("T3.1", n=2, p=3)
    path = store.save(rec)
    before = path.read_text()
    rec.timings = {"other": 1.0}
    assert store.save(rec) == path
    assert path.read_text() == before
    assert store.load(rec.hash).hash == rec.hash
    assert store.find(rec.task, rec.params).hash == rec.hash


def test_cli_commands(tmp_path, capsys):
    st = str(tmp_path)
    assert main(["--store", st, "hilbert", "--group", "Sn:3", "--p", "5", "--c", "2", "--max-degree", "20"]) == 0
    assert "[1, 1, 1, 1, 1]" in capsys.readouterr().out
    assert main(["--store", st, "singular-scan", "--group", "Dm:7", "--p", "2", "--tau", "rho:3",
                 "--degree", "2"]) == 0
    assert "     2    4" in capsys.readouterr().out
    assert main(["--no-store", "verify", "T5.1", "--n", "4", "--p", "2"]) == 0
    assert main(["--no-store", "recursion", "--p", "3", "--n", "3", "--a", "1,-1,0",
                 "--policy", "heuristic", "--steps", "6"]) == 0
    assert "terminated at m = 2" in capsys.readouterr().out
    assert main(["--no-store", "verify", "T4.2", "--m", "7", "--p", "2", "--a", "2"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["hilbert"])
    assert exc.value.code == 2


def test_cli_sweep_failure_exit_code(tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"group": "Sn:3", "p": 5, "c": 0, "tasks": ["verify:T4.2"],
                                "verifyParams": {"m": 8, "p": 2, "a": 3}}))
    assert main(["--store", str(tmp_path / "res"), "sweep", "--spec", str(spec)]) == 1
    spec.write_text(json.dumps({"group": "Sn:3", "p": 5, "c": [0, 1], "tasks": ["hilbert"]}))
    assert main(["--store", str(tmp_path / "res"), "sweep", "--spec", str(spec), "--workers", "2"]) == 0
