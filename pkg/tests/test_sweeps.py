import json

import jsonschema
import pytest

from schurpos import sweeps
from schurpos.algebra import schur
from schurpos.errors import BadInputError, BoundExceededError
from schurpos.partitions import Partition
from schurpos.sweeps import (
    RunConfig,
    cmd_verify_fflp,
    cmd_verify_mtilde,
    cmd_verify_skew,
    cmd_verify_stembridge,
    cmd_verify_support,
    partition_pairs,
    run_sweep,
    stembridge_predicate,
    validate_report,
)


def test_run_config_validation():
    RunConfig()
    with pytest.raises(BadInputError):
        RunConfig(max_total_size=-1)
    with pytest.raises(BadInputError):
        RunConfig(worker_count=0)
    with pytest.raises(BadInputError):
        RunConfig(output_format="yaml")


def test_fflp_examples():
    r = cmd_verify_fflp(0)
    assert r.ok and r.items == 1 and r.checked == 0
    r = cmd_verify_fflp(2)
    assert r.ok and r.checked == 1
    r = cmd_verify_fflp(10)
    assert r.ok and r.checked > 0
    validate_report(r.to_dict())


def test_pairs_are_unordered_and_graded():
    pairs = partition_pairs(6)
    assert len(pairs) == len({frozenset(p) if p[0] != p[1] else (p[0],) for p in pairs})
    sizes = [a.size + b.size for a, b in pairs]
    assert sizes == sorted(sizes)


def test_skew_examples():
    assert cmd_verify_skew(6, minimal_only=True).ok
    assert cmd_verify_skew(4, minimal_only=False).ok
    r = cmd_verify_skew(0)
    assert r.ok and r.checked == 0


def test_mtilde_examples():
    assert cmd_verify_mtilde(6, 3).ok
    two = cmd_verify_mtilde(8, 2).to_dict()
    fflp = cmd_verify_fflp(8).to_dict()
    assert (two["items"], two["checked"], two["skipped"]) == (fflp["items"], fflp["checked"], fflp["skipped"])
    # an all-equal tuple deals to itself
    assert sweeps.check_mtilde((Partition((2, 1)),) * 3) == "skip"
    with pytest.raises(BadInputError):
        cmd_verify_mtilde(4, 1)


def test_stembridge_examples():
    assert not stembridge_predicate((2, 1), (2, 1))
    assert sweeps.check_stembridge((Partition((2, 1)), Partition((2, 1)))) is None
    assert stembridge_predicate((2, 2), (2,))
    assert stembridge_predicate((3, 3), (4, 4, 1))
    assert stembridge_predicate((3, 1), ())
    assert cmd_verify_stembridge(12).ok


def test_support_containment():
    assert cmd_verify_support(10).ok


def test_bound_limit():
    with pytest.raises(BoundExceededError):
        cmd_verify_fflp(10_000)


def test_worker_count_does_not_change_report():
    one = run_sweep("fflp", RunConfig(max_total_size=9, checkpoint_every=50)).to_dict()
    two = run_sweep("fflp", RunConfig(max_total_size=9, worker_count=2, checkpoint_every=37)).to_dict()
    assert one == two


def test_counterexample_report_has_full_expansion(monkeypatch):
    bad = schur((2,)) - schur((1, 1))
    detail = sweeps._difference_detail(schur((2,)), schur((1, 1)))
    assert detail["difference"] == str(bad)
    assert detail["negative"] == [[[1, 1], -1]]

    def always_fails(item):
        return sweeps._difference_detail(schur((2,)), schur((1, 1)))

    monkeypatch.setitem(sweeps.COMMANDS, "fflp", (always_fails, sweeps.COMMANDS["fflp"][1]))
    r = run_sweep("fflp", RunConfig(max_total_size=2))
    doc = r.to_dict()
    assert not r.ok and len(doc["findings"]) == 5
    assert [f["index"] for f in doc["findings"]] == list(range(5))
    validate_report(doc)


def test_schema_rejects_bad_reports():
    doc = cmd_verify_fflp(3).to_dict()
    doc["checked"] = -1
    with pytest.raises(jsonschema.ValidationError):
        validate_report(doc)


def test_checkpoint_resume(tmp_path):
    full = run_sweep("fflp", RunConfig(max_total_size=8)).to_dict()
    ck = tmp_path / "ck.json"
    items = partition_pairs(8)
    checked, skipped, findings = sweeps._run_chunk(("fflp", 0, items[:100]))
    ck.write_text(json.dumps({
        "command": "fflp", "bound": 8, "last_completed_index": 99,
        "partial": {"checked": checked, "skipped": skipped, "findings": findings},
    }))
    resumed = run_sweep("fflp", RunConfig(max_total_size=8, checkpoint=ck, checkpoint_every=64)).to_dict()
    assert resumed["resumed_from"] == 100
    resumed["resumed_from"] = None
    assert resumed == full
    doc = json.loads(ck.read_text())
    assert doc["command"] == "fflp" and doc["bound"] == 8
    assert doc["last_completed_index"] == len(items) - 1


def test_checkpoint_from_other_run_is_rejected(tmp_path):
    ck = tmp_path / "ck.json"
    ck.write_text(json.dumps({"command": "skew", "bound": 8, "last_completed_index": 3}))
    with pytest.raises(BadInputError):
        run_sweep("fflp", RunConfig(max_total_size=8, checkpoint=ck))
