"""Report values, the report file format, and sweep configuration."""

import pytest

from quiverdias.families import n_support
from quiverdias.reports import (
    Report,
    ReportFile,
    Witness,
    compare_supports,
    read_report_file,
    render_report_file,
    write_report_file,
)
from quiverdias.sweeps import SweepConfig, build_tasks, run_sweep, run_task


def test_report_requires_consistent_pass_flag():
    with pytest.raises(AssertionError):
        Report("x", {}, True, 1, 1, [Witness("c", (1,))], 0.0)
    with pytest.raises(AssertionError):
        Report("x", {}, False, 1, 1, [], 0.0)


def test_compare_supports_tags_sides():
    from quiverdias.supports import Axis, Shape, make_support

    shape = Shape((Axis(3),))
    a = make_support(shape, [(1,), (2,)])
    b = make_support(shape, [(2,), (3,)])
    ws = compare_supports("sides", a, b)
    assert [(w.where, w.detail) for w in ws] == [((1,), "left only"), ((3,), "right only")]
    assert all(w.check == "sides" for w in ws)


def test_compare_supports_shape_mismatch_is_single_witness():
    ws = compare_supports("sides", n_support(2), n_support(3))
    assert len(ws) == 1 and "shape mismatch" in ws[0].detail


def test_report_file_counts(tmp_path):
    config = SweepConfig(suite="anticyclic", max_m=2)
    rf = run_sweep(config)
    assert rf.total == len(rf.reports)
    assert rf.passed + rf.failed == rf.total
    assert rf.all_passed
    path = write_report_file(rf, tmp_path / "r.jsonl")
    records = read_report_file(path)
    assert records[0]["record"] == "header"
    assert records[0]["version"] == rf.version
    assert records[-1] == {
        "record": "summary",
        "total": rf.total,
        "passed": rf.passed,
        "failed": rf.failed,
    }


def test_render_report_file_has_no_timing_fields():
    rf = run_sweep(SweepConfig(suite="anticyclic", max_m=2))
    text = render_report_file(rf)
    assert "elapsed" not in text
    assert rf.total_elapsed_s > 0  # kept in memory only


def test_sweep_config_validation():
    with pytest.raises(ValueError, match="suite"):
        SweepConfig(suite="everything")
    with pytest.raises(ValueError, match="positive"):
        SweepConfig(max_m=0)
    with pytest.raises(ValueError, match="oracle max"):
        SweepConfig(suite="oracle", max_m=2, oracle_max=4)
    with pytest.raises(ValueError, match="workers"):
        SweepConfig(workers=0)
    with pytest.raises(ValueError, match="prime"):
        SweepConfig(prime=9)


def test_sweep_bounds_defaults():
    cfg = SweepConfig(max_m=5, max_n=2)
    assert cfg.bounds == (5, 2, 5)
    assert cfg.effective_oracle_max == 2
    # execution details stay out of the persisted config echo
    assert "workers" not in cfg.echo()
    assert "out_dir" not in cfg.echo()


def test_tasks_cover_requested_suites():
    names = {t[0] for t in build_tasks(SweepConfig(suite="all", max_m=2))}
    assert {"commutativity", "associativity", "duality", "dias_axioms"} <= names
    assert {"border", "inner", "border_k0", "inner_k0", "tau_order"} <= names
    assert {"oracle_commutativity", "oracle_unit"} <= names


def test_run_task_dispatch():
    r = run_task(("border", {"m": 2, "n": 2}))
    assert r.verifier == "border" and r.passed
    r = run_task(("oracle_unit", {"m": 2, "n": 1, "i": 1, "field": "prime", "q": 32003}))
    assert r.verifier == "oracle_unit" and r.passed
    with pytest.raises(ValueError, match="unknown verifier"):
        run_task(("frobnicate", {}))


def test_oracle_tasks_run_both_fields():
    tasks = build_tasks(SweepConfig(suite="oracle", max_m=2))
    fields = {t[1]["field"] for t in tasks}
    assert fields == {"prime", "rational"}
