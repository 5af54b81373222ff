"""Command line surface: support rendering, verify sweeps, roundtrip."""

import json
import subprocess
import sys

import pytest

from quiverdias.cli import main
from quiverdias.families import n_support, s_support
from quiverdias.render import render_ascii, render_svg
from quiverdias.reports import read_report_file
from quiverdias.serialize import dumps_support, loads_support

# --- support ------------------------------------------------------------------


def test_support_ascii_triangle(capsys):
    assert main(["support", "--family", "n", "--n", "6", "--format", "ascii"]) == 0
    out = capsys.readouterr().out
    assert out.count("#") == 21
    rows = out.splitlines()[1:]
    assert len(rows) == 6
    # lower-triangular staircase
    assert [row.count("#") for row in rows] == [1, 2, 3, 4, 5, 6]


def test_support_ascii_slices(capsys):
    assert main(["support", "--family", "s", "--m", "6", "--i", "3", "--n", "4",
                 "--format", "ascii"]) == 0
    out = capsys.readouterr().out
    assert out.count("#") == 126
    assert sum(line.startswith("slice ") for line in out.splitlines()) == 4


def test_support_text_roundtrips_through_library(capsys):
    assert main(["support", "--family", "s", "--m", "2", "--i", "1", "--n", "2"]) == 0
    out = capsys.readouterr().out
    assert loads_support(out) == s_support(2, 1, 2)


def test_support_interval_families(capsys):
    assert main(["support", "--family", "projective", "--n", "5", "--j", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["points"] == [[2], [3], [4], [5]]


def test_support_bad_parameters_exit_2(capsys):
    assert main(["support", "--family", "s", "--m", "0", "--i", "1", "--n", "1"]) == 2
    assert "1 <= i <= m" in capsys.readouterr().err


def test_support_missing_parameter_exit_2(capsys):
    assert main(["support", "--family", "s", "--m", "2", "--n", "2"]) == 2
    assert "--i" in capsys.readouterr().err


def test_support_svg(capsys):
    assert main(["support", "--family", "n", "--n", "6", "--format", "svg"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("<svg")
    assert out.count('class="cell"') == 21


def test_support_out_file(tmp_path):
    target = tmp_path / "s.svg"
    assert main(["support", "--family", "s", "--m", "6", "--i", "3", "--n", "4",
                 "--format", "svg", "--out", str(target)]) == 0
    assert target.read_text().count('class="cell"') == 126


def test_render_rejects_higher_arity():
    from quiverdias.families import reference_commutativity_set

    quad = reference_commutativity_set(2, 1, 1, 1, 2)
    with pytest.raises(ValueError):
        render_ascii(quad)
    with pytest.raises(ValueError):
        render_svg(quad)


# --- verify ---------------------------------------------------------------------


def test_verify_cooperad_exit_0(tmp_path, capsys):
    assert main(["verify", "--suite", "cooperad", "--max", "2", "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "all passed" in out
    records = read_report_file(tmp_path / "verify-cooperad.jsonl")
    assert records[0]["record"] == "header"
    assert records[-1]["record"] == "summary"
    assert records[-1]["failed"] == 0
    assert records[-1]["total"] == len(records) - 2


def test_verify_summary_counts_match_reports(tmp_path):
    main(["verify", "--suite", "anticyclic", "--max", "3", "--out", str(tmp_path)])
    records = read_report_file(tmp_path / "verify-anticyclic.jsonl")
    reports = [r for r in records if r["record"] == "report"]
    summary = records[-1]
    assert summary["passed"] == sum(r["passed"] for r in reports)
    assert summary["total"] == len(reports)


def test_verify_deterministic_across_workers(tmp_path):
    d1, d2 = tmp_path / "w1", tmp_path / "w2"
    assert main(["verify", "--suite", "cooperad", "--max", "2", "--out", str(d1)]) == 0
    assert main(["verify", "--suite", "cooperad", "--max", "2", "--workers", "2",
                 "--out", str(d2)]) == 0
    assert (d1 / "verify-cooperad.jsonl").read_bytes() == (d2 / "verify-cooperad.jsonl").read_bytes()


def test_verify_deterministic_across_runs(tmp_path):
    d1, d2 = tmp_path / "r1", tmp_path / "r2"
    main(["verify", "--suite", "oracle", "--max", "2", "--out", str(d1)])
    main(["verify", "--suite", "oracle", "--max", "2", "--out", str(d2)])
    assert (d1 / "verify-oracle.jsonl").read_bytes() == (d2 / "verify-oracle.jsonl").read_bytes()


def test_verify_env_var_out_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("QUIVERDIAS_OUT", str(tmp_path))
    assert main(["verify", "--suite", "anticyclic", "--max", "2"]) == 0
    capsys.readouterr()
    assert (tmp_path / "verify-anticyclic.jsonl").exists()


def test_verify_failed_identity_exit_1(tmp_path, capsys, monkeypatch):
    import quiverdias.sweeps as sweeps
    from quiverdias.reports import Report, Witness

    def broken(m, n):
        return Report("border", {"m": m, "n": n}, False, 1, 1,
                      [Witness("right_vs_left", (1, 1, 1), "left only")], 0.0)

    monkeypatch.setitem(sweeps._VERIFIERS, "border", broken)
    assert main(["verify", "--suite", "anticyclic", "--max", "1", "--out", str(tmp_path)]) == 1
    out = capsys.readouterr().out
    assert "FAILED" in out and "FAIL border" in out
    records = read_report_file(tmp_path / "verify-anticyclic.jsonl")
    failing = [r for r in records if r["record"] == "report" and not r["passed"]]
    assert failing and failing[0]["witnesses"][0]["where"] == [1, 1, 1]


def test_verify_config_error_exit_2(capsys):
    assert main(["verify", "--suite", "oracle", "--max", "2", "--oracle-max", "5"]) == 2
    assert "oracle max" in capsys.readouterr().err
    assert main(["verify", "--max", "0"]) == 2
    assert main(["verify", "--field", "prime", "--prime", "10", "--max", "2"]) == 2


# --- roundtrip -------------------------------------------------------------------


def test_roundtrip_canonical_is_identity(tmp_path, capsys):
    path = tmp_path / "n3.json"
    text = dumps_support(n_support(3))
    path.write_text(text)
    assert main(["roundtrip", str(path)]) == 0
    assert capsys.readouterr().out == text


def test_roundtrip_canonicalizes_shuffled_points(tmp_path, capsys):
    doc = {
        "axes": [{"len": 3, "polarity": "op"}, {"len": 3, "polarity": "plain"}],
        "points": [[3, 1], [1, 1], [2, 1], [3, 1]],
    }
    path = tmp_path / "shuffled.json"
    path.write_text(json.dumps(doc))
    assert main(["roundtrip", str(path)]) == 0
    out = capsys.readouterr().out
    assert json.loads(out)["points"] == [[1, 1], [2, 1], [3, 1]]


def test_roundtrip_corrupt_field_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"axes": [{"len": 0, "polarity": "plain"}], "points": []}')
    assert main(["roundtrip", str(path)]) == 2
    assert "axes[0].len" in capsys.readouterr().err


def test_roundtrip_parse_error_has_location(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"axes": [\n  {]}\n')
    assert main(["roundtrip", str(path)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_roundtrip_missing_file_exit_2(tmp_path):
    assert main(["roundtrip", str(tmp_path / "missing.json")]) == 2


# --- console entry point -----------------------------------------------------------


def test_installed_module_invocation():
    proc = subprocess.run(
        [sys.executable, "-m", "quiverdias.cli", "support", "--family", "n", "--n", "2",
         "--format", "ascii"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.count("#") == 3
