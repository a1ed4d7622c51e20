import hashlib
import json
import subprocess
import sys

import pytest

from wainge.cli import main
from wainge.elicitation import Problem
from wainge.store import (
    TeamMember,
    load_session,
    new_session,
    save_session,
    taxonomy_to_doc,
)
from wainge.taxonomy import builtin_taxonomy


def run_cli(*argv):
    return main(list(argv))


# --- taxonomy list -----------------------------------------------------------


def test_taxonomy_list_rows(capsys):
    assert run_cli("taxonomy", "list") == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == builtin_taxonomy().n
    assert out[0].startswith("R01")


def test_taxonomy_list_json(capsys):
    assert run_cli("taxonomy", "list", "--format", "json") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == taxonomy_to_doc(builtin_taxonomy())


# --- compute -------------------------------------------------------------------


def test_compute_fixture_text(ktp_path, capsys):
    assert run_cli("compute", str(ktp_path)) == 0
    out = capsys.readouterr().out
    assert "OSR 0.610526" in out
    assert "MAF -0.033943" in out
    assert "DEC 0.576584 (57.66%)" in out
    assert "AgileRisky" in out


def test_compute_fixture_json_full_precision(ktp_path, capsys):
    assert run_cli("compute", str(ktp_path), "--format", "json") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["osr"] == pytest.approx(0.6105263157894737, abs=0)
    assert doc["recommendation"] == "AgileRisky"
    assert doc["clamped"] is False
    assert doc["config_snapshot"]["log_base"] == 10.0


def test_compute_gate_exit_code(ktp_path, capsys):
    assert run_cli("compute", str(ktp_path), "--gate") == 2
    assert run_cli("compute", str(ktp_path), "--gate", "--threshold", "0.99") == 0


def test_compute_flag_overrides_do_not_touch_file(ktp_path, capsys):
    digest_before = hashlib.sha256(ktp_path.read_bytes()).hexdigest()
    assert run_cli("compute", str(ktp_path), "--log-base", "2.718281828459045") == 0
    assert run_cli("compute", str(ktp_path), "--threshold", "0.99") == 0
    out = capsys.readouterr().out
    assert "AgileViable" in out
    assert hashlib.sha256(ktp_path.read_bytes()).hexdigest() == digest_before
    assert load_session(ktp_path).config.log_base == 10.0


def test_compute_missing_file_exits_one(capsys):
    assert run_cli("compute", "does-not-exist.json") == 1
    assert "error" in capsys.readouterr().err


def test_compute_borderline_status_lines(ktp_path, tmp_path, capsys):
    run_cli("compute", str(ktp_path))
    assert "borderline no" in capsys.readouterr().out
    from wainge.store import WeightOverride

    session = new_session("tied", builtin_taxonomy())
    session.weight_overrides = [
        WeightOverride(f.id, 0.5) for f in session.taxonomy.factors
    ]
    session.ava_override = 0.5
    path = tmp_path / "tied.wainge.json"
    save_session(session, path)
    run_cli("compute", str(path))
    out = capsys.readouterr().out
    assert "DEC 0.500000 (50.00%)" in out
    assert "AgileViable" in out
    assert "borderline yes" in out


def test_compute_is_deterministic(ktp_path, capsys):
    run_cli("compute", str(ktp_path))
    first = capsys.readouterr().out
    run_cli("compute", str(ktp_path))
    assert capsys.readouterr().out == first


# --- sensitivity ----------------------------------------------------------------


def test_sensitivity_json(ktp_path, capsys):
    assert run_cli("sensitivity", str(ktp_path), "--format", "json") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["threshold_ava"] == pytest.approx(0.1844, abs=1e-3)
    for entry in doc["gradient"]:
        assert entry["value"] == pytest.approx(0.057218, abs=1e-6)
    swings = [abs(t["swing"]) for t in doc["tornado"]]
    assert swings == sorted(swings, reverse=True)
    current_dec = 0.5765836157726388
    by_id = {t["factor_id"]: t for t in doc["tornado"]}
    for factor_id in ("R07", "R08", "R10"):
        assert by_id[factor_id]["dec_at_w0"] == pytest.approx(current_dec, abs=1e-12)


def test_sensitivity_text(ktp_path, capsys):
    assert run_cli("sensitivity", str(ktp_path)) == 0
    out = capsys.readouterr().out
    assert "threshold AVA 0.184431" in out
    assert "R01" in out


# --- report ----------------------------------------------------------------------


def test_report_fixture(ktp_path, tmp_path, capsys):
    out_path = tmp_path / "report.md"
    assert run_cli("report", str(ktp_path), "--out", str(out_path)) == 0
    text = out_path.read_text(encoding="utf-8")
    assert "FDD" in text
    assert "Spiral Model" in text
    assert "57.66%" in text
    assert "DEC exceeds 0.5: adopting an Agile method is assessed as overly risky." in text
    assert "| R01 | 0.8 | Override |" in text
    assert "AVA 0.4: session-level override" in text


def test_report_lists_defaulted_factors(tmp_path, capsys):
    session = new_session("bare", builtin_taxonomy())
    session.ava_override = 0.5
    path = tmp_path / "bare.wainge.json"
    save_session(session, path)
    assert run_cli("report", str(path)) == 0
    text = capsys.readouterr().out
    assert "## Defaulted factors" in text
    assert "- R07: no responses; neutral weight 0.5 applied" in text
    assert "not assessed as overly risky" in text


def test_report_unwritable_destination(ktp_path, tmp_path, capsys):
    target = tmp_path / "occupied"
    target.mkdir()
    assert run_cli("report", str(ktp_path), "--out", str(target)) == 1
    assert "error" in capsys.readouterr().err


# --- assess ------------------------------------------------------------------------


@pytest.fixture
def small_session_path(tmp_path):
    session = new_session("assess me", builtin_taxonomy())
    session.problems = [
        Problem("P1", "first problem"),
        Problem("P2", "second problem"),
        Problem("P3", "third problem"),
    ]
    session.team = [TeamMember("m1", "Casey", "facilitator")]
    path = tmp_path / "assess.wainge.json"
    save_session(session, path)
    return path


def feed_answers(monkeypatch, answers):
    feed = iter(answers)
    monkeypatch.setattr("builtins.input", lambda prompt="": next(feed))


def test_assess_records_mean_and_attitude(small_session_path, monkeypatch, capsys):
    # R01's three questions answered 1, 0.5, 0.9; everything else abstained.
    answers = ["1", "0.5", "0.9"] + [""] * (18 * 3) + ["0.4"]
    feed_answers(monkeypatch, answers)
    assert run_cli("assess", str(small_session_path)) == 0
    session = load_session(small_session_path)
    assert session.revision == 1
    assert len(session.responses) == 3
    assert [r.weight for r in session.responses] == [1.0, 0.5, 0.9]
    assert session.attitudes[0].ava == 0.4
    run_cli("compute", str(small_session_path))
    out = capsys.readouterr().out
    assert "warning" in out  # 18 defaulted factors
    from wainge.elicitation import resolve_weights

    vector, _ = resolve_weights(session)
    assert vector.weight_of("R01") == 0.8


def test_assess_reprompts_on_out_of_range(small_session_path, monkeypatch, capsys):
    # first question re-prompts twice, 56 remaining questions and the one
    # attitude prompt are left blank
    answers = ["1.3", "abc", "0.7"] + [""] * 56 + [""]
    feed_answers(monkeypatch, answers)
    assert run_cli("assess", str(small_session_path)) == 0
    out = capsys.readouterr().out
    assert "between 0 and 1" in out
    session = load_session(small_session_path)
    assert [r.weight for r in session.responses] == [0.7]
    assert session.attitudes == []


def test_assess_conflict_aborts(small_session_path, monkeypatch, capsys):
    calls = {"n": 0}
    answers = iter([""] * (19 * 3) + ["0.5"])

    def racing_input(prompt=""):
        calls["n"] += 1
        if calls["n"] == 2:
            # someone else commits while we are mid-assessment
            other = load_session(small_session_path)
            other.title = "racer"
            from wainge.store import apply_commit, save_session as save

            save(apply_commit(load_session(small_session_path), other, 0),
                 small_session_path)
        return next(answers)

    monkeypatch.setattr("builtins.input", racing_input)
    assert run_cli("assess", str(small_session_path)) == 1
    err = capsys.readouterr().err
    assert "reload" in err
    assert load_session(small_session_path).title == "racer"


# --- json round trips ------------------------------------------------------------


def test_compute_json_parses_back_into_result(ktp_path, capsys):
    from wainge.store import result_from_doc

    run_cli("compute", str(ktp_path), "--format", "json")
    doc = json.loads(capsys.readouterr().out)
    result = result_from_doc(doc)
    assert result.dec == doc["dec"]
    assert result.recommendation.value == "AgileRisky"


def test_taxonomy_json_parses_back(capsys):
    from wainge.store import taxonomy_from_doc

    run_cli("taxonomy", "list", "--format", "json")
    taxonomy = taxonomy_from_doc(json.loads(capsys.readouterr().out))
    assert taxonomy == builtin_taxonomy()


# --- plumbing ------------------------------------------------------------------------


def test_usage_error_exits_one():
    with pytest.raises(SystemExit) as excinfo:
        main(["compute"])  # missing path
    assert excinfo.value.code == 1


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "wainge.cli", "taxonomy", "list"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0].startswith("R01")


def test_data_dir_resolution(monkeypatch):
    from wainge.cli import resolve_data_dir

    monkeypatch.delenv("WAINGE_DATA_DIR", raising=False)
    assert resolve_data_dir("explicit") == "explicit"
    assert resolve_data_dir(None) == "./sessions"
    monkeypatch.setenv("WAINGE_DATA_DIR", "/srv/sessions")
    assert resolve_data_dir(None) == "/srv/sessions"
    assert resolve_data_dir("explicit") == "explicit"


def test_serve_subprocess_answers_taxonomy(ktp_path, tmp_path):
    import socket
    import time
    import urllib.request

    with socket.socket() as probe:
        probe.bind(("127.0.0.1", 0))
        port = probe.getsockname()[1]
    data_dir = tmp_path / "serve-data"
    data_dir.mkdir()
    (data_dir / ktp_path.name).write_bytes(ktp_path.read_bytes())
    proc = subprocess.Popen(
        [
            sys.executable, "-m", "wainge.cli", "serve",
            "--port", str(port), "--data-dir", str(data_dir),
        ],
        stdout=subprocess.DEVNULL,
        stderr=subprocess.DEVNULL,
    )
    try:
        doc = None
        for _ in range(60):
            try:
                with urllib.request.urlopen(
                    f"http://127.0.0.1:{port}/taxonomy", timeout=1
                ) as response:
                    doc = json.loads(response.read().decode("utf-8"))
                break
            except OSError:
                time.sleep(0.25)
        assert doc is not None, "service never came up"
        assert len(doc["factors"]) == 19
        with urllib.request.urlopen(
            f"http://127.0.0.1:{port}/sessions/ktp-2593/result", timeout=2
        ) as response:
            result = json.loads(response.read().decode("utf-8"))
        assert result["recommendation"] == "AgileRisky"
        # the port is taken: a second serve must refuse with exit 1
        assert run_cli("serve", "--port", str(port), "--data-dir", str(data_dir)) == 1
    finally:
        proc.terminate()
        proc.wait(timeout=10)
