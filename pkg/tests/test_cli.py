import json
from pathlib import Path

import pytest

from defshadow.cli import main
from defshadow.reporting import Report, CheckResult, emit_report, input_digest
from defshadow.suites import TargetError, resolve_target, run_suite

DATA = Path(__file__).resolve().parents[1] / "src" / "defshadow" / "data"


def test_resolve_fixture_and_document():
    assert resolve_target("example-so41").name == "example-so41"
    fix = resolve_target(str(DATA / "dfr-limit.alg"))
    assert fix.name == "dfr-limit"
    with pytest.raises(TargetError):
        resolve_target("missing-thing")


def test_run_suite_validate_passes():
    report = run_suite("dfr-limit", "validate")
    assert report.status == "pass" and report.exit_code == 0
    assert {c.check_id for c in report.checks} == {
        "validate/involution-table",
        "validate/associativity-generators",
        "validate/associativity-random",
    }


def test_run_suite_rejects_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("dfr-limit", "everything")


def test_negative_control_documents_fail_their_suites():
    cases = [
        ("non-jacobi.alg", "validate", "validate/associativity-generators"),
        ("corrupted-tau.alg", "crossed", "tau/automorphism"),
        ("truncated-gamma.alg", "crossed", "gamma/group-cocycle"),
    ]
    for doc, suite, check_id in cases:
        report = run_suite(str(DATA / doc), suite)
        assert report.status == "fail", doc
        failing = {c.check_id: c for c in report.checks if c.status == "fail"}
        assert check_id in failing, (doc, sorted(failing))
        assert failing[check_id].residual or failing[check_id].detail


def test_not_applicable_does_not_fail():
    report = run_suite("dfr-limit", "crossed")
    statuses = {c.check_id: c.status for c in report.checks}
    assert statuses["lambda/relations"] == "not-applicable"
    assert report.status == "pass"


def test_json_reports_are_byte_identical(tmp_path):
    a = run_suite("dfr-limit", "deformation").to_json()
    b = run_suite("dfr-limit", "deformation").to_json()
    assert a == b
    doc = json.loads(a)
    assert list(doc) == ["suite", "target", "engine_version", "input_digest", "status", "checks"]
    assert doc["status"] == "pass"
    assert all(c["elapsed_ms"] is None for c in doc["checks"])


def test_digest_depends_on_inputs():
    d1 = input_digest("0.1.0", "t", "validate", 0, 3)
    assert d1 == input_digest("0.1.0", "t", "validate", 0, 3)
    assert d1 != input_digest("0.1.0", "t", "validate", 1, 3)
    assert d1 != input_digest("0.1.0", "u", "validate", 0, 3)


def test_emit_report_to_file(tmp_path):
    report = Report(
        suite="validate",
        target="t",
        engine_version="0.1.0",
        input_digest="d",
        checks=[CheckResult.passed("a/b"), CheckResult.failed("c/d", "r", "oops")],
    )
    out = tmp_path / "report.json"
    emit_report(report, "json", str(out))
    loaded = json.loads(out.read_text())
    assert loaded["status"] == "fail"
    text = emit_report(report, "text")
    assert "[FAIL] c/d" in text and "residual: r" in text
    with pytest.raises(ValueError):
        emit_report(report, "yaml")


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["run", "--target", "dfr-limit", "--suite", "validate"]) == 0
    capsys.readouterr()
    assert main(["run", "--target", str(DATA / "non-jacobi.alg"), "--suite", "validate"]) == 1
    capsys.readouterr()
    assert main(["run", "--target", "missing", "--suite", "validate"]) == 2
    err = capsys.readouterr().err
    assert "defshadow:" in err
    with pytest.raises(SystemExit) as exc:
        main(["run", "--target", "dfr-limit", "--suite", "bogus"])
    assert exc.value.code == 2


def test_cli_validate_subcommand(tmp_path, capsys):
    bad = tmp_path / "broken.alg"
    bad.write_text("algebra b\ngenerators a b\nrelations\n  [b, a] = %%\nend\n")
    assert main(["validate", str(bad)]) == 2
    capsys.readouterr()
    good = DATA / "dfr-limit.alg"
    assert main(["validate", str(good)]) == 0
    out = capsys.readouterr().out
    assert "result: pass" in out


def test_cli_writes_report_file(tmp_path, capsys):
    out = tmp_path / "r.json"
    code = main(
        ["run", "--target", "dfr-limit", "--suite", "validate", "--format", "json", "--out", str(out)]
    )
    assert code == 0
    assert json.loads(out.read_text())["suite"] == "validate"
    assert capsys.readouterr().out == ""
