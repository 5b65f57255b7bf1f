import io
import json

import pytest

from fanolines import checks
from fanolines.cli import main


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def test_list_contains_core_ids():
    code, text = run(["list", "--json"])
    assert code == 0
    ids = [c["id"] for c in json.loads(text)]
    for needed in ("L2.1-HF4", "app-R", "tvconn-minors", "resultant-elim", "class-F"):
        assert needed in ids
    assert len(ids) == len(set(ids))
    code, plain = run(["list"])
    assert code == 0 and "deg-phi" in plain


def test_every_check_has_expected_value():
    for c in checks.list_checks():
        assert c.expected and c.suite in checks.SUITES


def test_verify_single_check_json():
    code, text = run(["verify", "--only", "thm-class-V", "--json"])
    assert code == 0
    report = json.loads(text)
    (r,) = report["results"]
    assert (r["id"], r["status"], r["computed"]) == ("thm-class-V", "pass", "21*c2")


def _strip_runtime(report):
    for r in report["results"]:
        r.pop("runtime_ms")
    return report


def test_json_report_is_deterministic():
    argv = ["verify", "--suite", "chow", "--suite", "hurwitz", "--json", "--seed", "4"]
    a = _strip_runtime(json.loads(run(argv)[1]))
    b = _strip_runtime(json.loads(run(argv)[1]))
    assert a == b
    assert a["config"]["seed"] == 4


def test_text_report_prints_convention_note():
    code, text = run(["verify", "--only", "class-N"])
    assert code == 0
    assert "note: convention: l^2 = l*H_F - c2" in text


def test_zero_samples_skip_branch_check():
    code, text = run(["verify", "--only", "resultant-branches", "--samples", "0", "--json"])
    assert code == 0
    assert json.loads(text)["results"][0]["status"] == "skipped"


def test_small_power_bound_is_inconclusive():
    code, text = run(["verify", "--only", "tvconn-minors", "--power-bound", "5", "--json"])
    assert code == 3
    assert json.loads(text)["results"][0]["status"] == "inconclusive"


def test_tiny_step_budget_is_inconclusive():
    code, _ = run(["verify", "--only", "resultant-elim", "--step-budget", "3", "--samples", "0"])
    assert code == 3


def test_unknown_id_is_usage_error():
    code, _ = run(["verify", "--only", "no-such-check"])
    assert code == 2


@pytest.mark.parametrize("argv", [["verify", "--samples", "-1"], ["verify", "--suite", "bogus"], []])
def test_bad_arguments_exit_2(argv):
    with pytest.raises(SystemExit) as err:
        main(argv, io.StringIO())
    assert err.value.code == 2


def test_failure_exit_code(monkeypatch):
    c = checks.find_check("deg-psi")
    broken = checks.Check(c.id, c.suite, c.description, c.source, "25", c.run)
    monkeypatch.setattr(checks, "CATALOG", [broken if x.id == c.id else x for x in checks.CATALOG])
    code, text = run(["verify", "--only", "deg-psi"])
    assert code == 1
    assert "expected: 25" in text


def test_inspect_scenario(tmp_path):
    path = tmp_path / "line.txt"
    path.write_text("kind = type2full\nQ0 = x2^2\nQ1 = x3^2\nc0 = 1\nd1 = 1\npoint = 1:1\n")
    code, text = run(["inspect", str(path)])
    assert code == 0
    assert "common roots: 0" in text
    assert "fiber over [1:1]: 2 roots (simple)" in text


def test_inspect_type1_reports_rank(tmp_path):
    path = tmp_path / "t1.txt"
    path.write_text("kind = type1\nQ0 = x2*x3\nQ1 = x5^2\nP = x3^3\n")
    code, text = run(["inspect", str(path)])
    assert code == 0
    assert "rank: 2 (smooth)" in text


def test_inspect_errors(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("kind = type1\nQ0 = x0^2\n")
    assert run(["inspect", str(path)])[0] == 2
    assert run(["inspect", str(tmp_path / "missing.txt")])[0] == 2


def test_full_run_passes():
    code, text = run(["verify"])
    assert code == 0
    assert text.strip().endswith(f"{len(checks.CATALOG)} checks: {len(checks.CATALOG)} pass")
