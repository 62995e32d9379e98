"""Tests for the command-line front end and its exit codes."""
import json

import pytest

from hilbcat.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from hilbcat.errors import FactorizationMismatchError


def write_fixture(path, ring="rat", gram=None, mat=None):
    one = "1" if ring in ("nat", "int") else "1/1"
    zero = "0" if ring in ("nat", "int") else "0/1"
    data = {
        "objects": {"X": {"ring": ring, "dim": 2, "gram": gram or [[one, zero], [zero, one]]}},
        "morphisms": {"f": {"dom": "X", "cod": "X", "mat": mat or [[one, one], [zero, zero]]}},
    }
    path.write_text(json.dumps(data))
    return path


def test_audit_writes_reports(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("HILBCAT_SEED", "9")
    out = tmp_path / "reports"
    code = main(["audit", "--ring", "nat", "--suite", "semifield", "--suite", "non-fullness",
                 "--samples", "3", "--out", str(out)])
    assert code == EXIT_OK
    payload = json.loads((out / "audit.json").read_text())
    assert payload["settings"]["seed"] == 9
    assert payload["settings"]["suites"] == ["semifield", "non-fullness"]
    assert payload["settings"]["oracle_vectors"] == 1000
    assert [r["status"] for r in payload["reports"]] == ["expected-fail", "pass"]
    assert "AUDIT SUMMARY" in capsys.readouterr().out


def test_audit_takes_oracle_vector_count(tmp_path):
    out = tmp_path / "reports"
    code = main(["audit", "--ring", "rat", "--suite", "boundedness", "--samples", "1",
                 "--oracle-vectors", "5", "--out", str(out)])
    assert code == EXIT_OK
    assert json.loads((out / "audit.json").read_text())["settings"]["oracle_vectors"] == 5
    assert main(["audit", "--oracle-vectors", "0", "--out", str(out)]) == EXIT_USAGE


def test_audit_with_fixture(tmp_path):
    fixture = write_fixture(tmp_path / "proj.json")
    out = tmp_path / "reports"
    code = main(["audit", "--ring", "rat", "--suite", "mono-kernel", "--samples", "2",
                 "--input", str(fixture), "--out", str(out)])
    assert code == EXIT_OK
    suites = [r["suite"] for r in json.loads((out / "audit.json").read_text())["reports"]]
    assert suites == ["mono-kernel", "fixture"]


@pytest.mark.parametrize(
    "argv",
    [
        ["audit", "--ring", "reals"],
        ["audit", "--suite", "nope"],
        ["audit", "--seed", "-1"],
        ["audit", "--samples", "0"],
    ],
)
def test_audit_usage_errors(argv, tmp_path):
    assert main(argv + ["--out", str(tmp_path)]) == EXIT_USAGE


def test_audit_rejects_malformed_fixture(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert main(["audit", "--input", str(bad), "--out", str(tmp_path)]) == EXIT_USAGE


def test_factor(tmp_path, capsys):
    fixture = write_fixture(tmp_path / "proj.json")
    out = tmp_path / "out"
    assert main(["factor", str(fixture), "--out", str(out)]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert result["valid"]
    assert len(result["transcript"]) == 3
    assert (out / "proj.factor.json").exists()
    assert (out / "proj.factor.txt").exists()


def test_factor_reports_unconnected_orders_as_failure(tmp_path, monkeypatch, capsys):
    def refuse(first, second):
        raise FactorizationMismatchError("dagger epis do not have the same kernel")

    monkeypatch.setattr("hilbcat.tools.connecting_iso", refuse)
    fixture = write_fixture(tmp_path / "proj.json")
    assert main(["factor", str(fixture), "--out", str(tmp_path / "out")]) == EXIT_FAILURE
    result = json.loads(capsys.readouterr().out)
    assert not result["valid"]
    assert all("pivot orders connected=FAILED" in line for line in result["transcript"])


def test_factor_needs_a_field(tmp_path):
    fixture = write_fixture(tmp_path / "ints.json", ring="int")
    assert main(["factor", str(fixture), "--out", str(tmp_path)]) == EXIT_USAGE


def test_extend(tmp_path, capsys):
    fixture = write_fixture(tmp_path / "proj.json")
    out = tmp_path / "out"
    assert main(["extend", "q-to-qi", str(fixture), "--out", str(out)]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert result["target"] == "gauss"
    assert not result["full"]
    assert result["transcript"] == ["f: dagger preserved=ok, bound preserved=ok"]
    extended = json.loads((out / "proj.q-to-qi.json").read_text())
    assert extended["objects"]["X"]["ring"] == "gauss"


def test_extend_into_non_field(tmp_path):
    fixture = write_fixture(tmp_path / "nats.json", ring="nat")
    assert main(["extend", "nat-to-int", str(fixture), "--out", str(tmp_path)]) == EXIT_OK
    assert main(["extend", "nat-to-int", str(fixture), "--field-only", "--out", str(tmp_path)]) == EXIT_USAGE


def test_demo_nonfull(capsys):
    assert main(["demo-nonfull"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["witness_found"] is True
    assert main(["demo-nonfull", "--monoid", "trivial"]) == EXIT_FAILURE


def test_argument_errors_exit_with_usage():
    with pytest.raises(SystemExit) as info:
        main(["extend", "z-to-q", "fixture.json"])
    assert info.value.code == EXIT_USAGE
    with pytest.raises(SystemExit):
        main([])
