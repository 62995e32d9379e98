"""Tests for the property registry, suites, reports and the async runner."""
import json

import pytest

from hilbcat.config import AuditConfiguration
from hilbcat.errors import ConfigError, UnknownSuiteError
from hilbcat.fixtures import parse_fixture
from hilbcat.laws import (
    LAWS,
    SUITE_NAMES,
    InstanceGenerator,
    SuiteContext,
    SuiteRunner,
    SuiteStatus,
    evaluate,
    get_suite,
    replay,
    run_fixture_suite,
    run_suite,
    write_reports,
)
from hilbcat.laws.properties import ORACLE_VECTORS, law
from hilbcat.laws.report import exit_code, render_json, render_text
from hilbcat.laws.suites import TENSOR_PAIRS
from hilbcat.observability import metrics, tracer
from hilbcat.scalars import BOOL, INT, NAT, RAT, SHIPPED_RINGS


def generator(ring, seed=7):
    return InstanceGenerator(ring, seed=seed, max_dim=3, entry_height=3)


def test_catalogue_order():
    assert SUITE_NAMES[:3] == ("scalar-laws", "scalar-flags", "semifield")
    assert SUITE_NAMES[-1] == "boundedness"
    assert len(SUITE_NAMES) == 20
    with pytest.raises(UnknownSuiteError):
        get_suite("nope")


def test_evaluate():
    assert evaluate("invertible", RAT.scalar(3)) == (True, "")
    ok, message = evaluate("invertible", RAT.zero())
    assert not ok
    assert message.startswith("NoInverseError")
    with pytest.raises(ConfigError):
        evaluate("no-such-property")


def test_duplicate_registration_is_rejected():
    with pytest.raises(ValueError):
        law("add-unit")(lambda s: True)
    assert "add-unit" in LAWS


def test_context_caps_failures():
    ctx = SuiteContext(NAT, None, 0, max_failures=2)
    for _ in range(3):
        ctx.check("invertible", NAT.scalar(2))
    assert ctx.cases == 3
    assert len(ctx.failures) == 2
    assert ctx.properties == ["invertible"]
    assert ctx.failed_cases == 3
    assert ctx.timings["invertible"].cases == 3
    assert ctx.timings["invertible"].failures == 3


def test_semifield_fails_on_naturals_as_expected():
    report = run_suite("semifield", NAT, generator(NAT), 5)
    assert report.status == SuiteStatus.EXPECTED_FAIL
    failure = report.failures[0]
    assert failure.property_id == "invertible"
    assert failure.witness == [{"scalar": "2", "ring": "nat"}]
    assert replay(failure)
    assert report.ok


def test_suite_run_is_traced_and_counted(caplog):
    metrics.reset()
    with caplog.at_level("WARNING", logger="hilbcat.laws.properties"):
        report = run_suite("semifield", NAT, generator(NAT), 5)
    trace = tracer.finished_traces("suite.semifield")[-1]
    assert trace["metadata"] == {"ring": "nat", "samples": 5}
    spans = {s["name"]: s["metadata"] for s in trace["spans"]}
    assert set(spans) == set(report.properties)
    assert spans["invertible"]["failures"] > 0
    assert sum(s["cases"] for s in spans.values()) == report.cases_run
    counters = metrics.get_metrics()["counters"]
    assert counters["suite.cases{suite=semifield}"] == report.cases_run
    assert counters["suite.failures{suite=semifield}"] >= len(report.failures) > 0
    assert any(r.levelname == "WARNING" and "invertible" in r.getMessage() for r in caplog.records)


def test_oracle_vector_count_is_configurable(monkeypatch):
    assert ORACLE_VECTORS == 1000
    assert AuditConfiguration().oracle_vectors == 1000
    drawn = []
    original = InstanceGenerator.vector

    def counting(self, obj):
        drawn.append(obj.dim)
        return original(self, obj)

    monkeypatch.setattr(InstanceGenerator, "vector", counting)
    report = run_suite("boundedness", RAT, generator(RAT), 1, oracle_vectors=7)
    assert report.status == SuiteStatus.PASS
    assert len(drawn) == 7
    with pytest.raises(ConfigError):
        AuditConfiguration(oracle_vectors=0).validate()


def test_field_on_booleans_is_expected_fail():
    report = run_suite("field", BOOL, generator(BOOL), 5)
    assert report.status == SuiteStatus.EXPECTED_FAIL


def test_inapplicable_suite_is_skipped():
    report = run_suite("dagger-laws", NAT, generator(NAT), 5)
    assert report.status == SuiteStatus.SKIPPED
    assert report.cases_run == 0
    assert report.note == "applies to fields, not nat"


@pytest.mark.parametrize("ring", SHIPPED_RINGS, ids=lambda r: r.name)
def test_scalar_laws_hold(ring):
    report = run_suite("scalar-laws", ring, generator(ring), 10)
    assert report.status == SuiteStatus.PASS, report.to_text()


@pytest.mark.parametrize("ring", [NAT, BOOL, INT, RAT], ids=lambda r: r.name)
def test_scalar_flags_hold(ring):
    assert run_suite("scalar-flags", ring, generator(ring), 1).status == SuiteStatus.PASS


@pytest.mark.parametrize(
    "name",
    ["field", "dagger-laws", "pre-hilbert-axiom", "mono-kernel", "factorization", "biproducts", "fullness"],
)
def test_field_suites_pass_on_rationals(name):
    report = run_suite(name, RAT, generator(RAT), 4)
    assert report.status == SuiteStatus.PASS, report.to_text()
    assert report.cases_run > 0


def test_structural_suites_pass():
    assert run_suite("non-fullness", INT, generator(INT), 1).status == SuiteStatus.PASS
    assert run_suite("semimodules", BOOL, generator(BOOL), 1).status == SuiteStatus.PASS
    assert run_suite("char-zero", NAT, generator(NAT), 1).note


def test_semimodule_suite_covers_b3_tensors():
    report = run_suite("semimodules", BOOL, generator(BOOL), 1)
    assert "fsm-scalar-module" in report.properties
    assert {("B^3", "B^2"), ("B^3", "chain3")} <= set(TENSOR_PAIRS)
    assert ("B^3", "B^3") not in TENSOR_PAIRS
    assert evaluate("fsm-scalar-module") == (True, "")


def test_reports_are_deterministic(tmp_path):
    first = run_suite("factorization-uniqueness", RAT, generator(RAT, seed=11), 3)
    second = run_suite("factorization-uniqueness", RAT, generator(RAT, seed=11), 3)
    assert first.to_dict() == second.to_dict()
    assert render_json([first]) == render_json([second])
    paths = write_reports([first], tmp_path, {"seed": 11})
    payload = json.loads(paths[0].read_text())
    assert payload["settings"] == {"seed": 11}
    assert payload["overall"] == "pass"
    assert "AUDIT SUMMARY" in paths[1].read_text()


def test_render_text_lists_failures():
    report = run_suite("semifield", INT, generator(INT), 2)
    text = render_text([report])
    assert "expected-fail" in text
    assert "invertible" in text
    assert exit_code([report]) == 0


def test_fixture_suite():
    fixture = parse_fixture(json.dumps({
        "objects": {"X": {"ring": "rat", "dim": 2, "gram": [["1/1", "0/1"], ["0/1", "2/1"]]}},
        "morphisms": {"f": {"dom": "X", "cod": "X", "mat": [["1/1", "1/1"], ["0/1", "0/1"]]}},
    }))
    report = run_fixture_suite(fixture, seed=3)
    assert report.suite == "fixture"
    assert report.status == SuiteStatus.PASS, report.to_text()
    assert report.seed == 3


async def test_runner_orders_reports_by_catalogue():
    settings = AuditConfiguration(ring="nat", suites=("non-fullness", "semifield", "scalar-laws"), samples=3, jobs=2)
    reports = await SuiteRunner(settings).run()
    assert [r.suite for r in reports] == ["scalar-laws", "semifield", "non-fullness"]
    assert exit_code(reports) == 0


async def test_runner_streams_a_final_event():
    settings = AuditConfiguration(ring="rat", suites=("field",), samples=2)
    events = [event async for event in SuiteRunner(settings).run_async()]
    assert events[-1].is_final_response()
    assert [r.suite for r in events[-1].reports] == ["field"]
    assert not events[0].is_final_response()


def test_runner_rejects_bad_settings():
    with pytest.raises(ConfigError):
        SuiteRunner(AuditConfiguration(ring="reals"))
    with pytest.raises(ConfigError):
        SuiteRunner(AuditConfiguration(suites=("nope",)))
