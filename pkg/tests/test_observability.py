"""Tests for logging, tracing, metrics, configuration and paths."""
import json
import logging

import pytest

from hilbcat.config import AuditConfiguration
from hilbcat.errors import ConfigError
from hilbcat.laws.suites import SUITE_NAMES
from hilbcat.observability import (
    MetricsCollector,
    StructuredFormatter,
    Tracer,
    log_suite_event,
    metrics,
    trace_operation,
)
from hilbcat.paths import get_output_path, resolve_input


def test_structured_formatter_includes_suite_fields():
    record = logging.LogRecord("hilbcat.laws", logging.INFO, __file__, 10, "finished", None, None)
    record.suite = "field"
    record.cases = 4
    data = json.loads(StructuredFormatter().format(record))
    assert data["level"] == "INFO"
    assert data["message"] == "finished"
    assert data["suite"] == "field"
    assert data["cases"] == 4
    assert "ring" not in data


def test_log_suite_event(caplog):
    logger = logging.getLogger("hilbcat.test")
    with caplog.at_level(logging.INFO, logger="hilbcat.test"):
        log_suite_event(logger, "finished", "monoidal", ring="rat")
    record = caplog.records[-1]
    assert record.suite == "monoidal"
    assert record.event_type == "finished"
    assert record.ring == "rat"


def test_tracer_spans():
    local = Tracer()
    trace_id = local.start_trace("audit", {"ring": "rat"})
    local.add_span(trace_id, "field", 1.5, {"cases": 3})
    assert local.get_trace(trace_id)["spans"][0]["name"] == "field"
    trace = local.end_trace(trace_id)
    assert trace["metadata"] == {"ring": "rat"}
    assert trace["total_duration_ms"] >= 0
    assert local.get_trace(trace_id) is None
    assert local.end_trace(trace_id) == {}


def test_tracer_keeps_bounded_history():
    local = Tracer(history=2)
    ids = [local.start_trace(f"suite.{name}") for name in ("a", "b", "a")]
    for trace_id in ids:
        local.end_trace(trace_id)
    assert [t["operation"] for t in local.finished_traces()] == ["suite.b", "suite.a"]
    assert [t["trace_id"] for t in local.finished_traces("suite.a")] == [ids[2]]


def test_metrics_collector():
    local = MetricsCollector()
    local.increment("suite.pass")
    local.increment("suite.pass", 2)
    local.gauge("audit.suites", 20, {"ring": "rat"})
    local.histogram("suite.duration_ms", 2.0)
    local.histogram("suite.duration_ms", 4.0)
    data = local.get_metrics()
    assert data["counters"] == {"suite.pass": 3}
    assert data["gauges"] == {"audit.suites{ring=rat}": 20}
    assert data["histograms"]["suite.duration_ms"]["mean"] == 3.0
    local.reset()
    assert local.get_metrics()["counters"] == {}


def test_trace_operation_sync_and_error():
    metrics.reset()

    @trace_operation("double")
    def double(x):
        if x < 0:
            raise ValueError("negative")
        return x * 2

    assert double(3) == 6
    with pytest.raises(ValueError):
        double(-1)
    counters = metrics.get_metrics()["counters"]
    assert counters["double.success"] == 1
    assert counters["double.error"] == 1
    metrics.reset()


async def test_trace_operation_async():
    metrics.reset()

    @trace_operation("async-task")
    async def task():
        return "done"

    assert await task() == "done"
    assert metrics.get_metrics()["counters"]["async-task.success"] == 1
    metrics.reset()


def test_configuration_precedence(monkeypatch):
    monkeypatch.setenv("HILBCAT_SEED", "5")
    monkeypatch.setenv("HILBCAT_LOG_LEVEL", "DEBUG")
    assert AuditConfiguration.from_env().seed == 5
    assert AuditConfiguration.from_env().log_level == "DEBUG"
    assert AuditConfiguration.from_env(seed=8).seed == 8
    monkeypatch.setenv("HILBCAT_SEED", "five")
    with pytest.raises(ConfigError):
        AuditConfiguration.from_env()


@pytest.mark.parametrize(
    "overrides",
    [
        {"ring": "reals"}, {"jobs": 0}, {"max_dim": 0}, {"entry_height": 0}, {"seed": 2**64},
        {"oracle_vectors": 0}, {"suites": ("nope",)},
    ],
)
def test_configuration_validation(overrides):
    with pytest.raises(ConfigError):
        AuditConfiguration(**overrides).validate()


def test_selected_suites_follow_catalogue():
    assert AuditConfiguration().selected_suites() == SUITE_NAMES
    chosen = AuditConfiguration(suites=("boundedness", "field")).selected_suites()
    assert chosen == ("field", "boundedness")


def test_paths(tmp_path):
    existing = tmp_path / "x.json"
    existing.write_text("{}")
    assert resolve_input(str(existing)) == existing
    assert resolve_input("missing.json").parent.name == "input"
    out = get_output_path("audit.json", "reports", base=tmp_path)
    assert out == tmp_path / "reports" / "audit.json"
    assert out.parent.is_dir()
