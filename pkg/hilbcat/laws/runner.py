"""Runs the selected suites concurrently and streams their reports."""
import asyncio
import logging
from typing import AsyncIterator, Dict, List, Optional

from ..config import AuditConfiguration
from ..fixtures import load_fixture
from ..observability import metrics, trace_operation, tracer
from ..scalars import ring_from_name
from .generators import InstanceGenerator
from .report import AuditReport
from .suites import SUITE_NAMES, run_fixture_suite, run_suite

logger = logging.getLogger(__name__)


class RunnerEvent:
    """A finished suite, or the final event carrying every report in catalogue order."""

    def __init__(
        self,
        report: Optional[AuditReport] = None,
        reports: Optional[List[AuditReport]] = None,
        is_final: bool = False,
    ):
        self.report = report
        self.reports = reports or []
        self._is_final = is_final

    def is_final_response(self) -> bool:
        return self._is_final

    def __repr__(self):
        if self._is_final:
            return f"RunnerEvent(final, reports={len(self.reports)})"
        return f"RunnerEvent(suite='{self.report.suite}', status={self.report.status.value})"


class SuiteRunner:
    """Execute audit suites with at most ``jobs`` running at a time.

    Every suite draws from its own generator stream, so the reports do not
    depend on scheduling order or on ``jobs``.
    """

    def __init__(self, settings: AuditConfiguration):
        self.settings = settings.validate()
        self.ring = ring_from_name(settings.ring)
        self.generator = InstanceGenerator(
            self.ring,
            seed=settings.seed,
            max_dim=settings.max_dim,
            entry_height=settings.entry_height,
        )
        # parsed up front so a bad fixture fails before any suite runs
        self.fixture = load_fixture(settings.input_path) if settings.input_path else None

    async def _run_one(self, name: str, semaphore: asyncio.Semaphore) -> AuditReport:
        async with semaphore:
            return await asyncio.to_thread(run_suite, name, self.ring, self.generator, self.settings.samples,
                                           self.settings.oracle_vectors)

    async def run_async(self) -> AsyncIterator[RunnerEvent]:
        names = self.settings.selected_suites()
        logger.info("Running %d suites on %s (seed %d, jobs %d)", len(names), self.ring, self.settings.seed,
                    self.settings.jobs)
        trace_id = tracer.start_trace("audit", {"ring": self.ring.name, "suites": len(names)})
        metrics.gauge("audit.suites", len(names), {"ring": self.ring.name})
        semaphore = asyncio.Semaphore(self.settings.jobs)
        tasks = [asyncio.create_task(self._run_one(name, semaphore)) for name in names]
        finished: Dict[str, AuditReport] = {}
        try:
            for next_done in asyncio.as_completed(tasks):
                report = await next_done
                finished[report.suite] = report
                yield RunnerEvent(report=report)
        finally:
            for task in tasks:
                task.cancel()
            tracer.end_trace(trace_id)
        reports = [finished[name] for name in SUITE_NAMES if name in finished]
        if self.fixture is not None:
            fixture_report = await asyncio.to_thread(run_fixture_suite, self.fixture, self.settings.seed)
            yield RunnerEvent(report=fixture_report)
            reports.append(fixture_report)
        yield RunnerEvent(reports=reports, is_final=True)

    @trace_operation("audit.run")
    async def run(self) -> List[AuditReport]:
        reports: List[AuditReport] = []
        async for event in self.run_async():
            if event.is_final_response():
                reports = event.reports
            else:
                logger.info("%s: %s", event.report.suite, event.report.status.value)
        return reports


def run_audit(settings: AuditConfiguration) -> List[AuditReport]:
    """Synchronous entry point used by the command line."""
    return asyncio.run(SuiteRunner(settings).run())
