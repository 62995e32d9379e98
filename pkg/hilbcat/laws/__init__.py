"""Property suites: seeded instance generation, the suite catalogue and reports."""
from .generators import InstanceGenerator
from .properties import LAWS, SuiteContext, evaluate, replay
from .report import AuditReport, PropertyFailure, SuiteStatus, write_reports
from .runner import SuiteRunner, run_audit
from .suites import SUITE_NAMES, SUITES, get_suite, run_fixture_suite, run_suite

__all__ = [
    "AuditReport",
    "InstanceGenerator",
    "LAWS",
    "PropertyFailure",
    "SUITES",
    "SUITE_NAMES",
    "SuiteContext",
    "SuiteRunner",
    "SuiteStatus",
    "evaluate",
    "get_suite",
    "replay",
    "run_audit",
    "run_fixture_suite",
    "run_suite",
    "write_reports",
]
