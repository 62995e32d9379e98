"""Audit reports: per-suite outcomes, their JSON and text renderings."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import pandas as pd


class SuiteStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    EXPECTED_FAIL = "expected-fail"
    UNEXPECTED_PASS = "unexpected-pass"
    SKIPPED = "skipped"


OK_STATUSES = (SuiteStatus.PASS, SuiteStatus.EXPECTED_FAIL, SuiteStatus.SKIPPED)


@dataclass(frozen=True)
class PropertyFailure:
    property_id: str
    witness: Any
    message: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"property": self.property_id, "witness": self.witness, "message": self.message}


@dataclass(frozen=True)
class AuditReport:
    suite: str
    ring: str
    seed: int
    cases_run: int
    failures: Tuple[PropertyFailure, ...] = ()
    status: SuiteStatus = SuiteStatus.PASS
    note: str = ""
    properties: Tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def ok(self) -> bool:
        return self.status in OK_STATUSES

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "ring": self.ring,
            "seed": self.seed,
            "status": self.status.value,
            "passed": self.passed,
            "cases_run": self.cases_run,
            "properties": list(self.properties),
            "failures": [f.to_dict() for f in self.failures],
            "note": self.note,
        }

    def to_text(self, max_failures: int = 5) -> str:
        lines = [f"[{self.status.value}] {self.suite} on {self.ring} (seed {self.seed}): {self.cases_run} cases"]
        if self.note:
            lines.append(f"  note: {self.note}")
        for failure in self.failures[:max_failures]:
            witness = json.dumps(failure.witness, sort_keys=True)
            lines.append(f"  - {failure.property_id}: {failure.message} witness={witness}")
        if len(self.failures) > max_failures:
            lines.append(f"  ... {len(self.failures) - max_failures} more failures")
        return "\n".join(lines)


def summary_frame(reports: Sequence[AuditReport]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "suite": r.suite,
                "ring": r.ring,
                "status": r.status.value,
                "cases": r.cases_run,
                "failures": len(r.failures),
            }
            for r in reports
        ],
        columns=["suite", "ring", "status", "cases", "failures"],
    )


def render_text(reports: Sequence[AuditReport]) -> str:
    frame = summary_frame(reports)
    counts = frame["status"].value_counts().sort_index() if len(frame) else pd.Series(dtype=int)
    lines = ["AUDIT SUMMARY", "=" * 60, frame.to_string(index=False) if len(frame) else "(no suites)", ""]
    lines.append("totals: " + ", ".join(f"{status}={count}" for status, count in counts.items()))
    lines.append(f"overall: {'PASS' if all_ok(reports) else 'FAIL'}")
    details = [r.to_text() for r in reports if r.failures or r.note]
    if details:
        lines.extend(["", "DETAILS", "=" * 60, *details])
    return "\n".join(lines) + "\n"


def render_json(reports: Sequence[AuditReport], settings: Optional[Dict[str, Any]] = None) -> str:
    payload = {
        "settings": settings or {},
        "overall": "pass" if all_ok(reports) else "fail",
        "reports": [r.to_dict() for r in reports],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_reports(
    reports: Sequence[AuditReport],
    out_dir: Union[str, Path],
    settings: Optional[Dict[str, Any]] = None,
) -> List[Path]:
    """Write audit.json and audit.txt; identical inputs give identical bytes."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    json_path, text_path = out / "audit.json", out / "audit.txt"
    json_path.write_text(render_json(reports, settings), encoding="utf-8")
    text_path.write_text(render_text(reports), encoding="utf-8")
    return [json_path, text_path]


def all_ok(reports: Iterable[AuditReport]) -> bool:
    return all(r.ok for r in reports)


def exit_code(reports: Iterable[AuditReport]) -> int:
    return 0 if all_ok(reports) else 1
