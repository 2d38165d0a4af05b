"""Check results and report rendering (text and JSON).

Statuses: pass, fail, patched-pass (printed form fails, shipped correction
verifies), bad-erratum (a correction itself fails), skipped.  A report is
successful iff it contains no fail and no bad-erratum.  Timings are
measured always but emitted only on request, so default reports are
byte-identical across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

SCHEMA = "e6inv-report/1"
TOOL_VERSION = "0.1.0"

FAILING = {"fail", "bad-erratum"}


@dataclass
class CheckResult:
    check_id: str
    description: str
    status: str
    residual: Optional[str] = None
    note: Optional[str] = None
    elapsed_ms: Optional[float] = None


@dataclass
class Report:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)
    prime: int = 3

    def extend(self, more):
        self.checks.extend(more)
        return self

    def summary(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "patched-pass": 0, "skipped": 0, "bad-erratum": 0}
        for c in self.checks:
            out[c.status] = out.get(c.status, 0) + 1
        return out

    def ok(self) -> bool:
        return not any(c.status in FAILING for c in self.checks)

    def to_json(self, timings: bool = False) -> str:
        checks = []
        for c in self.checks:
            row = {"id": c.check_id, "description": c.description, "status": c.status}
            if c.residual is not None:
                row["residual"] = c.residual
            if c.note is not None:
                row["note"] = c.note
            if timings and c.elapsed_ms is not None:
                row["elapsed_ms"] = round(c.elapsed_ms, 1)
            checks.append(row)
        doc = {
            "schema": SCHEMA,
            "tool_version": TOOL_VERSION,
            "prime": self.prime,
            "suite": self.suite,
            "checks": checks,
            "summary": self.summary(),
            "ok": self.ok(),
        }
        return json.dumps(doc, indent=2, sort_keys=False)

    def to_text(self, timings: bool = False) -> str:
        lines = [f"suite {self.suite} (mod {self.prime})"]
        width = max((len(c.check_id) for c in self.checks), default=10)
        for c in self.checks:
            mark = {
                "pass": "ok",
                "patched-pass": "ok*",
                "skipped": "--",
                "fail": "FAIL",
                "bad-erratum": "BAD-ERRATUM",
            }[c.status]
            line = f"  {mark:<12} {c.check_id:<{width}}  {c.description}"
            if timings and c.elapsed_ms is not None:
                line += f"  [{c.elapsed_ms:.0f} ms]"
            lines.append(line)
            if c.note:
                lines.append(f"{'':16}note: {c.note}")
            if c.residual and c.status in FAILING:
                res = c.residual if len(c.residual) < 160 else c.residual[:157] + "..."
                lines.append(f"{'':16}residual: {res}")
        s = self.summary()
        parts = [f"{k}={v}" for k, v in s.items() if v]
        lines.append(f"  => {', '.join(parts) or 'no checks'}")
        return "\n".join(lines)


def merge(suite_name: str, reports: list[Report]) -> Report:
    out = Report(suite_name, prime=reports[0].prime if reports else 3)
    for r in reports:
        out.checks.extend(r.checks)
    return out
