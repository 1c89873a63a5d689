"""Check results and machine-readable reports.

Reports are deterministic for identical inputs: stable check ordering,
fixed JSON key order, and per-check timings serialized as ``null`` (the
text renderer prints the measured values; keeping them out of the JSON
bytes makes repeated runs byte-identical).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


@dataclass
class CheckResult:
    check_id: str
    status: str
    residual: str = ""
    detail: str = ""
    elapsed_ms: float | None = None

    @staticmethod
    def passed(check_id: str, detail: str = "") -> "CheckResult":
        return CheckResult(check_id, PASS, "", detail)

    @staticmethod
    def failed(check_id: str, residual: str, detail: str = "") -> "CheckResult":
        return CheckResult(check_id, FAIL, residual, detail)

    @staticmethod
    def not_applicable(check_id: str, detail: str = "") -> "CheckResult":
        return CheckResult(check_id, NOT_APPLICABLE, "", detail)


@dataclass
class Report:
    suite: str
    target: str
    engine_version: str
    input_digest: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def status(self) -> str:
        return FAIL if any(c.status == FAIL for c in self.checks) else PASS

    @property
    def exit_code(self) -> int:
        return 0 if self.status == PASS else 1

    def to_json(self) -> str:
        doc = {
            "suite": self.suite,
            "target": self.target,
            "engine_version": self.engine_version,
            "input_digest": self.input_digest,
            "status": self.status,
            "checks": [
                {
                    "id": c.check_id,
                    "status": c.status,
                    "residual": c.residual,
                    "detail": c.detail,
                    "elapsed_ms": None,
                }
                for c in self.checks
            ],
        }
        return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"

    def to_text(self) -> str:
        lines = [
            f"suite: {self.suite}",
            f"target: {self.target}",
            f"engine: {self.engine_version}",
            f"digest: {self.input_digest}",
            "",
        ]
        for c in self.checks:
            ms = "" if c.elapsed_ms is None else f" ({c.elapsed_ms:.0f} ms)"
            tag = {PASS: "PASS", FAIL: "FAIL", NOT_APPLICABLE: "n/a "}[c.status]
            lines.append(f"[{tag}] {c.check_id}{ms}")
            if c.detail:
                lines.append(f"       {c.detail}")
            if c.residual:
                lines.append(f"       residual: {c.residual}")
        lines.append("")
        lines.append(f"result: {self.status}")
        return "\n".join(lines) + "\n"


def input_digest(engine_version: str, target_key: str, suite: str, seed: int, degree_bound: int) -> str:
    payload = json.dumps(
        {
            "engine_version": engine_version,
            "target": target_key,
            "suite": suite,
            "seed": seed,
            "degree_bound": degree_bound,
        },
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def emit_report(report: Report, fmt: str = "text", path: str | None = None) -> str:
    """Render a report; write it to ``path`` or return it for stdout."""
    if fmt == "json":
        body = report.to_json()
    elif fmt == "text":
        body = report.to_text()
    else:
        raise ValueError(f"unknown report format: {fmt!r}")
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(body)
    return body
