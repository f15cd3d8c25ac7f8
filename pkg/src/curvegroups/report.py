"""Named, machine-readable reports made of individual checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS, FAIL, UNKNOWN = "pass", "fail", "unknown"
PROVENANCE = ("PAPER", "DERIVED", "TRIVIAL")


@dataclass
class Check:
    claim: str
    status: str
    provenance: str
    detail: str = ""

    def to_dict(self):
        d = {"claim": self.claim, "status": self.status, "provenance": self.provenance}
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    name: str
    inputs: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def check(self, claim, ok, provenance, detail=""):
        if provenance not in PROVENANCE:
            raise ValueError(f"unknown provenance {provenance!r}")
        status = UNKNOWN if ok is None else (PASS if ok else FAIL)
        self.checks.append(Check(claim, status, provenance, str(detail)))
        return ok

    def extend(self, other: "Report", prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.claim, c.status, c.provenance, c.detail))
        if other.results:
            self.results[other.name] = other.results

    @property
    def failed(self):
        return sum(1 for c in self.checks if c.status == FAIL)

    @property
    def unknown(self):
        return sum(1 for c in self.checks if c.status == UNKNOWN)

    @property
    def ok(self):
        return self.failed == 0 and self.unknown == 0

    def to_dict(self):
        return {
            "name": self.name,
            "inputs": self.inputs,
            "results": self.results,
            "checks": [c.to_dict() for c in self.checks],
            "summary": {
                "total": len(self.checks),
                "passed": sum(1 for c in self.checks if c.status == PASS),
                "failed": self.failed,
                "unknown": self.unknown,
            },
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, default=str)

    def to_text(self):
        lines = [f"== {self.name} =="]
        for k, v in self.inputs.items():
            lines.append(f"input {k}: {v}")
        for k, v in _flatten(self.results):
            lines.append(f"{k}: {v}")
        for c in self.checks:
            tail = f"  ({c.detail})" if c.detail else ""
            lines.append(f"[{c.status.upper():7}] [{c.provenance}] {c.claim}{tail}")
        s = self.to_dict()["summary"]
        lines.append(f"-- {s['passed']}/{s['total']} passed, {s['failed']} failed, {s['unknown']} unknown")
        return "\n".join(lines)


def _flatten(tree, prefix=""):
    if isinstance(tree, dict):
        for k, v in tree.items():
            yield from _flatten(v, f"{prefix}{k}.")
    else:
        yield prefix.rstrip("."), tree
