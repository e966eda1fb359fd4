"""Deterministic text and JSON reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .checks import FAIL, PASS, SKIPPED, Check, CheckReport

__all__ = ["Report", "Section", "to_jsonable"]

SCHEMA_VERSION = 1


def to_jsonable(value):
    """Exact values become strings; arrays become nested lists."""
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()] if value.ndim else to_jsonable(value.item())
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (str, bool)) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return str(value)
    return str(value)


@dataclass
class Section:
    title: str
    checks: list = field(default_factory=list)

    @classmethod
    def of(cls, report: CheckReport) -> "Section":
        return cls(report.title, list(report.checks))

    def to_dict(self) -> dict:
        return {"title": self.title, "checks": [c.to_dict() for c in self.checks]}

    @classmethod
    def from_dict(cls, data: dict) -> "Section":
        return cls(data["title"], [Check.from_dict(c) for c in data["checks"]])


@dataclass
class Report:
    command: str
    manifest: str = ""
    seed: int | None = None
    sections: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    debug: dict = field(default_factory=dict)

    def add(self, section) -> None:
        if isinstance(section, CheckReport):
            section = Section.of(section)
        self.sections.append(section)

    def all_checks(self):
        for s in self.sections:
            for c in s.checks:
                yield s.title, c

    @property
    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for _, c in self.all_checks():
            out[c.status] = out.get(c.status, 0) + 1
        return out

    @property
    def passed(self) -> bool:
        return self.counts[FAIL] == 0

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_dict(self) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "manifest": self.manifest,
            "seed": self.seed,
            "sections": [s.to_dict() for s in self.sections],
            "data": to_jsonable(self.data),
            "notes": list(self.notes),
            "summary": self.counts,
        }
        if self.debug:
            out["debug"] = to_jsonable(self.debug)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        return cls(
            command=data["command"],
            manifest=data.get("manifest", ""),
            seed=data.get("seed"),
            sections=[Section.from_dict(s) for s in data.get("sections", [])],
            data=data.get("data", {}),
            notes=list(data.get("notes", [])),
            debug=data.get("debug", {}),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.manifest}" if self.manifest else self.command]
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        for section in self.sections:
            lines.append("")
            lines.append(f"== {section.title}")
            for c in section.checks:
                lines.append(f"  [{c.status.upper():^7}] {c.name}")
                for d in c.details:
                    lines.append(f"            {d}")
        data = to_jsonable(self.data)
        if data:
            lines.append("")
            lines.append("== computed values")
            for key in data:
                lines.append(f"  {key}: {_compact(data[key])}")
        if self.notes:
            lines.append("")
            lines.append("== notes")
            lines.extend(f"  - {n}" for n in self.notes)
        if self.debug:
            lines.append("")
            lines.append("== approximate evaluation (debug only, not a verdict)")
            for key, value in to_jsonable(self.debug).items():
                lines.append(f"  {key}: {_compact(value)}")
        c = self.counts
        lines.append("")
        lines.append(f"summary: {c[PASS]} passed, {c[FAIL]} failed, {c[SKIPPED]} skipped")
        return "\n".join(lines) + "\n"


def _compact(value) -> str:
    return json.dumps(value, sort_keys=True)
