"""Verdict records shared by the checkers."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class Check:
    name: str
    status: str
    details: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "Check":
        return cls(data["name"], data["status"], list(data.get("details", [])))


@dataclass
class CheckReport:
    title: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.status != FAIL for c in self.checks) and any(
            c.status == PASS for c in self.checks
        )

    @property
    def skipped(self) -> bool:
        return bool(self.checks) and all(c.status == SKIPPED for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list:
        return [c for c in self.checks if c.status == FAIL]


def skipped(title: str, reason: str) -> CheckReport:
    return CheckReport(title, [Check(title, SKIPPED, [reason])])


def entrywise(name: str, lhs, rhs, limit: int = 8) -> Check:
    """Compare two arrays exactly; details list mismatches with 1-based indices."""
    lhs = np.asarray(lhs, dtype=object)
    rhs = np.asarray(rhs, dtype=object)
    if lhs.shape != rhs.shape:
        return Check(name, FAIL, [f"shape mismatch {lhs.shape} vs {rhs.shape}"])
    bad = []
    for idx in np.ndindex(lhs.shape):
        if lhs[idx] != rhs[idx]:
            bad.append(idx)
    if not bad:
        count = int(np.prod(lhs.shape)) if lhs.shape else 1
        return Check(name, PASS, [f"{count} entries equal"])
    details = [f"{len(bad)} mismatched entries"]
    for idx in bad[:limit]:
        label = ",".join(str(i + 1) for i in idx)
        details.append(f"[{label}]: got {lhs[idx]}, expected {rhs[idx]}")
    return Check(name, FAIL, details)


def fmt(value) -> str:
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(fmt(v) for v in value) + ")"
    return str(value)


def equal(name: str, got, expected) -> Check:
    if got == expected:
        return Check(name, PASS, [fmt(got)])
    return Check(name, FAIL, [f"got {fmt(got)}, expected {fmt(expected)}"])
