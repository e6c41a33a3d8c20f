"""Structured pass/fail reports and their text/JSON renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


class ReportError(ValueError):
    pass


@dataclass
class Report:
    """Named boolean flags, each false flag carrying a counterexample payload.

    ``sets`` holds computed sets or other results worth showing, ``stats``
    holds counts of what was examined (e.g. how many structures a check
    covered).  Flag order is insertion order; JSON output sorts keys.
    """

    name: str
    flags: dict[str, bool] = field(default_factory=dict)
    counterexample: dict[str, Any] = field(default_factory=dict)
    sets: dict[str, Any] = field(default_factory=dict)
    stats: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def record(self, flag: str, ok: bool, counterexample: Any = None) -> bool:
        """Set ``flag``; a false value requires a counterexample.

        A flag that has already failed stays failed, keeping its first
        counterexample (callers feed cases in canonical order).
        """
        ok = bool(ok)
        if not ok and counterexample is None:
            raise ReportError(f"flag {flag!r} is false but has no counterexample")
        if self.flags.get(flag) is False:
            return False
        self.flags[flag] = ok
        if not ok:
            self.counterexample[flag] = counterexample
        return ok

    def merge(self, other: "Report", prefix: str = "") -> None:
        for flag, ok in other.flags.items():
            self.record(prefix + flag, ok, other.counterexample.get(flag))
        for key, value in other.stats.items():
            if isinstance(value, int) and isinstance(self.stats.get(prefix + key), int):
                self.stats[prefix + key] += value
            else:
                self.stats.setdefault(prefix + key, value)

    @property
    def passed(self) -> bool:
        return all(self.flags.values())

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def failures(self) -> list[str]:
        return [k for k, ok in self.flags.items() if not ok]

    def as_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status,
            "flags": dict(self.flags),
            "counterexample": dict(self.counterexample),
            "sets": dict(self.sets),
            "stats": dict(self.stats),
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"{self.name}: {self.status.upper()}"]
        width = max((len(k) for k in self.flags), default=0)
        for flag, ok in self.flags.items():
            lines.append(f"  {flag.ljust(width)}  {'pass' if ok else 'FAIL'}")
            if not ok:
                lines.append(f"    counterexample: {json.dumps(self.counterexample[flag], sort_keys=True)}")
        for key, value in self.sets.items():
            lines.append(f"  {key}: {json.dumps(value, sort_keys=True)}")
        for key, value in self.stats.items():
            lines.append(f"  [{key}] {value}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines) + "\n"


def report_emit(report: Report, fmt: str = "text") -> bytes:
    if fmt == "json":
        return report.to_json().encode("utf-8")
    if fmt == "text":
        return report.to_text().encode("utf-8")
    raise ReportError(f"unknown format {fmt!r}")
