"""Small report containers shared by the checking routines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Outcome of one named check; ``witness`` names the first counterexample."""

    passed: bool
    witness: tuple[str, ...] | None = None
    note: str = ""

    def to_json(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "witness": list(self.witness) if self.witness is not None else None,
            "note": self.note,
        }


@dataclass
class Report:
    """Ordered collection of verdicts with a title."""

    title: str
    results: dict[str, Verdict] = field(default_factory=dict)

    def add(self, key: str, passed: bool, witness=None, note: str = "") -> Verdict:
        v = Verdict(bool(passed), None if witness is None else tuple(str(w) for w in witness), note)
        self.results[key] = v
        return v

    @property
    def ok(self) -> bool:
        return all(v.passed for v in self.results.values())

    def __getitem__(self, key: str) -> Verdict:
        return self.results[key]

    def __contains__(self, key: str) -> bool:
        return key in self.results

    def failures(self) -> list[str]:
        return [k for k, v in self.results.items() if not v.passed]

    def to_json(self) -> dict[str, Any]:
        return {
            "title": self.title,
            "ok": self.ok,
            "results": {k: v.to_json() for k, v in self.results.items()},
        }

    def format(self) -> str:
        lines = [self.title]
        width = max((len(k) for k in self.results), default=0)
        for key, v in self.results.items():
            status = "pass" if v.passed else "FAIL"
            line = f"  {key.ljust(width)}  {status}"
            if v.witness is not None:
                line += "  witness=(" + ", ".join(v.witness) + ")"
            if v.note:
                line += f"  {v.note}"
            lines.append(line)
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.format()
