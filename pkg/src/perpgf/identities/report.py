"""Structured outcome of one identity or congruence check."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    range_checked: str
    status: str
    counterexample: Optional[dict] = None
    checked: int = 0
    notes: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"status must be 'pass' or 'fail', got {self.status!r}")
        if (self.status == "fail") != (self.counterexample is not None):
            raise ValueError("a failing report needs a counterexample, a passing one must not have one")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "range_checked": self.range_checked,
            "status": self.status,
            "counterexample": _stringify(self.counterexample),
            "checked": str(self.checked),
            "notes": list(self.notes),
        }


def _stringify(x: Any) -> Any:
    # ints go out as decimal strings so no JSON reader can round them
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, dict):
        return {k: _stringify(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_stringify(v) for v in x]
    return x


def make_report(identity_id, range_checked, counterexample=None, checked=0, notes=()):
    return IdentityReport(
        identity_id=identity_id,
        range_checked=range_checked,
        status="fail" if counterexample is not None else "pass",
        counterexample=counterexample,
        checked=checked,
        notes=tuple(notes),
    )
