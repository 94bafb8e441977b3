"""Verification reports with exact values serialized as strings."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from ..exactcore import UniPoly, fmt_rational


def _ser(value: Any) -> Any:
    if isinstance(value, UniPoly):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [_ser(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _ser(v) for k, v in value.items()}
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, int):
        return value
    try:
        return fmt_rational(value)
    except (TypeError, ValueError):
        return str(value)


@dataclass
class Failure:
    params: dict
    lhs: Any
    rhs: Any

    def to_json(self) -> dict:
        return {"params": _ser(self.params), "lhs": _ser(self.lhs), "rhs": _ser(self.rhs)}


@dataclass
class VerifyReport:
    identity: str
    spec: str
    plan: dict
    cases_run: int = 0
    cases_skipped: int = 0
    failures: list = field(default_factory=list)
    advisory: bool = False
    details: Optional[dict] = None

    @property
    def status(self) -> str:
        return "pass" if not self.failures else "fail"

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, params: dict, lhs, rhs) -> bool:
        return self.expect(params, lhs == rhs, lhs, rhs)

    def expect(self, params: dict, ok: bool, lhs, rhs) -> bool:
        """Record one case; ``lhs``/``rhs`` are kept only when it fails."""
        self.cases_run += 1
        if not ok:
            self.failures.append(Failure(dict(params), lhs, rhs))
        return ok

    def skip(self) -> None:
        self.cases_skipped += 1

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "spec": self.spec,
            "plan": self.plan,
            "cases_run": self.cases_run,
            "cases_skipped": self.cases_skipped,
            "failures": [f.to_json() for f in self.failures],
            "status": self.status,
        }
        if self.advisory:
            out["advisory"] = True
        if self.details is not None:
            out["details"] = _ser(self.details)
        return out
