"""Check records and machine-readable audit reports.

Every failed check carries a witness (the concrete inputs violating the
property); every record carries a stable check identifier such as
``vector/cash_additivity`` so reports can be diffed across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

SCHEMA_VERSION = 1


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "tolist"):  # numpy scalars and arrays
        return _jsonable(obj.tolist())
    if isinstance(obj, float) and obj != obj:  # NaN
        return "nan"
    if isinstance(obj, float) and obj in (float("inf"), float("-inf")):
        return "inf" if obj > 0 else "-inf"
    return obj


@dataclass
class CheckRecord:
    """Outcome of one audited check.

    ``ok`` is True for a satisfied check, False for a violated one and
    None for purely informational records (values reported, nothing
    asserted).
    """

    check: str
    subject: str
    verdict: str
    ok: bool | None
    trials: int = 0
    max_residual: float = 0.0
    tolerance: float = 0.0
    witness: dict[str, Any] | None = None
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "check": self.check,
            "subject": self.subject,
            "verdict": self.verdict,
            "ok": self.ok,
            "trials": self.trials,
            "max_residual": _jsonable(self.max_residual),
            "tolerance": self.tolerance,
        }
        if self.witness is not None:
            d["witness"] = _jsonable(self.witness)
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class AuditReport:
    command: str
    config: dict[str, Any]
    seed: int
    records: list[CheckRecord] = field(default_factory=list)

    def add(self, record: CheckRecord) -> CheckRecord:
        self.records.append(record)
        return record

    def extend(self, records) -> None:
        for r in records:
            self.add(r)

    @property
    def n_failed(self) -> int:
        return sum(1 for r in self.records if r.ok is False)

    @property
    def n_passed(self) -> int:
        return sum(1 for r in self.records if r.ok is True)

    @property
    def n_informational(self) -> int:
        return sum(1 for r in self.records if r.ok is None)

    @property
    def exit_code(self) -> int:
        return 1 if self.n_failed else 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "config": _jsonable(self.config),
            "seed": self.seed,
            "records": [r.to_dict() for r in self.records],
            "summary": {
                "passed": self.n_passed,
                "failed": self.n_failed,
                "informational": self.n_informational,
            },
            "exit_code": self.exit_code,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"
