from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Certificate:
    """A verdict plus the data needed to re-check it.

    ``status`` is ``"certified"`` or ``"inconclusive"``; an inconclusive
    certificate never asserts the negation of ``claim``.
    """

    claim: str
    method: str
    witness: dict[str, Any] = field(default_factory=dict)
    trace: list[Any] = field(default_factory=list)
    permanent_value: int | None = None
    status: str = "certified"

    @property
    def certified(self) -> bool:
        return self.status == "certified"

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "method": self.method,
            "status": self.status,
            "witness": self.witness,
            "trace": self.trace,
            "permanent_value": self.permanent_value,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Certificate":
        return cls(
            claim=data["claim"],
            method=data["method"],
            witness=data.get("witness", {}),
            trace=data.get("trace", []),
            permanent_value=data.get("permanent_value"),
            status=data.get("status", "certified"),
        )
