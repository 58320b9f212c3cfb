"""Verification reports and their JSON rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import Cyclotomic, render_scalar


def jsonable(x):
    """Convert exact scalars and containers into JSON-ready values."""
    if isinstance(x, bool) or x is None or isinstance(x, (str, float)):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, (Fraction, Cyclotomic)):
        return render_scalar(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    return str(x)


@dataclass
class Report:
    claim: str
    parameters: dict
    candidates_checked: int = 0
    confirmed: int = 0
    refuted: int = 0
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.refuted == 0

    def refute(self, witness):
        self.refuted += 1
        self.witnesses.append(witness)

    def to_json(self):
        return {
            "claim": self.claim,
            "parameters": jsonable(self.parameters),
            "candidates_checked": self.candidates_checked,
            "confirmed": self.confirmed,
            "refuted": self.refuted,
            "witnesses": jsonable(self.witnesses),
            "details": jsonable(self.details),
            "passed": self.passed,
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def to_text(self):
        status = "PASS" if self.passed else "FAIL"
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        lines = [f"[{status}] {self.claim} ({params})",
                 f"  candidates checked: {self.candidates_checked}",
                 f"  confirmed: {self.confirmed}",
                 f"  refuted: {self.refuted}"]
        for k, v in self.details.items():
            lines.append(f"  {k}: {jsonable(v)}")
        for w in self.witnesses[:10]:
            lines.append(f"  witness: {jsonable(w)}")
        return "\n".join(lines)
