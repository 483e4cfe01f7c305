from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of one theorem check on one lattice.

    ``status`` is ``"pass"``, ``"fail"``, ``"skipped"`` (hypotheses not met in
    strict mode) or ``"info"`` (hypotheses not met, run anyway in forced mode;
    such a result never counts as a failure).
    """

    theorem: str
    passed: bool
    witness: tuple | None = None
    status: str = ""
    detail: str = ""

    def __post_init__(self):
        if not self.status:
            object.__setattr__(self, "status", "pass" if self.passed else "fail")
        if self.witness is not None:
            object.__setattr__(self, "witness", tuple(int(w) for w in self.witness))

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def to_dict(self) -> dict:
        d = {
            "theorem": self.theorem,
            "pass": self.passed,
            "witness": list(self.witness) if self.witness is not None else None,
            "status": self.status,
        }
        if self.detail:
            d["detail"] = self.detail
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def check(name: str, witness=None, detail: str = "") -> TheoremReport:
    """Pass when ``witness`` is None, otherwise fail with it."""
    return TheoremReport(name, witness is None, witness, detail=detail)


def skipped(name: str, missing: str) -> TheoremReport:
    return TheoremReport(name, True, None, status="skipped", detail=f"hypothesis not met: {missing}")
