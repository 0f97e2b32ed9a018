"""Claim and verification-report data shared by the scenario verifiers.

A claim is data, never code: scenarios store the asserted outcomes they came
with, the verifier computes the actual values, and each claim ends up
confirmed, refuted or (for computed-but-unclaimed checks) unclaimed.  Refuted
claims are meaningful output, not tool failures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

CONFIRMED = "confirmed"
REFUTED = "refuted"
UNCLAIMED = "unclaimed"
ERROR = "error"

# Convention notes attached to reports so disagreements are attributable.
NOTE_CURVATURE_SIGN = (
    "curvature convention: R(X,Y)Z = DxDyZ - DyDxZ - D[X,Y]Z, "
    "sec(X,Y) = <R(X,Y)Y,X>/(<X,X><Y,Y>-<X,Y>^2); unit round 3-sphere has sec +1"
)
NOTE_PARA_NIJENHUIS = (
    "para-complex Nijenhuis: N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] + [X,Y]"
)
NOTE_CIRCLE_WEIGHT = (
    "product metric on the circle-times-(pseudo)sphere total space gives the "
    "circle factor weight +1"
)
NOTE_OCTONION_ACTION = (
    "octonion action validity checks generator squares and pairwise "
    "anticommutation; matrix products associate, so the full signed product "
    "table is not realizable and composite relations are not checked"
)


@dataclass(frozen=True)
class Claim:
    """One asserted outcome: a check name, an optional structure, an expected value."""

    check: str
    expected: Any
    structure: str | None = None
    note: str = ""

    def key(self) -> tuple[str, str | None]:
        return (self.check, self.structure)


@dataclass(frozen=True)
class CheckResult:
    name: str
    structure: str | None
    claimed: Any
    computed: Any
    status: str
    detail: str = ""

    def key(self) -> tuple[str, str | None]:
        return (self.name, self.structure)


@dataclass(frozen=True)
class VerificationReport:
    scenario_id: str
    checks: tuple[CheckResult, ...]
    decisions: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        """True when nothing was refuted and nothing errored."""
        return all(c.status not in (REFUTED, ERROR) for c in self.checks)

    def counts(self) -> dict[str, int]:
        out = {CONFIRMED: 0, REFUTED: 0, UNCLAIMED: 0, ERROR: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def find(self, name: str, structure: str | None = None) -> CheckResult:
        for c in self.checks:
            if c.name == name and c.structure == structure:
                return c
        raise KeyError((name, structure))


def agrees(name: str, expected: Any, computed: Any) -> bool:
    """Compare a claim's expected value against the computed one per check type."""
    if name == "einstein":
        if isinstance(expected, dict):
            lam = expected.get("lambda")
            if not computed["is_einstein"]:
                return False
            return lam is None or computed["lambda"] == lam
        return bool(expected) == computed["is_einstein"]
    if name in ("base_constant_curvature", "total_constant_curvature"):
        want_const = expected["constant"] if isinstance(expected, dict) else bool(expected)
        if computed["constant"] != want_const:
            return False
        want_value = expected.get("value") if isinstance(expected, dict) else None
        return want_value is None or computed["value"] == want_value
    return expected == computed


def match_claim(pending: dict, name: str, structure: str | None, computed: Any,
                detail: str = "") -> CheckResult:
    """Consume a pending claim for (name, structure) and grade the computed value."""
    claim = pending.pop((name, structure), None)
    if claim is None:
        return CheckResult(name, structure, None, computed, UNCLAIMED, detail)
    status = CONFIRMED if agrees(name, claim.expected, computed) else REFUTED
    return CheckResult(name, structure, claim.expected, computed, status, detail)
