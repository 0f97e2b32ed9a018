"""JSON scenario files and JSON report documents.

Lie-theoretic scenarios keep every number exact: rationals travel as strings
like "2" or "-1/2", never as floats.  Embedded scenarios are float-based by
nature and use plain JSON numbers plus an explicit tolerance.  Report
serialization uses sorted keys so byte-identical runs diff cleanly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import embedded as emb
from .algebras import builtin
from .liealg import LieAlgebraData, MetricLieAlgebra, SubalgebraDecl, from_brackets
from .linalg import BilinearForm, Subspace, matrix, rational
from .report import Claim, VerificationReport
from .structures import AlgebraAction, StructureEndo
from .submersion import SubmersionScenario


class ScenarioFormatError(Exception):
    """The scenario document is malformed."""


def _frac_str(x: Fraction) -> str:
    return str(x)


def _encode_value(v: Any) -> Any:
    if isinstance(v, Fraction):
        return _frac_str(v)
    if isinstance(v, dict):
        return {k: _encode_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_encode_value(x) for x in v]
    return v


def _decode_expected(check: str, v: Any) -> Any:
    if isinstance(v, dict):
        out = {}
        for k, x in v.items():
            if k in ("value", "lambda") and x is not None:
                out[k] = rational(x)
            else:
                out[k] = x
        return out
    return v


# ---------------------------------------------------------------------------
# Scenario export


def claim_to_json(claim: Claim) -> dict:
    doc = {"check": claim.check, "expected": _encode_value(claim.expected)}
    if claim.structure is not None:
        doc["structure"] = claim.structure
    if claim.note:
        doc["note"] = claim.note
    return doc


def claim_from_json(doc: dict) -> Claim:
    return Claim(doc["check"], _decode_expected(doc["check"], doc["expected"]),
                 structure=doc.get("structure"), note=doc.get("note", ""))


def scenario_to_json(scenario) -> dict:
    if isinstance(scenario, emb.EmbeddedScenario):
        return {
            "type": "embedded",
            "case": scenario.case_id,
            "ell": scenario.ell,
            "algebra": scenario.algebra_kind,
            "ambient_signs": list(scenario.ambient.signs),
            "sphere_level": scenario.sphere_level,
            "orbit": scenario.orbit,
            "units": list(scenario.units),
            "claims": [claim_to_json(c) for c in scenario.claims],
        }
    if not isinstance(scenario, SubmersionScenario):
        raise ScenarioFormatError(f"cannot serialize {type(scenario).__name__}")

    alg = scenario.mla.algebra
    n = alg.dim
    brackets = []
    for i in range(n):
        for j in range(i + 1, n):
            rhs = {str(k): _frac_str(c) for k, c in enumerate(alg.structure[i][j]) if c != 0}
            if rhs:
                brackets.append([i, j, rhs])
    structures = []
    for s in scenario.structures:
        if isinstance(s, AlgebraAction):
            structures.append({
                "action": s.table.kind,
                "name": s.name,
                "generators": {str(i): e.name for i, e in s.generators},
            })
            for _, e in s.generators:
                if not any(d.get("name") == e.name and "matrix" in d for d in structures):
                    structures.append(_endo_to_json(e, role="generator"))
        else:
            structures.append(_endo_to_json(s))
    return {
        "type": "lie",
        "basis": list(alg.labels),
        "brackets": brackets,
        "metric": [[_frac_str(x) for x in row] for row in scenario.mla.form.gram],
        "subalgebra": [[_frac_str(x) for x in row] for row in scenario.h.span.basis],
        "structures": structures,
        "claims": [claim_to_json(c) for c in scenario.claims],
    }


def _endo_to_json(endo: StructureEndo, role: str = "structure") -> dict:
    doc = {
        "name": endo.name,
        "kind": endo.kind,
        "matrix": [[_frac_str(x) for x in row] for row in endo.matrix],
    }
    if role != "structure":
        doc["role"] = role
    return doc


# ---------------------------------------------------------------------------
# Scenario import


def scenario_from_json(doc: dict):
    try:
        kind = doc["type"]
    except (KeyError, TypeError) as exc:
        raise ScenarioFormatError("scenario document needs a 'type' key") from exc
    if kind == "embedded":
        return _embedded_from_json(doc)
    if kind == "lie":
        return _lie_from_json(doc)
    raise ScenarioFormatError(f"unknown scenario type {kind!r}")


def _embedded_from_json(doc: dict) -> emb.EmbeddedScenario:
    try:
        return emb.EmbeddedScenario(
            doc.get("case", "custom"),
            int(doc["ell"]),
            doc["algebra"],
            emb.AmbientForm(tuple(int(s) for s in doc["ambient_signs"])),
            int(doc["sphere_level"]),
            doc["orbit"],
            tuple(int(u) for u in doc["units"]),
            tuple(claim_from_json(c) for c in doc.get("claims", [])),
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise ScenarioFormatError(f"bad embedded scenario: {exc}") from exc


def _lie_from_json(doc: dict) -> SubmersionScenario:
    try:
        labels = tuple(doc["basis"])
        brackets = {}
        for i, j, rhs in doc["brackets"]:
            brackets[(int(i), int(j))] = {int(k): rational(v) for k, v in rhs.items()}
        alg = from_brackets(labels, brackets)
        gram = matrix([[rational(x) for x in row] for row in doc["metric"]])
        mla = MetricLieAlgebra(alg, BilinearForm(gram))
        span = Subspace(alg.dim, matrix([[rational(x) for x in row] for row in doc["subalgebra"]]))
        h = SubalgebraDecl(alg, span)

        # First pass: collect every endomorphism (actions may reference
        # generators that are defined after them in the list).
        endos: dict[str, StructureEndo] = {}
        for s in doc.get("structures", []):
            if "action" not in s:
                endo = StructureEndo(
                    s["name"], s["kind"],
                    matrix([[rational(x) for x in row] for row in s["matrix"]]))
                endos[endo.name] = endo

        # Second pass: rebuild the structure list in document order, skipping
        # endomorphisms that only exist to define an action's generators.
        structures: list = []
        for s in doc.get("structures", []):
            if "action" in s:
                gens = []
                for idx, name in s["generators"].items():
                    if name not in endos:
                        raise ScenarioFormatError(f"action generator {name!r} is not defined")
                    gens.append((int(idx), endos[name]))
                gens.sort()
                structures.append(AlgebraAction(s.get("name", s["action"]),
                                                builtin(s["action"]), tuple(gens)))
            elif s.get("role", "structure") == "structure":
                structures.append(endos[s["name"]])

        claims = tuple(claim_from_json(c) for c in doc.get("claims", []))
        return SubmersionScenario(mla, h, tuple(structures), claims)
    except ScenarioFormatError:
        raise
    except (KeyError, ValueError, TypeError) as exc:
        raise ScenarioFormatError(f"bad scenario document: {exc}") from exc


# ---------------------------------------------------------------------------
# Reports


def report_to_json(report: VerificationReport, timing_ms: float | None = None) -> dict:
    return {
        "id": report.scenario_id,
        "checks": [
            {
                "name": c.name,
                "structure": c.structure,
                "claimed": _encode_value(c.claimed),
                "computed": _encode_value(c.computed),
                "status": c.status,
                "detail": c.detail,
            }
            for c in report.checks
        ],
        "decisions": list(report.decisions),
        "summary": report.counts(),
        "timing_ms": timing_ms,
    }


def dumps_report(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)
