"""Circle-times-sphere total spaces that are not Lie groups.

The total space is S^1 x N where N is the unit sphere or a pseudo-sphere
(<x,x> = -1) inside R^m, and R^m is identified with a power of the complex or
quaternion algebra so imaginary units act coordinatewise.  The tangent bundle
is trivialized by sending the circle direction to the outward slot Theta and
identifying T(N) with the ambient orthogonal complement of Theta, so
anti-invariance becomes a family of pointwise inner-product checks at sampled
points.  Unlike the Lie-theoretic modules this one works in binary64; sphere
points are irrational, so all checks carry an explicit tolerance.

The circle factor carries weight +1 in the product metric regardless of the
ambient signature.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence

from .algebras import AlgebraTable, builtin
from .report import (
    Claim,
    CheckResult,
    ERROR,
    NOTE_CIRCLE_WEIGHT,
    VerificationReport,
    match_claim,
)

CIRCLE_WEIGHT = 1.0

UNIT_NAMES = {1: "i", 2: "j", 3: "k"}


class SamplingFailure(Exception):
    """Could not draw a point satisfying the pseudo-sphere constraint."""


@dataclass(frozen=True)
class AmbientForm:
    """Diagonal indefinite form on R^m given by a sign per coordinate."""

    signs: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("ambient form signs must be +1 or -1")

    @property
    def dim(self) -> int:
        return len(self.signs)

    def inner(self, v: Sequence[float], w: Sequence[float]) -> float:
        return sum(s * a * b for s, a, b in zip(self.signs, v, w))


def euclidean(m: int) -> AmbientForm:
    return AmbientForm((1,) * m)


def indefinite(neg: int, m: int) -> AmbientForm:
    """First ``neg`` coordinates timelike, the rest spacelike."""
    return AmbientForm((-1,) * neg + (1,) * (m - neg))


@dataclass(frozen=True)
class EmbeddedScenario:
    """One circle-times-sphere case: which sphere, which orbit, which units."""

    case_id: str
    ell: int
    algebra_kind: str  # "complex" or "quaternion"
    ambient: AmbientForm
    sphere_level: int  # +1 for the sphere, -1 for the pseudo-sphere
    orbit: str  # "circle", "sphere" or "both"
    units: tuple[int, ...]  # imaginary unit indices whose action is checked
    claims: tuple[Claim, ...] = ()

    def __post_init__(self):
        table = builtin(self.algebra_kind)
        if self.ambient.dim != self.ell * table.dim:
            raise ValueError("ambient dimension must be ell * algebra dim")
        if self.orbit not in ("circle", "sphere", "both"):
            raise ValueError(f"unknown orbit kind {self.orbit!r}")
        if self.sphere_level not in (1, -1):
            raise ValueError("sphere level must be +1 or -1")

    @property
    def table(self) -> AlgebraTable:
        return builtin(self.algebra_kind)


def unit_name(index: int) -> str:
    return UNIT_NAMES.get(index, f"e{index}")


def apply_unit(table: AlgebraTable, unit: int, v: Sequence[float]) -> list[float]:
    """Left multiplication by basis unit e_unit, blockwise over R^m = A^ell."""
    d = table.dim
    if len(v) % d:
        raise ValueError("vector length is not a multiple of the algebra dimension")
    out = [0.0] * len(v)
    for base in range(0, len(v), d):
        for j in range(d):
            x = v[base + j]
            if x == 0.0:
                continue
            sign, k = table.products[unit][j]
            out[base + k] += sign * x
    return out


@dataclass(frozen=True)
class PointFrame:
    """A sampled point with its vertical tangent vectors in ambient coordinates."""

    theta: float
    point: tuple[float, ...]
    vertical: tuple[tuple[float, ...], ...]


def sample_point(scenario: EmbeddedScenario, seed: int, index: int,
                 max_attempts: int = 100) -> PointFrame:
    """Deterministic pseudo-random point of S^1 x N plus its vertical space.

    Pseudo-sphere points draw every coordinate but the first timelike one
    uniformly in [-1, 1] and solve for the first coordinate; draws that cannot
    satisfy the constraint are retried up to ``max_attempts``.
    """
    rng = random.Random(seed * 1_000_003 + index)
    m = scenario.ambient.dim
    theta = rng.uniform(0.0, 2.0 * math.pi)
    signs = scenario.ambient.signs

    if scenario.sphere_level == 1:
        for _ in range(max_attempts):
            v = [rng.uniform(-1.0, 1.0) for _ in range(m)]
            n2 = scenario.ambient.inner(v, v)
            if n2 > 1e-4:
                r = math.sqrt(n2)
                point = tuple(x / r for x in v)
                return PointFrame(theta, point, tuple(vertical_space(scenario, point)))
        raise SamplingFailure("could not draw a usable sphere direction")

    for _ in range(max_attempts):
        v = [0.0] + [rng.uniform(-1.0, 1.0) for _ in range(m - 1)]
        rest = sum(s * x * x for s, x in zip(signs[1:], v[1:]))
        # signs[0] * x0^2 + rest = -1 with signs[0] = -1  =>  x0^2 = 1 + rest
        square = 1.0 + rest
        if square <= 1e-8:
            continue
        v[0] = math.copysign(math.sqrt(square), rng.uniform(-1.0, 1.0))
        point = tuple(v)
        return PointFrame(theta, point, tuple(vertical_space(scenario, point)))
    raise SamplingFailure("pseudo-sphere constraint unsatisfiable from drawn directions")


def vertical_space(scenario: EmbeddedScenario, point: Sequence[float]) -> list[tuple[float, ...]]:
    """Vertical vectors of the declared orbit at the given point.

    The circle orbit contributes the trivialized circle direction (Theta
    itself); the sphere orbit contributes i * Theta; the product action both.
    """
    theta_vec = tuple(point)
    i_theta = tuple(apply_unit(scenario.table, 1, point))
    if scenario.orbit == "circle":
        return [theta_vec]
    if scenario.orbit == "sphere":
        return [i_theta]
    return [theta_vec, i_theta]


def tangent_inner(scenario: EmbeddedScenario, point: Sequence[float],
                  v: Sequence[float], w: Sequence[float]) -> float:
    """Product-metric inner product of trivialized tangent vectors at a point.

    Each vector splits into a multiple of Theta (the circle slot, weight
    CIRCLE_WEIGHT) plus an ambient vector orthogonal to Theta (the sphere
    part, measured by the ambient form).
    """
    form = scenario.ambient
    tt = form.inner(point, point)  # sphere level, +/-1 up to rounding
    a = form.inner(v, point) / tt
    b = form.inner(w, point) / tt
    v_rest = [x - a * t for x, t in zip(v, point)]
    w_rest = [x - b * t for x, t in zip(w, point)]
    return a * b * CIRCLE_WEIGHT + form.inner(v_rest, w_rest)


@dataclass(frozen=True)
class PointwiseReport:
    passed: bool
    max_violation: float
    samples: int
    tol: float
    per_unit: tuple[tuple[str, float], ...]


def check_anti_invariance_pointwise(scenario: EmbeddedScenario, n_samples: int,
                                    tol: float, seed: int = 0,
                                    units: tuple[int, ...] | None = None) -> PointwiseReport:
    """Max |<u . v, w>| over samples, units u and vertical pairs (v, w)."""
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if units is None:
        units = scenario.units
    worst = {u: 0.0 for u in units}
    for index in range(n_samples):
        frame = sample_point(scenario, seed, index)
        for u in units:
            for v in frame.vertical:
                uv = apply_unit(scenario.table, u, v)
                for w in frame.vertical:
                    violation = abs(tangent_inner(scenario, frame.point, uv, w))
                    if violation > worst[u]:
                        worst[u] = violation
    max_violation = max(worst.values())
    per_unit = tuple((unit_name(u), worst[u]) for u in units)
    return PointwiseReport(max_violation <= tol, max_violation, n_samples, tol, per_unit)


def verify_embedded(scenario: EmbeddedScenario, scenario_id: str | None = None,
                    seed: int = 0, samples: int = 256, tol: float = 1e-9) -> VerificationReport:
    """Check the scenario's sampled-point properties against its claims."""
    pending = {c.key(): c for c in scenario.claims}
    checks: list[CheckResult] = []

    level_err = 0.0
    tangency_err = 0.0
    for index in range(samples):
        frame = sample_point(scenario, seed, index)
        level_err = max(level_err,
                        abs(scenario.ambient.inner(frame.point, frame.point) - scenario.sphere_level))
        if scenario.orbit in ("sphere", "both"):
            i_theta = frame.vertical[-1]
            tangency_err = max(tangency_err,
                               abs(scenario.ambient.inner(i_theta, frame.point)))
    checks.append(match_claim(pending, "on_sphere_level", None, level_err <= tol,
                              detail=f"max |<p,p> - ({scenario.sphere_level})| = {level_err:.3e}"))
    if scenario.orbit in ("sphere", "both"):
        checks.append(match_claim(pending, "vertical_tangent", None, tangency_err <= tol,
                                  detail=f"max |<i.p, p>| = {tangency_err:.3e}"))

    for u in scenario.units:
        rep = check_anti_invariance_pointwise(scenario, samples, tol, seed=seed, units=(u,))
        checks.append(match_claim(
            pending, "anti_invariant", unit_name(u), rep.passed,
            detail=f"max violation {rep.max_violation:.3e} over {samples} samples, tol {tol:g}"))

    for claim in pending.values():
        checks.append(CheckResult(claim.check, claim.structure, claim.expected, None,
                                  ERROR, "claim names a check this scenario never computed"))

    return VerificationReport(scenario_id or scenario.case_id, tuple(checks),
                              (NOTE_CIRCLE_WEIGHT,))
