"""Vertical/horizontal splitting of a metric Lie algebra and submersion checks.

Given (g, <.,.>, h) with h a subalgebra, the form non-degenerate on h and
ad(h)-invariant, the coset projection G -> G/H is a pseudo-Riemannian
submersion whose fiber geometry is computable entirely on the Lie algebra:
the vertical space is h, the horizontal space its orthogonal complement.
This module builds that splitting, checks anti-invariance and Lagrangian-ness
of endomorphism structures, computes the fundamental tensors of the
submersion, and evaluates base sectional curvature through the horizontal
curvature correction formula

    sec_B(X,Y) = sec_M(X,Y) + 3 |A_XY|^2 / Q(X,Y),   A_XY = vertical(nabla_X Y).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Union

from .geometry import (
    ConnectionTable,
    DegeneratePlane,
    ScanResult,
    einstein_check,
    levi_civita,
    plane_q,
    sectional,
    sectional_scan,
)
from .liealg import (
    MetricLieAlgebra,
    SubalgebraDecl,
    bracket,
    is_ad_invariant,
    is_subalgebra,
)
from .linalg import (
    DegenerateRestriction,
    Matrix,
    Subspace,
    Vector,
    ZERO,
    inverse,
    mat_vec,
    orth_complement,
    restrict_form,
    transpose,
    vec_add,
    vec_is_zero,
    vec_scale,
    vector,
    zero_vector,
)
from .report import (
    Claim,
    CheckResult,
    ERROR,
    NOTE_CURVATURE_SIGN,
    NOTE_OCTONION_ACTION,
    NOTE_PARA_NIJENHUIS,
    VerificationReport,
    match_claim,
)
from .structures import AlgebraAction, StructureEndo, check_action, check_compatibility, is_integrable

Structure = Union[StructureEndo, AlgebraAction]


class NotSubalgebra(Exception):
    """The declared span is not closed under the bracket."""


class NotAdInvariant(Exception):
    """The metric is not invariant under the adjoint action of the subalgebra."""


@dataclass(frozen=True)
class SplitFrame:
    """Orthogonal splitting g = vertical + horizontal for one scenario."""

    mla: MetricLieAlgebra
    vertical: Subspace
    horizontal: Subspace
    _solver: Matrix  # inverse of the stacked-basis coordinate matrix

    @property
    def dim(self) -> int:
        return self.mla.dim

    def coordinates(self, v: Vector) -> Vector:
        """Coefficients of v over (vertical basis, horizontal basis)."""
        return mat_vec(self._solver, v)

    def project(self, v: Vector) -> tuple[Vector, Vector]:
        """Unique decomposition v = v_vertical + v_horizontal."""
        coeffs = self.coordinates(v)
        nv = self.vertical.dim
        vert = zero_vector(self.dim)
        for c, b in zip(coeffs[:nv], self.vertical.basis):
            if c != 0:
                vert = vec_add(vert, vec_scale(c, b))
        horiz = tuple(a - b for a, b in zip(v, vert))
        return vert, horiz

    def vertical_part(self, v: Vector) -> Vector:
        return self.project(v)[0]

    def horizontal_part(self, v: Vector) -> Vector:
        return self.project(v)[1]


def build(mla: MetricLieAlgebra, h: SubalgebraDecl | Subspace) -> SplitFrame:
    """Build the splitting, checking every hypothesis of the construction.

    Raises NotSubalgebra, DegenerateRestriction or NotAdInvariant naming the
    violated hypothesis.
    """
    span = h.span if isinstance(h, SubalgebraDecl) else h
    if not is_subalgebra(mla.algebra, span):
        raise NotSubalgebra("the declared span is not closed under the bracket")
    if span.dim and restrict_form(span, mla.form).det() == 0:
        raise DegenerateRestriction("metric restricts degenerately to the subalgebra")
    if not is_ad_invariant(mla, span):
        raise NotAdInvariant("metric is not invariant under the adjoint action of the subalgebra")
    horizontal = orth_complement(span, mla.form)
    if horizontal.dim and restrict_form(horizontal, mla.form).det() == 0:
        raise DegenerateRestriction("metric restricts degenerately to the horizontal space")
    stacked = tuple(span.basis) + tuple(horizontal.basis)
    solver = inverse(transpose(stacked)) if stacked else ()
    return SplitFrame(mla, span, horizontal, solver)


def _structure_endos(structure: Structure) -> tuple[StructureEndo, ...]:
    if isinstance(structure, AlgebraAction):
        return structure.endos()
    return (structure,)


def check_anti_invariant(frame: SplitFrame, structure: Structure) -> bool:
    """True iff every (generator) endomorphism maps the vertical space into the horizontal."""
    for endo in _structure_endos(structure):
        for v in frame.vertical.basis:
            if not frame.horizontal.contains(endo.apply(v)):
                return False
    return True


def is_lagrangian(frame: SplitFrame, structure: Structure) -> bool:
    """Anti-invariant with the image of the vertical space filling the horizontal."""
    if not check_anti_invariant(frame, structure):
        return False
    return 2 * frame.vertical.dim == frame.dim


def oneill_T(frame: SplitFrame, conn: ConnectionTable) -> tuple[tuple[Vector, ...], ...]:
    """Fiber second-fundamental-form components: horizontal part of nabla_U V."""
    vb = frame.vertical.basis
    return tuple(
        tuple(frame.horizontal_part(_nabla(conn, u, v)) for v in vb) for u in vb
    )


def oneill_A(frame: SplitFrame, conn: ConnectionTable) -> tuple[tuple[Vector, ...], ...]:
    """Horizontal non-integrability components: vertical part of nabla_X Y."""
    hb = frame.horizontal.basis
    return tuple(
        tuple(frame.vertical_part(_nabla(conn, x, y)) for y in hb) for x in hb
    )


def _nabla(conn: ConnectionTable, x: Vector, y: Vector) -> Vector:
    from .geometry import nabla

    return nabla(conn, x, y)


@dataclass(frozen=True)
class FibersReport:
    totally_geodesic: bool
    minimal: bool


def fibers_report(frame: SplitFrame, conn: ConnectionTable) -> FibersReport:
    """Totally geodesic iff T vanishes; minimal iff the metric trace of T does."""
    t = oneill_T(frame, conn)
    tg = all(vec_is_zero(v) for row in t for v in row)
    k = frame.vertical.dim
    if k == 0:
        return FibersReport(True, True)
    gv_inv = inverse(restrict_form(frame.vertical, frame.mla.form).gram)
    mean = zero_vector(frame.dim)
    for a in range(k):
        for b in range(k):
            if gv_inv[a][b] != 0:
                mean = vec_add(mean, vec_scale(gv_inv[a][b], t[a][b]))
    return FibersReport(tg, vec_is_zero(mean))


def horizontal_integrable(frame: SplitFrame) -> bool:
    """True iff brackets of horizontal basis pairs stay horizontal."""
    hb = frame.horizontal.basis
    for i, x in enumerate(hb):
        for y in hb[i + 1:]:
            if not frame.horizontal.contains(bracket(frame.mla.algebra, x, y)):
                return False
    return True


def base_sectional(frame: SplitFrame, x: Vector, y: Vector,
                   conn: ConnectionTable | None = None) -> Fraction:
    """Base sectional curvature of the plane spanned by horizontal x, y."""
    if not (frame.horizontal.contains(x) and frame.horizontal.contains(y)):
        raise ValueError("plane vectors must be horizontal")
    if conn is None:
        conn = levi_civita(frame.mla)
    q = plane_q(frame.mla, x, y)
    if q == 0:
        raise DegeneratePlane("horizontal plane is degenerate")
    a = frame.vertical_part(_nabla(conn, x, y))
    return sectional(frame.mla, x, y, conn=conn) + 3 * frame.mla.inner(a, a) / q


@lru_cache(maxsize=64)
def base_scan(frame: SplitFrame, extra_planes: int = 8, seed: int = 20241) -> ScanResult:
    """Base sectional curvature over horizontal coordinate planes and random ones."""
    conn = levi_civita(frame.mla)
    hb = frame.horizontal.basis
    planes: list[tuple[Vector, Vector]] = []
    for i in range(len(hb)):
        for j in range(i + 1, len(hb)):
            planes.append((hb[i], hb[j]))
    rng = random.Random(seed)
    made = 0
    while made < extra_planes and len(hb) >= 2:
        coeffs_x = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in hb]
        coeffs_y = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in hb]
        x = zero_vector(frame.dim)
        y = zero_vector(frame.dim)
        for c, b in zip(coeffs_x, hb):
            x = vec_add(x, vec_scale(c, b))
        for c, b in zip(coeffs_y, hb):
            y = vec_add(y, vec_scale(c, b))
        if vec_is_zero(x) or vec_is_zero(y):
            continue
        planes.append((x, y))
        made += 1

    value: Fraction | None = None
    used = 0
    skipped = 0
    constant = True
    for x, y in planes:
        if plane_q(frame.mla, x, y) == 0:
            skipped += 1
            continue
        s = base_sectional(frame, x, y, conn=conn)
        used += 1
        if value is None:
            value = s
        elif s != value:
            constant = False
    if used == 0:
        return ScanResult(True, None, 0, skipped)
    return ScanResult(constant, value if constant else None, used, skipped)


@dataclass(frozen=True)
class SubmersionScenario:
    """One instance of the coset construction together with its claims."""

    mla: MetricLieAlgebra
    h: SubalgebraDecl
    structures: tuple[Structure, ...] = ()
    claims: tuple[Claim, ...] = ()





def verify_scenario(scenario: SubmersionScenario, scenario_id: str = "scenario") -> VerificationReport:
    """Run every applicable check and reconcile the results with the claims.

    Errors in individual checks are recorded without aborting the rest.
    """
    checks: list[CheckResult] = []
    pending = {c.key(): c for c in scenario.claims}
    mla = scenario.mla
    decisions = [NOTE_CURVATURE_SIGN, NOTE_PARA_NIJENHUIS]

    frame = None
    try:
        frame = build(mla, scenario.h)
        checks.append(match_claim(pending, "valid_construction", None, True,
                             detail=f"vertical dim {frame.vertical.dim}, horizontal dim {frame.horizontal.dim}"))
    except (NotSubalgebra, DegenerateRestriction, NotAdInvariant) as exc:
        claim = pending.pop(("valid_construction", None), None)
        checks.append(CheckResult("valid_construction", None,
                                  claim.expected if claim else None,
                                  False, ERROR, f"{type(exc).__name__}: {exc}"))

    checks.append(match_claim(pending, "bi_invariant", None, is_ad_invariant(mla)))

    conn = None
    try:
        conn = levi_civita(mla)
    except Exception as exc:  # degenerate metric: record once, skip geometry
        checks.append(CheckResult("connection", None, None, None, ERROR, str(exc)))

    for structure in scenario.structures:
        sname = structure.name
        if isinstance(structure, AlgebraAction):
            ok = check_action(structure, mla.form)
            checks.append(match_claim(pending, "action_valid", sname, ok,
                                 detail=f"{structure.table.kind} relations"))
            if structure.table.kind == "octonion":
                decisions.append(NOTE_OCTONION_ACTION)
        else:
            law = structure.satisfies_kind_law()
            checks.append(match_claim(pending, "kind_law", sname, law, detail=structure.kind))
            checks.append(match_claim(pending, "compatible", sname,
                                 check_compatibility(structure, mla.form), detail=structure.kind))
            if law:
                checks.append(match_claim(pending, "integrable", sname,
                                     is_integrable(mla.algebra, structure)))
            else:
                claim = pending.pop(("integrable", sname), None)
                checks.append(CheckResult("integrable", sname,
                                          claim.expected if claim else None,
                                          None, ERROR, "kind law fails; Nijenhuis undefined"))
        if frame is not None:
            anti = check_anti_invariant(frame, structure)
            checks.append(match_claim(pending, "anti_invariant", sname, anti))
            if not isinstance(structure, AlgebraAction):
                lag = is_lagrangian(frame, structure)
                checks.append(match_claim(pending, "lagrangian", sname, lag,
                                     detail="" if anti else "not anti-invariant"))

    if frame is not None and conn is not None:
        fibers = fibers_report(frame, conn)
        checks.append(match_claim(pending, "fibers_totally_geodesic", None, fibers.totally_geodesic))
        checks.append(match_claim(pending, "fibers_minimal", None, fibers.minimal))
        hint = horizontal_integrable(frame)
        checks.append(match_claim(pending, "horizontal_integrable", None, hint))
        scan = base_scan(frame)
        checks.append(match_claim(pending, "base_constant_curvature", None,
                             {"constant": scan.constant, "value": scan.value},
                             detail=f"{scan.planes} plane(s), {scan.skipped} degenerate skipped"))

    if conn is not None:
        total = sectional_scan(mla)
        checks.append(match_claim(pending, "total_constant_curvature", None,
                             {"constant": total.constant, "value": total.value},
                             detail=f"{total.planes} plane(s), {total.skipped} degenerate skipped"))
        result = einstein_check(mla)
        checks.append(match_claim(pending, "einstein", None,
                             {"is_einstein": result.is_einstein, "lambda": result.lam}))

    for claim in pending.values():
        checks.append(CheckResult(claim.check, claim.structure, claim.expected, None,
                                  ERROR, "claim names a check this scenario never computed"))

    return VerificationReport(scenario_id, tuple(checks), tuple(dict.fromkeys(decisions)))
