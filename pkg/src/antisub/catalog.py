"""Registry of the built-in example scenarios and the verification runner.

Every entry packages one concrete instance of the coset construction (or one
circle-times-sphere case) together with the outcomes asserted for it.  Claims
are stored as data so a verification run can refute them; refutations surface
in reports instead of being patched over.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

from . import embedded as emb
from .algebras import builtin
from .liealg import (
    LieAlgebraData,
    MetricLieAlgebra,
    SubalgebraDecl,
    abelian,
    direct_sum,
    from_brackets,
)
from .linalg import Subspace, diagonal_form, identity
from .report import Claim, VerificationReport
from .structures import (
    AlgebraAction,
    StructureEndo,
    action_from_left_multiplication,
    compose,
    endo_from_images,
)
from .submersion import SubmersionScenario, verify_scenario


class UnknownId(Exception):
    """No catalog entry with the requested id."""


Scenario = Union[SubmersionScenario, emb.EmbeddedScenario]


class ExampleEntry:
    def __init__(self, entry_id: str, scenario: Scenario, note: str):
        self.id = entry_id
        self.scenario = scenario
        self.note = note

    @property
    def kind(self) -> str:
        return "embedded" if isinstance(self.scenario, emb.EmbeddedScenario) else "lie"


# ---------------------------------------------------------------------------
# Lie algebra building blocks


def su2(labels=("e1", "e2", "e3")) -> LieAlgebraData:
    """Unit-quaternion Lie algebra: [e1,e2]=-2e3, [e2,e3]=-2e1, [e3,e1]=-2e2."""
    return from_brackets(labels, {(0, 1): {2: -2}, (1, 2): {0: -2}, (2, 0): {1: -2}})


def sl2(labels=("f1", "f2", "f3")) -> LieAlgebraData:
    """Trace-free 2x2 matrices: [f1,f2]=2f3, [f2,f3]=-2f1, [f3,f1]=2f2."""
    return from_brackets(labels, {(0, 1): {2: 2}, (1, 2): {0: -2}, (2, 0): {1: 2}})


def circle_su2() -> LieAlgebraData:
    """Circle times unit quaternions: central e0 plus the su2 brackets."""
    return from_brackets(("e0", "e1", "e2", "e3"),
                         {(1, 2): {3: -2}, (2, 3): {1: -2}, (3, 1): {2: -2}})


def line_sl2() -> LieAlgebraData:
    """Line times sl2: central f0 plus the sl2 brackets."""
    return from_brackets(("f0", "f1", "f2", "f3"),
                         {(1, 2): {3: 2}, (2, 3): {1: -2}, (3, 1): {2: 2}})


def hopf_metric(eps) -> MetricLieAlgebra:
    """The one-parameter family diag(eps, eps, 1, 1) on circle x unit quaternions."""
    return MetricLieAlgebra(circle_su2(), diagonal_form([eps, eps, 1, 1]))


def sl2_eighth_killing() -> MetricLieAlgebra:
    """sl2 with one eighth of its Killing form: diag(-1, 1, 1)."""
    return MetricLieAlgebra(sl2(), diagonal_form([-1, 1, 1]))


def line_sl2_metric() -> MetricLieAlgebra:
    """Neutral bi-invariant metric diag(-1, -1, 1, 1) on line x sl2."""
    return MetricLieAlgebra(line_sl2(), diagonal_form([-1, -1, 1, 1]))


def su2_power(count: int, signs=None) -> MetricLieAlgebra:
    """Product of unit-sphere factors, each carrying +/- the round metric."""
    factor = MetricLieAlgebra(su2(), diagonal_form([1, 1, 1]))
    prefixes = ["e", "f", "g", "h", "p", "q", "r", "s"]
    relabel = [[f"{prefixes[k]}{i}" for i in (1, 2, 3)] for k in range(count)]
    return direct_sum([factor] * count, signs=signs, relabel=relabel)


def span_of(alg: LieAlgebraData, *labels: str) -> SubalgebraDecl:
    rows = tuple(alg.basis_vector(lbl) for lbl in labels)
    return SubalgebraDecl(alg, Subspace(alg.dim, rows))


# Structure endomorphisms on circle x su2, transcribed from their image lists.

_HOPF_LABELS = ("e0", "e1", "e2", "e3")


def hopf_J() -> StructureEndo:
    return endo_from_images(_HOPF_LABELS, "J", "complex",
                            {"e0": "e1", "e1": "-e0", "e2": "e3", "e3": "-e2"})


def hopf_Jc() -> StructureEndo:
    return endo_from_images(_HOPF_LABELS, "Jc", "complex",
                            {"e0": "e2", "e2": "-e0", "e3": "e1", "e1": "-e3"})


def hopf_Jt() -> StructureEndo:
    return endo_from_images(_HOPF_LABELS, "Jt", "para_complex",
                            {"e0": "e2", "e2": "e0", "e1": "-e3", "e3": "-e1"})


def hopf_quaternion_action() -> AlgebraAction:
    j = hopf_J()
    jc = hopf_Jc()
    jjc = compose("JJc", j, jc, "complex")
    return AlgebraAction("Q", builtin("quaternion"), ((1, j), (2, jc), (3, jjc)))


def hopf_para_quaternion_action() -> AlgebraAction:
    j = hopf_J()
    jt = hopf_Jt()
    jjt = compose("JJt", j, jt, "para_complex")
    return AlgebraAction("P", builtin("para_quaternion"), ((1, j), (2, jt), (3, jjt)))


def slotwise_blocks(factors: int, slots: int) -> list[list[int]]:
    """Group coordinate (factor k, slot m) into block m: [[0,3,6,...],[1,4,...],...]."""
    return [[k * slots + m for k in range(factors)] for m in range(slots)]


# ---------------------------------------------------------------------------
# Entry construction


def _flat_claims(structure: str, lagrangian: bool, action: bool) -> tuple[Claim, ...]:
    claims = [
        Claim("anti_invariant", True, structure=structure),
        Claim("bi_invariant", True),
        Claim("total_constant_curvature", {"constant": True, "value": Fraction(0)},
              note="flat total space"),
    ]
    if lagrangian:
        claims.append(Claim("lagrangian", True, structure=structure))
    if action:
        claims.append(Claim("action_valid", True, structure=structure))
    return tuple(claims)


def _abelian_entries() -> list[ExampleEntry]:
    entries = []

    # Complex coordinate space over its real axes; projection is Lagrangian.
    alg = abelian(("x1", "y1", "x2", "y2"))
    j = endo_from_images(alg.labels, "J", "complex",
                         {"x1": "y1", "y1": "-x1", "x2": "y2", "y2": "-x2"})
    claims = _flat_claims("J", lagrangian=True, action=False) + (
        Claim("integrable", True, structure="J"),)
    scenario = SubmersionScenario(
        MetricLieAlgebra(alg, diagonal_form([1, 1, 1, 1])),
        span_of(alg, "x1", "x2"), (j,), claims)
    entries.append(ExampleEntry(
        "3.1.1a", scenario,
        "flat Lagrangian Hermitian projection of complex coordinate space onto the real axes"))
    entries.append(ExampleEntry(
        "3.2", scenario,
        "torus quotient of 3.1.1a; the algebraic data is identical, compactness is metadata"))

    alg = abelian(("q0", "q1", "q2", "q3"))
    action = action_from_left_multiplication("Q", builtin("quaternion"), 1)
    scenario = SubmersionScenario(
        MetricLieAlgebra(alg, diagonal_form([1, 1, 1, 1])),
        span_of(alg, "q0"), (action,), _flat_claims("Q", lagrangian=False, action=True))
    entries.append(ExampleEntry(
        "3.1.1b", scenario,
        "flat anti-invariant quaternion projection of quaternion coordinates onto the real slot"))

    alg = abelian(tuple(f"o{i}" for i in range(8)))
    action = action_from_left_multiplication("O", builtin("octonion"), 1)
    scenario = SubmersionScenario(
        MetricLieAlgebra(alg, diagonal_form([1] * 8)),
        span_of(alg, "o0"), (action,), _flat_claims("O", lagrangian=False, action=True))
    entries.append(ExampleEntry(
        "3.1.1c", scenario,
        "flat anti-invariant octonion projection of octonion coordinates onto the real slot"))

    alg = abelian(("e1", "f1", "e2", "f2"))
    jt = endo_from_images(alg.labels, "Jt", "para_complex",
                          {"e1": "f1", "f1": "e1", "e2": "f2", "f2": "e2"})
    claims = (
        Claim("anti_invariant", True, structure="Jt"),
        Claim("lagrangian", True, structure="Jt"),
        Claim("compatible", True, structure="Jt"),
        Claim("kind_law", True, structure="Jt"),
        Claim("total_constant_curvature", {"constant": True, "value": Fraction(0)}),
    )
    scenario = SubmersionScenario(
        MetricLieAlgebra(alg, diagonal_form([1, -1, 1, -1])),
        span_of(alg, "e1", "e2"), (jt,), claims)
    entries.append(ExampleEntry(
        "3.1.2", scenario,
        "flat Lagrangian para-Hermitian projection of split-complex coordinates"))

    alg = abelian(("p0", "p1", "p2", "p3"))
    action = action_from_left_multiplication("P", builtin("para_quaternion"), 1)
    claims = (
        Claim("anti_invariant", True, structure="P"),
        Claim("action_valid", True, structure="P"),
        Claim("total_constant_curvature", {"constant": True, "value": Fraction(0)}),
    )
    scenario = SubmersionScenario(
        MetricLieAlgebra(alg, diagonal_form([1, 1, -1, -1])),
        span_of(alg, "p0"), (action,), claims)
    entries.append(ExampleEntry(
        "3.1.3", scenario,
        "flat anti-invariant para-quaternion projection of split-quaternion coordinates"))
    return entries


def _hopf_entries() -> list[ExampleEntry]:
    entries = []

    claims = (
        Claim("anti_invariant", True, structure="Jc"),
        Claim("lagrangian", True, structure="Jc"),
        Claim("compatible", True, structure="Jc"),
        Claim("action_valid", True, structure="Q",
              note="the four endomorphisms realize a Hermitian quaternion structure"),
        Claim("bi_invariant", True),
        Claim("fibers_minimal", True),
        Claim("fibers_totally_geodesic", False),
        Claim("horizontal_integrable", False),
        Claim("base_constant_curvature", {"constant": True, "value": Fraction(1, 4)},
              note="claimed round base of radius 2; computed value is reported verbatim"),
    )
    scenario = SubmersionScenario(
        hopf_metric(1), span_of(circle_su2(), "e0", "e1"),
        (hopf_Jc(), hopf_quaternion_action()), claims)
    entries.append(ExampleEntry(
        "3.3.1a", scenario,
        "Hopf-type Lagrangian Hermitian submersion of the circle times the unit quaternions"))

    claims = (
        Claim("anti_invariant", True, structure="Jt"),
        Claim("lagrangian", True, structure="Jt"),
        Claim("compatible", True, structure="Jt"),
        Claim("kind_law", True, structure="Jt"),
        Claim("action_valid", True, structure="P",
              note="the four endomorphisms realize a Hermitian para-quaternion structure"),
        Claim("bi_invariant", False),
    )
    scenario = SubmersionScenario(
        hopf_metric(-1), span_of(circle_su2(), "e0", "e1"),
        (hopf_Jt(), hopf_para_quaternion_action()), claims)
    entries.append(ExampleEntry(
        "3.3.1b", scenario,
        "Hopf-type Lagrangian para-Hermitian submersion at the indefinite parameter value"))

    for tag, h_label in (("e0", "e0"), ("e1", "e1")):
        claims = (
            Claim("anti_invariant", True, structure="J"),
            Claim("integrable", True, structure="J"),
            Claim("compatible", True, structure="J"),
            Claim("bi_invariant", False),
        )
        scenario = SubmersionScenario(
            hopf_metric(2), span_of(circle_su2(), h_label), (hopf_J(),), claims)
        entries.append(ExampleEntry(
            f"3.3.2a.{tag}", scenario,
            f"anti-invariant Hermitian submersion with a one-dimensional fiber along {h_label}"))

        claims = (
            Claim("anti_invariant", True, structure="Q"),
            Claim("action_valid", True, structure="Q"),
            Claim("bi_invariant", True),
        )
        scenario = SubmersionScenario(
            hopf_metric(1), span_of(circle_su2(), h_label),
            (hopf_quaternion_action(),), claims)
        entries.append(ExampleEntry(
            f"3.3.2b.{tag}", scenario,
            f"anti-invariant quaternion submersion with fiber along {h_label}"))

        claims = (
            Claim("anti_invariant", True, structure="Jt"),
            Claim("compatible", True, structure="Jt"),
            Claim("bi_invariant", False),
        )
        scenario = SubmersionScenario(
            hopf_metric(-1), span_of(circle_su2(), h_label), (hopf_Jt(),), claims)
        entries.append(ExampleEntry(
            f"3.3.2c.{tag}", scenario,
            f"anti-invariant para-Hermitian submersion with fiber along {h_label}"))

        claims = (
            Claim("anti_invariant", True, structure="P"),
            Claim("action_valid", True, structure="P"),
            Claim("bi_invariant", False),
        )
        scenario = SubmersionScenario(
            hopf_metric(-1), span_of(circle_su2(), h_label),
            (hopf_para_quaternion_action(),), claims)
        entries.append(ExampleEntry(
            f"3.3.2d.{tag}", scenario,
            f"anti-invariant para-quaternion submersion with fiber along {h_label}"))
    return entries


def _sphere_product_entries() -> list[ExampleEntry]:
    entries = []

    two = su2_power(2)
    labels = two.algebra.labels
    j1 = endo_from_images(labels, "J", "complex",
                          {"e1": "f1", "f1": "-e1", "e2": "e3", "e3": "-e2",
                           "f2": "f3", "f3": "-f2"})
    claims = (
        Claim("integrable", True, structure="J"),
        Claim("anti_invariant", True, structure="J"),
        Claim("compatible", True, structure="J"),
        Claim("einstein", {"lambda": Fraction(2)}),
        Claim("bi_invariant", True),
    )
    scenario = SubmersionScenario(two, span_of(two.algebra, "e2", "f2"), (j1,), claims)
    entries.append(ExampleEntry(
        "3.4.1a.i", scenario,
        "Einstein product of two unit spheres mapped onto a product of two smaller spheres"))

    j2 = endo_from_images(labels, "J", "complex",
                          {"e1": "f1", "e2": "f2", "e3": "f3",
                           "f1": "-e1", "f2": "-e2", "f3": "-e3"})
    claims = (
        Claim("integrable", False, structure="J"),
        Claim("anti_invariant", True, structure="J"),
        Claim("compatible", True, structure="J"),
        Claim("einstein", {"lambda": Fraction(2)}),
        Claim("bi_invariant", True),
    )
    scenario = SubmersionScenario(two, span_of(two.algebra, "e1", "e2", "e3"), (j2,), claims)
    entries.append(ExampleEntry(
        "3.4.1a.ii", scenario,
        "Einstein sphere product over one factor; the swap structure is not integrable"))

    neutral = su2_power(2, signs=(1, -1))
    jt1 = endo_from_images(labels, "Jt", "para_complex",
                           {"e1": "f2", "f2": "e1", "f1": "e2", "e2": "f1",
                            "e3": "f3", "f3": "e3"})
    claims = (
        Claim("anti_invariant", True, structure="Jt"),
        Claim("compatible", True, structure="Jt"),
        Claim("kind_law", True, structure="Jt"),
        Claim("bi_invariant", True),
    )
    scenario = SubmersionScenario(neutral, span_of(neutral.algebra, "e1", "f1"), (jt1,), claims)
    entries.append(ExampleEntry(
        "3.4.1b.i", scenario,
        "neutral-signature sphere product; para-Hermitian structure, Ricci reported"))

    jt2 = endo_from_images(labels, "Jt", "para_complex",
                           {"e1": "f1", "e2": "f2", "e3": "f3",
                            "f1": "e1", "f2": "e2", "f3": "e3"})
    claims = (
        Claim("anti_invariant", True, structure="Jt"),
        Claim("compatible", True, structure="Jt"),
        Claim("bi_invariant", True),
    )
    scenario = SubmersionScenario(neutral, span_of(neutral.algebra, "e1", "e2", "e3"), (jt2,), claims)
    entries.append(ExampleEntry(
        "3.4.1b.ii", scenario,
        "neutral-signature sphere product over one factor with the swap para-structure"))

    # Four factors regrouped into three quaternion blocks slot by slot; the
    # first factor occupies the real slots, so it is the fiber subalgebra.
    four = su2_power(4)
    qact = action_from_left_multiplication("Q", builtin("quaternion"), 3,
                                           block_index=slotwise_blocks(4, 3))
    claims = (
        Claim("anti_invariant", True, structure="Q"),
        Claim("action_valid", True, structure="Q"),
        Claim("einstein", {"lambda": Fraction(2)}),
        Claim("bi_invariant", True),
    )
    scenario = SubmersionScenario(four, span_of(four.algebra, "e1", "e2", "e3"), (qact,), claims)
    entries.append(ExampleEntry(
        "3.4.2a", scenario,
        "Einstein product of four unit spheres with a blockwise quaternion action"))

    four_neutral = su2_power(4, signs=(1, 1, -1, -1))
    pact = action_from_left_multiplication("P", builtin("para_quaternion"), 3,
                                           block_index=slotwise_blocks(4, 3))
    claims = (
        Claim("anti_invariant", True, structure="P"),
        Claim("action_valid", True, structure="P"),
        Claim("bi_invariant", True),
    )
    scenario = SubmersionScenario(four_neutral, span_of(four_neutral.algebra, "e1", "e2", "e3"),
                                  (pact,), claims)
    entries.append(ExampleEntry(
        "3.4.2b", scenario,
        "neutral product of four unit spheres with a blockwise para-quaternion action"))

    eight = su2_power(8)
    oact = action_from_left_multiplication("O", builtin("octonion"), 3,
                                           block_index=slotwise_blocks(8, 3))
    claims = (
        Claim("anti_invariant", True, structure="O"),
        Claim("action_valid", True, structure="O"),
        Claim("einstein", {"lambda": Fraction(2)}),
        Claim("bi_invariant", True),
    )
    scenario = SubmersionScenario(eight, span_of(eight.algebra, "e1", "e2", "e3"), (oact,), claims)
    entries.append(ExampleEntry(
        "3.4.3", scenario,
        "Einstein product of eight unit spheres with a blockwise octonion action"))
    return entries


def _negative_curvature_entries() -> list[ExampleEntry]:
    entries = []

    for i in (1, 2, 3):
        mla = sl2_eighth_killing()
        claims = (
            Claim("base_constant_curvature", {"constant": True, "value": Fraction(-1, 4)},
                  note="claimed hyperbolic base; computed value is reported verbatim"),
            Claim("bi_invariant", True),
        )
        scenario = SubmersionScenario(mla, span_of(mla.algebra, f"f{i}"), (), claims)
        entries.append(ExampleEntry(
            f"3.4.H{i}", scenario,
            f"one-parameter quotient of the Lorentzian special linear group along f{i}"))

    mla = line_sl2_metric()
    labels = mla.algebra.labels
    j = endo_from_images(labels, "J", "complex",
                         {"f0": "f1", "f1": "-f0", "f2": "f3", "f3": "-f2"})
    jt = endo_from_images(labels, "Jt", "para_complex",
                          {"f0": "f2", "f2": "f0", "f1": "-f3", "f3": "-f1"})
    jjt = compose("JJt", j, jt, "para_complex")
    pact = AlgebraAction("P", builtin("para_quaternion"), ((1, j), (2, jt), (3, jjt)))

    claims = (
        Claim("anti_invariant", True, structure="J"),
        Claim("anti_invariant", True, structure="Jt"),
        Claim("anti_invariant", True, structure="P"),
        Claim("integrable", True, structure="J"),
        Claim("integrable", True, structure="Jt"),
        Claim("compatible", True, structure="J"),
        Claim("compatible", True, structure="Jt"),
        Claim("action_valid", True, structure="P"),
        Claim("bi_invariant", True),
    )
    scenario = SubmersionScenario(mla, span_of(mla.algebra, "f0"), (j, jt, pact), claims)
    entries.append(ExampleEntry(
        "E3.6.1", scenario,
        "line times special linear group collapsed along the central line"))

    for case, h_labels, note in (
        ("E3.6.2", ("f1",), "fiber along the rotation generator"),
        ("E3.6.3", ("f2",), "fiber along a boost generator"),
    ):
        claims = (
            Claim("anti_invariant", True, structure="J"),
            Claim("anti_invariant", True, structure="Jt"),
            Claim("anti_invariant", True, structure="P"),
        )
        scenario = SubmersionScenario(mla, span_of(mla.algebra, *h_labels), (j, jt, pact), claims)
        entries.append(ExampleEntry(case, scenario,
                                    f"line times special linear group, {note}"))

    claims = (
        Claim("anti_invariant", True, structure="J"),
        Claim("base_constant_curvature", {"constant": True, "value": Fraction(-1, 4)},
              note="claimed Lorentzian hyperbolic base; computed value is reported verbatim"),
    )
    scenario = SubmersionScenario(mla, span_of(mla.algebra, "f0", "f2"), (j,), claims)
    entries.append(ExampleEntry(
        "E3.6.4", scenario,
        "two-dimensional fiber spanned by the central line and a boost"))
    return entries


def _embedded_entries() -> list[ExampleEntry]:
    entries = []
    base_claims = (Claim("on_sphere_level", True),)
    tangent_claim = (Claim("vertical_tangent", True),)
    anti_i = (Claim("anti_invariant", True, structure="i"),)

    entries.append(ExampleEntry(
        "E4.1.1",
        emb.EmbeddedScenario("E4.1.1", 3, "complex", emb.euclidean(6), 1, "circle", (1,),
                             base_claims + anti_i),
        "circle times the 5-sphere, fiber from the circle action on the circle factor"))
    entries.append(ExampleEntry(
        "E4.1.2",
        emb.EmbeddedScenario("E4.1.2", 3, "complex", emb.euclidean(6), 1, "sphere", (1,),
                             base_claims + tangent_claim + anti_i),
        "circle times the 5-sphere, fiber from complex rotation of the sphere factor"))
    entries.append(ExampleEntry(
        "E4.1.3",
        emb.EmbeddedScenario("E4.1.3", 3, "complex", emb.indefinite(2, 6), -1, "circle", (1,),
                             base_claims + anti_i),
        "circle times the 5-dimensional pseudo-sphere, fiber on the circle factor"))
    entries.append(ExampleEntry(
        "E4.1.4",
        emb.EmbeddedScenario("E4.1.4", 3, "complex", emb.indefinite(2, 6), -1, "sphere", (1,),
                             base_claims + tangent_claim + anti_i),
        "circle times the 5-dimensional pseudo-sphere, fiber from complex rotation"))

    anti_jk = (Claim("anti_invariant", True, structure="j"),
               Claim("anti_invariant", True, structure="k"))
    entries.append(ExampleEntry(
        "Ex4.3.1",
        emb.EmbeddedScenario("Ex4.3.1", 2, "quaternion", emb.euclidean(8), 1, "both", (2, 3),
                             base_claims + tangent_claim + anti_jk),
        "circle times the 7-sphere with the two-torus product action"))
    entries.append(ExampleEntry(
        "Ex4.3.2",
        emb.EmbeddedScenario("Ex4.3.2", 2, "quaternion", emb.indefinite(4, 8), -1, "both", (2, 3),
                             base_claims + tangent_claim + anti_jk),
        "circle times the 7-dimensional pseudo-sphere with the two-torus product action"))
    return entries


@lru_cache(maxsize=1)
def _registry() -> dict[str, ExampleEntry]:
    entries: list[ExampleEntry] = []
    entries.extend(_abelian_entries())
    entries.extend(_hopf_entries())
    entries.extend(_sphere_product_entries())
    entries.extend(_negative_curvature_entries())
    entries.extend(_embedded_entries())
    registry: dict[str, ExampleEntry] = {}
    for e in entries:
        if e.id in registry:
            raise ValueError(f"duplicate catalog id {e.id}")
        registry[e.id] = e
    return registry


def list_ids() -> tuple[str, ...]:
    return tuple(sorted(_registry()))


def get(entry_id: str) -> ExampleEntry:
    try:
        return _registry()[entry_id]
    except KeyError:
        raise UnknownId(entry_id) from None


def verify(entry_id: str, seed: int = 0, samples: int = 256, tol: float = 1e-9) -> VerificationReport:
    entry = get(entry_id)
    if entry.kind == "embedded":
        return emb.verify_embedded(entry.scenario, scenario_id=entry.id,
                                   seed=seed, samples=samples, tol=tol)
    return verify_scenario(entry.scenario, scenario_id=entry.id)


def verify_all(seed: int = 0, samples: int = 256, tol: float = 1e-9,
               threads: int = 1) -> list[VerificationReport]:
    """Verify every entry; output order is fixed by id regardless of scheduling."""
    ids = list_ids()
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(
                lambda i: verify(i, seed=seed, samples=samples, tol=tol), ids))
    else:
        reports = [verify(i, seed=seed, samples=samples, tol=tol) for i in ids]
    return sorted(reports, key=lambda r: r.scenario_id)
