import random
from fractions import Fraction

import pytest

from antisub.catalog import (
    circle_su2,
    hopf_J,
    hopf_Jc,
    hopf_metric,
    line_sl2_metric,
    su2_power,
)
from antisub.geometry import levi_civita, sectional
from antisub.liealg import (
    MetricLieAlgebra,
    SubalgebraDecl,
    abelian,
    bracket,
    is_ad_invariant,
    is_subalgebra,
)
from antisub.linalg import (
    DegenerateRestriction,
    Subspace,
    diagonal_form,
    matrix,
    vec_add,
    vec_is_zero,
    vec_scale,
    vector,
    zero_subspace,
)
from antisub.report import CONFIRMED, ERROR, REFUTED, Claim
from antisub.structures import AlgebraAction
from antisub.submersion import (
    NotAdInvariant,
    NotSubalgebra,
    SubmersionScenario,
    base_scan,
    base_sectional,
    build,
    check_anti_invariant,
    fibers_report,
    horizontal_integrable,
    is_lagrangian,
    oneill_A,
    oneill_T,
    verify_scenario,
)
from conftest import lie_entries

F = Fraction


def torus_fiber():
    return Subspace(4, matrix([[1, 0, 0, 0], [0, 1, 0, 0]]))


def test_build_round_hopf():
    frame = build(hopf_metric(1), torus_fiber())
    assert frame.horizontal.same_span(Subspace(4, matrix([[0, 0, 1, 0], [0, 0, 0, 1]])))


def test_build_zero_fiber():
    frame = build(hopf_metric(1), zero_subspace(4))
    assert frame.horizontal.dim == 4


def test_build_line_sl2_case_four():
    mla = line_sl2_metric()
    h = Subspace(4, matrix([[1, 0, 0, 0], [0, 0, 1, 0]]))
    frame = build(mla, h)
    assert frame.horizontal.same_span(Subspace(4, matrix([[0, 1, 0, 0], [0, 0, 0, 1]])))


def test_build_rejects_non_subalgebra():
    with pytest.raises(NotSubalgebra):
        build(hopf_metric(1), Subspace(4, matrix([[0, 0, 1, 0], [0, 0, 0, 1]])))


def test_build_rejects_degenerate_restriction():
    mla = MetricLieAlgebra(abelian(("e1", "f1", "e2", "f2")), diagonal_form([1, -1, 1, -1]))
    with pytest.raises(DegenerateRestriction):
        build(mla, Subspace(4, matrix([[1, 1, 0, 0]])))


def test_build_rejects_non_ad_invariant():
    mla = hopf_metric(2)
    line = Subspace(4, matrix([[0, 0, 1, 0]]))  # spanned by e2: subalgebra, but metric moves
    assert is_subalgebra(mla.algebra, line)
    with pytest.raises(NotAdInvariant):
        build(mla, line)


def test_projection_splits_uniquely():
    frame = build(hopf_metric(1), torus_fiber())
    rng = random.Random(43)
    for _ in range(20):
        v = vector([F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(4)])
        vert, horiz = frame.project(v)
        assert vec_add(vert, horiz) == v
        assert frame.vertical.contains(vert)
        assert frame.horizontal.contains(horiz)
        # idempotence
        assert frame.project(vert) == (vert, (F(0),) * 4)
        assert frame.vertical_part(horiz) == (F(0),) * 4


def test_anti_invariance():
    frame = build(hopf_metric(1), torus_fiber())
    assert check_anti_invariant(frame, hopf_Jc())
    assert not check_anti_invariant(frame, hopf_J())  # J e0 = e1 stays vertical


def test_lagrangian():
    frame = build(hopf_metric(1), torus_fiber())
    assert is_lagrangian(frame, hopf_Jc())
    line = build(hopf_metric(1), Subspace(4, matrix([[1, 0, 0, 0]])))
    assert check_anti_invariant(line, hopf_J())
    assert not is_lagrangian(line, hopf_J())
    empty = build(hopf_metric(1), zero_subspace(4))
    assert not is_lagrangian(empty, hopf_J())


def test_oneill_tensors_hopf():
    mla = hopf_metric(1)
    frame = build(mla, torus_fiber())
    conn = levi_civita(mla)
    t = oneill_T(frame, conn)
    assert all(vec_is_zero(v) for row in t for v in row)
    a = oneill_A(frame, conn)
    # horizontal basis comes out as (e2, e3); A(e2, e3) = -e1
    assert frame.horizontal.basis == (vector([0, 0, 1, 0]), vector([0, 0, 0, 1]))
    assert a[0][1] == vector([0, -1, 0, 0])
    assert a[1][0] == vector([0, 1, 0, 0])


def test_fibers_hopf_and_flat():
    mla = hopf_metric(1)
    frame = build(mla, torus_fiber())
    rep = fibers_report(frame, levi_civita(mla))
    assert rep.totally_geodesic and rep.minimal

    flat = MetricLieAlgebra(abelian(("a", "b", "c", "d")), diagonal_form([1, 1, 1, 1]))
    frame = build(flat, Subspace(4, matrix([[1, 0, 0, 0]])))
    rep = fibers_report(frame, levi_civita(flat))
    assert rep.totally_geodesic and rep.minimal


def test_fibers_sphere_factor():
    two = su2_power(2)
    h = Subspace(6, matrix([[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]]))
    frame = build(two, h)
    rep = fibers_report(frame, levi_civita(two))
    assert rep.totally_geodesic and rep.minimal


def test_horizontal_integrability():
    frame = build(hopf_metric(1), torus_fiber())
    assert not horizontal_integrable(frame)

    flat = MetricLieAlgebra(abelian(("a", "b", "c", "d")), diagonal_form([1, 1, 1, 1]))
    assert horizontal_integrable(build(flat, Subspace(4, matrix([[1, 0, 0, 0]]))))

    two = su2_power(2)
    h = Subspace(6, matrix([[0, 1, 0, 0, 0, 0], [0, 0, 0, 0, 1, 0]]))  # span{e2, f2}
    assert not horizontal_integrable(build(two, h))


def test_base_sectional_hopf_plane():
    mla = hopf_metric(1)
    frame = build(mla, torus_fiber())
    e2, e3 = mla.algebra.basis_vector("e2"), mla.algebra.basis_vector("e3")
    # total-space value 1 plus the correction 3|A|^2/Q = 3
    assert sectional(mla, e2, e3) == 1
    assert base_sectional(frame, e2, e3) == 4
    scan = base_scan(frame)
    assert scan.constant and scan.value == 4


def test_base_sectional_requires_horizontal():
    mla = hopf_metric(1)
    frame = build(mla, torus_fiber())
    e0, e2 = mla.algebra.basis_vector("e0"), mla.algebra.basis_vector("e2")
    with pytest.raises(ValueError):
        base_sectional(frame, e0, e2)


def test_base_matches_total_for_central_fiber():
    # fiber along the central direction: A = 0, base curvature = total curvature
    mla = line_sl2_metric()
    frame = build(mla, Subspace(4, matrix([[1, 0, 0, 0]])))
    conn = levi_civita(mla)
    hb = frame.horizontal.basis
    for i in range(len(hb)):
        for j in range(i + 1, len(hb)):
            from antisub.geometry import plane_q

            if plane_q(mla, hb[i], hb[j]) == 0:
                continue
            assert base_sectional(frame, hb[i], hb[j]) == sectional(mla, hb[i], hb[j])
    scan = base_scan(frame)
    assert scan.constant and scan.value == -1


def test_oneill_identities_across_catalog(all_reports):
    for entry in lie_entries():
        scenario = entry.scenario
        frame = build(scenario.mla, scenario.h)
        conn = levi_civita(scenario.mla)
        t = oneill_T(frame, conn)
        a = oneill_A(frame, conn)
        nv, nh = frame.vertical.dim, frame.horizontal.dim
        for i in range(nv):
            for j in range(nv):
                assert t[i][j] == t[j][i], f"T symmetry in {entry.id}"
        for i in range(nh):
            for j in range(nh):
                assert a[i][j] == vec_scale(F(-1), a[j][i]), f"A antisymmetry in {entry.id}"
                # A is half the vertical part of the bracket
                br = bracket(scenario.mla.algebra, frame.horizontal.basis[i], frame.horizontal.basis[j])
                assert a[i][j] == vec_scale(F(1, 2), frame.vertical_part(br)), entry.id
        a_vanishes = all(vec_is_zero(v) for row in a for v in row)
        assert a_vanishes == horizontal_integrable(frame), f"A <-> integrability in {entry.id}"
        if is_ad_invariant(scenario.mla):
            rep = fibers_report(frame, conn)
            assert rep.totally_geodesic, f"bi-invariant fibers in {entry.id}"


def test_verify_scenario_mutation_control():
    mla = hopf_metric(1)
    scenario = SubmersionScenario(
        mla,
        build(mla, torus_fiber()).vertical and __import__("antisub.liealg", fromlist=["SubalgebraDecl"]).SubalgebraDecl(mla.algebra, torus_fiber()),
        (hopf_Jc(),),
        (Claim("anti_invariant", True, structure="Jc"),
         Claim("lagrangian", False, structure="Jc"),  # deliberately wrong
         Claim("made_up_check", True)),
    )
    report = verify_scenario(scenario, "control")
    assert report.find("anti_invariant", "Jc").status == CONFIRMED
    assert report.find("lagrangian", "Jc").status == REFUTED
    assert report.find("made_up_check").status == ERROR
    assert not report.ok


def test_verify_scenario_construction_error_does_not_abort():
    mla = hopf_metric(2)
    from antisub.liealg import SubalgebraDecl

    scenario = SubmersionScenario(
        mla, SubalgebraDecl(mla.algebra, Subspace(4, matrix([[0, 0, 1, 0]]))),
        (hopf_J(),), (Claim("integrable", True, structure="J"),))
    report = verify_scenario(scenario, "broken")
    assert report.find("valid_construction").status == ERROR
    assert report.find("integrable", "J").status == CONFIRMED
