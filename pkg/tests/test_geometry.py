import random
from fractions import Fraction

import pytest

from antisub.catalog import hopf_metric, sl2_eighth_killing, su2, su2_power
from antisub.geometry import (
    DegenerateMetric,
    DegeneratePlane,
    bi_invariant_sectional,
    curvature_op,
    einstein_check,
    levi_civita,
    nabla,
    plane_q,
    ricci,
    sectional,
    sectional_scan,
)
from antisub.liealg import MetricLieAlgebra, abelian, bracket, is_ad_invariant
from antisub.linalg import diagonal_form, vec_is_zero, vec_scale, vector
from conftest import assert_curvature_identities

F = Fraction


def round_sphere():
    return MetricLieAlgebra(su2(), diagonal_form([1, 1, 1]))


def flat_torus(n=4):
    return MetricLieAlgebra(abelian(tuple(f"t{i}" for i in range(n))), diagonal_form([1] * n))


def test_abelian_connection_vanishes():
    conn = levi_civita(flat_torus())
    assert all(vec_is_zero(v) for row in conn.gamma for v in row)


def test_round_sphere_connection_is_half_bracket():
    mla = round_sphere()
    conn = levi_civita(mla)
    e2, e3 = mla.algebra.basis_vector("e2"), mla.algebra.basis_vector("e3")
    assert nabla(conn, e2, e3) == vector([-1, 0, 0])
    for i in range(3):
        for j in range(3):
            half = vec_scale(F(1, 2), mla.algebra.structure[i][j])
            assert conn.gamma[i][j] == half


def test_bi_invariant_connection_is_half_bracket_everywhere(catalog_metrics):
    for mla in catalog_metrics:
        if not is_ad_invariant(mla):
            continue
        conn = levi_civita(mla)
        n = mla.dim
        for i in range(n):
            for j in range(n):
                assert conn.gamma[i][j] == vec_scale(F(1, 2), mla.algebra.structure[i][j])


def test_squashed_connection_example():
    mla = hopf_metric(2)
    conn = levi_civita(mla)
    e1 = mla.algebra.basis_vector("e1")
    assert vec_is_zero(nabla(conn, e1, e1))


def test_degenerate_metric_raises():
    mla = MetricLieAlgebra(su2(), diagonal_form([1, 1, 0]))
    with pytest.raises(DegenerateMetric):
        levi_civita(mla)


def test_round_sphere_sectional_is_one():
    mla = round_sphere()
    e2, e3 = mla.algebra.basis_vector("e2"), mla.algebra.basis_vector("e3")
    assert sectional(mla, e2, e3) == 1


def test_sectional_cross_checked_against_closed_form():
    # independent oracle: (1/4)|[x,y]|^2 / Q for the bi-invariant round metric
    mla = round_sphere()
    rng = random.Random(19)
    checked = 0
    while checked < 40:
        x = vector([F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(3)])
        y = vector([F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(3)])
        if plane_q(mla, x, y) == 0:
            continue
        checked += 1
        assert sectional(mla, x, y) == bi_invariant_sectional(mla, x, y) == 1


def test_flat_scan():
    scan = sectional_scan(flat_torus())
    assert scan.constant and scan.value == 0


def test_round_sphere_scan():
    scan = sectional_scan(round_sphere())
    assert scan.constant and scan.value == 1


def test_lorentz_sl2_sectional():
    mla = sl2_eighth_killing()
    f2, f3 = mla.algebra.basis_vector("f2"), mla.algebra.basis_vector("f3")
    assert sectional(mla, f2, f3) == -1
    scan = sectional_scan(mla)
    assert scan.constant and scan.value == -1


def test_product_scan_not_constant():
    two = su2_power(2)
    e1 = two.algebra.basis_vector("e1")
    e2 = two.algebra.basis_vector("e2")
    f1 = two.algebra.basis_vector("f1")
    assert sectional(two, e1, e2) == 1
    assert sectional(two, e1, f1) == 0
    scan = sectional_scan(two)
    assert not scan.constant


def test_degenerate_plane_raises():
    mla = MetricLieAlgebra(su2(), diagonal_form([-1, 1, 1]))
    null = vector([1, 1, 0])  # <v,v> = -1 + 1 = 0, plane with e3 degenerate?
    e1 = mla.algebra.basis_vector("e1")
    parallel = vec_scale(F(2), e1)
    with pytest.raises(DegeneratePlane):
        sectional(mla, e1, parallel)
    if plane_q(mla, null, mla.algebra.basis_vector("e2")) == 0:
        with pytest.raises(DegeneratePlane):
            sectional(mla, null, mla.algebra.basis_vector("e2"))


def test_ricci_round_sphere():
    mla = round_sphere()
    ric = ricci(mla)
    assert ric.gram == diagonal_form([2, 2, 2]).gram
    result = einstein_check(mla)
    assert result.is_einstein and result.lam == 2


def test_einstein_products():
    assert einstein_check(su2_power(2)) == einstein_check(su2_power(2))
    result = einstein_check(su2_power(2))
    assert result.is_einstein and result.lam == 2
    neutral = einstein_check(su2_power(2, signs=(1, -1)))
    assert not neutral.is_einstein
    # Ricci of the neutral product is still 2x the positive product metric
    assert neutral.ricci.gram == diagonal_form([2] * 6).gram


def test_flat_einstein_lambda_zero():
    result = einstein_check(flat_torus())
    assert result.is_einstein and result.lam == 0


def test_curvature_operator_antisymmetry_random():
    mla = hopf_metric(2)
    rng = random.Random(37)
    for _ in range(10):
        x = vector([F(rng.randint(-2, 2)) for _ in range(4)])
        y = vector([F(rng.randint(-2, 2)) for _ in range(4)])
        z = vector([F(rng.randint(-2, 2)) for _ in range(4)])
        lhs = curvature_op(mla, x, y, z)
        rhs = vec_scale(F(-1), curvature_op(mla, y, x, z))
        assert lhs == rhs


def test_identities_on_all_catalog_metrics(catalog_metrics):
    for mla in catalog_metrics:
        assert_curvature_identities(mla)
