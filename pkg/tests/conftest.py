"""Shared fixtures and helpers for the test suite."""

from __future__ import annotations

from fractions import Fraction

import pytest

from antisub import catalog
from antisub.geometry import curvature, levi_civita
from antisub.liealg import MetricLieAlgebra
from antisub.linalg import mat_vec, vec_add, vec_is_zero, vec_scale
from antisub.submersion import SubmersionScenario


def lie_entries():
    return [catalog.get(i) for i in catalog.list_ids()
            if isinstance(catalog.get(i).scenario, SubmersionScenario)]


def unique_catalog_metrics() -> list[MetricLieAlgebra]:
    """Every distinct metric Lie algebra appearing in the registry."""
    seen = []
    for entry in lie_entries():
        mla = entry.scenario.mla
        if mla not in seen:
            seen.append(mla)
    return seen


@pytest.fixture(scope="session")
def catalog_metrics():
    return unique_catalog_metrics()


@pytest.fixture(scope="session")
def all_reports():
    """One verification run over the whole registry, shared across tests."""
    return {r.scenario_id: r for r in catalog.verify_all(samples=64)}


def assert_curvature_identities(mla: MetricLieAlgebra):
    """Torsion, metric compatibility, antisymmetries, Bianchi, pair symmetry."""
    n = mla.dim
    alg = mla.algebra
    g = mla.form.gram
    conn = levi_civita(mla)

    for i in range(n):
        for j in range(n):
            torsion = tuple(a - b for a, b in zip(conn.gamma[i][j], conn.gamma[j][i]))
            assert torsion == alg.structure[i][j], f"torsion at ({i},{j})"
            for k in range(n):
                lhs = mla.inner(conn.gamma[i][j], alg.basis_vector(alg.labels[k]))
                rhs = mla.inner(alg.basis_vector(alg.labels[j]), conn.gamma[i][k])
                assert lhs + rhs == 0, f"metric compatibility at ({i},{j},{k})"

    r = curvature(mla).r
    # lowered components <R(e_i,e_j)e_k, e_l> via one Gram application per entry
    low = [[[mat_vec(g, r[i][j][k]) for k in range(n)] for j in range(n)] for i in range(n)]

    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                # antisymmetry in the plane arguments
                assert r[i][j][k] == vec_scale(Fraction(-1), r[j][i][k])
                for l in range(k, n):
                    assert low[i][j][k][l] == -low[i][j][l][k], "skew in last pair"
                    assert low[i][j][k][l] == low[k][l][i][j], "pair symmetry"

    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                total = vec_add(vec_add(r[i][j][k], r[j][k][i]), r[k][i][j])
                assert vec_is_zero(total), f"first Bianchi at ({i},{j},{k})"
