"""Left-invariant (pseudo-)Riemannian geometry on a metric Lie algebra.

The connection comes from the Koszul formula specialized to left-invariant
vector fields (metric coefficients constant):

    2 <nabla_X Y, Z> = <[X,Y], Z> - <[Y,Z], X> + <[Z,X], Y>

Curvature follows the convention R(X,Y)Z = nabla_X nabla_Y Z -
nabla_Y nabla_X Z - nabla_[X,Y] Z with sectional curvature
sec(X,Y) = <R(X,Y)Y, X> / (<X,X><Y,Y> - <X,Y>^2), which makes the unit round
sphere come out at sec = +1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .liealg import MetricLieAlgebra, basis, bracket
from .linalg import (
    BilinearForm,
    Matrix,
    Vector,
    ZERO,
    inverse,
    mat_vec,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    vector,
    zero_vector,
)


class DegenerateMetric(Exception):
    """The metric's Gram matrix is singular."""


class DegeneratePlane(Exception):
    """The plane spanned by the given vectors is degenerate for this metric."""


@dataclass(frozen=True)
class ConnectionTable:
    """Levi-Civita coefficients: gamma[i][j] = nabla_{e_i} e_j in basis coordinates."""

    gamma: tuple[tuple[Vector, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.gamma)


@dataclass(frozen=True)
class CurvatureTensor:
    """Components r[i][j][k] = R(e_i, e_j) e_k expanded in the basis."""

    r: tuple[tuple[tuple[Vector, ...], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.r)


@lru_cache(maxsize=64)
def levi_civita(mla: MetricLieAlgebra) -> ConnectionTable:
    """Connection coefficients for all basis pairs; exact."""
    n = mla.dim
    g = mla.form.gram
    if mla.form.det() == 0:
        raise DegenerateMetric("metric Gram matrix is singular")
    ginv = inverse(g)
    alg = mla.algebra
    # m[a][b][k] = <[e_a, e_b], e_k>
    m = [[mat_vec(g, alg.structure[a][b]) for b in range(n)] for a in range(n)]
    gamma = []
    for i in range(n):
        row = []
        for j in range(n):
            w = tuple(
                m[i][j][k] - m[j][k][i] + m[k][i][j]
                for k in range(n)
            )
            row.append(vec_scale(Fraction(1, 2), mat_vec(ginv, w)))
        gamma.append(tuple(row))
    return ConnectionTable(tuple(gamma))


def nabla(conn: ConnectionTable, x: Vector, y: Vector) -> Vector:
    """Covariant derivative of constant-coefficient fields: sum x_i y_j gamma_ij."""
    n = conn.dim
    out = zero_vector(n)
    for i, a in enumerate(x):
        if a == 0:
            continue
        for j, b in enumerate(y):
            if b == 0:
                continue
            gij = conn.gamma[i][j]
            if not vec_is_zero(gij):
                out = vec_add(out, vec_scale(a * b, gij))
    return out


def curvature_op(mla: MetricLieAlgebra, x: Vector, y: Vector, z: Vector,
                 conn: ConnectionTable | None = None) -> Vector:
    """R(x, y) z without materializing the full tensor."""
    if conn is None:
        conn = levi_civita(mla)
    first = nabla(conn, x, nabla(conn, y, z))
    second = nabla(conn, y, nabla(conn, x, z))
    third = nabla(conn, bracket(mla.algebra, x, y), z)
    return vec_sub(vec_sub(first, second), third)


@lru_cache(maxsize=64)
def curvature(mla: MetricLieAlgebra) -> CurvatureTensor:
    """Full curvature tensor on basis triples."""
    conn = levi_civita(mla)
    n = mla.dim
    alg = mla.algebra
    r = []
    for i in range(n):
        plane_row = []
        ei = basis(alg, i)
        for j in range(n):
            ej = basis(alg, j)
            cij = alg.structure[i][j]
            row = []
            for k in range(n):
                ek = basis(alg, k)
                val = vec_sub(
                    vec_sub(nabla(conn, ei, conn.gamma[j][k]), nabla(conn, ej, conn.gamma[i][k])),
                    nabla(conn, cij, ek),
                )
                row.append(val)
            plane_row.append(tuple(row))
        r.append(tuple(plane_row))
    return CurvatureTensor(tuple(r))


def plane_q(mla: MetricLieAlgebra, x: Vector, y: Vector) -> Fraction:
    """Gram determinant <x,x><y,y> - <x,y>^2 of the plane."""
    return mla.inner(x, x) * mla.inner(y, y) - mla.inner(x, y) ** 2


def sectional(mla: MetricLieAlgebra, x: Vector, y: Vector,
              conn: ConnectionTable | None = None) -> Fraction:
    """Sectional curvature of the plane spanned by x and y."""
    q = plane_q(mla, x, y)
    if q == 0:
        raise DegeneratePlane("plane is degenerate (or x, y dependent)")
    return mla.inner(curvature_op(mla, x, y, y, conn=conn), x) / q


@dataclass(frozen=True)
class ScanResult:
    constant: bool
    value: Fraction | None
    planes: int
    skipped: int


def _random_rational_vector(rng: random.Random, n: int) -> Vector:
    return vector([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)])


@lru_cache(maxsize=64)
def sectional_scan(mla: MetricLieAlgebra, extra_planes: int = 8, seed: int = 20240) -> ScanResult:
    """Sectional curvature over all coordinate planes plus seeded random planes.

    Degenerate planes are skipped and counted rather than raised: indefinite
    metrics necessarily contain null planes.
    """
    conn = levi_civita(mla)
    n = mla.dim
    planes: list[tuple[Vector, Vector]] = []
    for i in range(n):
        for j in range(i + 1, n):
            planes.append((basis(mla.algebra, i), basis(mla.algebra, j)))
    rng = random.Random(seed)
    made = 0
    while made < extra_planes:
        x = _random_rational_vector(rng, n)
        y = _random_rational_vector(rng, n)
        if vec_is_zero(x) or vec_is_zero(y):
            continue
        planes.append((x, y))
        made += 1

    value: Fraction | None = None
    used = 0
    skipped = 0
    constant = True
    for x, y in planes:
        q = plane_q(mla, x, y)
        if q == 0:
            skipped += 1
            continue
        s = mla.inner(curvature_op(mla, x, y, y, conn=conn), x) / q
        used += 1
        if value is None:
            value = s
        elif s != value:
            constant = False
    if used == 0:
        return ScanResult(True, None, 0, skipped)
    return ScanResult(constant, value if constant else None, used, skipped)


@lru_cache(maxsize=64)
def ricci(mla: MetricLieAlgebra) -> BilinearForm:
    """Ricci form Ric(x, y) = trace of z -> R(z, x) y.

    The trace of an endomorphism needs no metric; this is the same value as the
    g-inverse contraction of <R(e_k, x) y, e_l> in any signature.
    """
    rt = curvature(mla).r
    n = mla.dim
    gram = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            t = sum((rt[k][i][j][k] for k in range(n)), ZERO)
            gram[i][j] = t
            gram[j][i] = t
    return BilinearForm(tuple(tuple(row) for row in gram))


@dataclass(frozen=True)
class EinsteinResult:
    is_einstein: bool
    lam: Fraction | None
    ricci: BilinearForm


def einstein_check(mla: MetricLieAlgebra) -> EinsteinResult:
    """Decide Ric = lambda * g exactly and report lambda when it holds."""
    ric = ricci(mla)
    n = mla.dim
    g = mla.form.gram
    lam: Fraction | None = None
    for i in range(n):
        for j in range(n):
            if g[i][j] != 0:
                lam = ric.gram[i][j] / g[i][j]
                break
        if lam is not None:
            break
    if lam is None:
        # Zero metric cannot happen for a valid metric algebra; treat Ric = 0 as flat.
        lam = ZERO
    for i in range(n):
        for j in range(n):
            if ric.gram[i][j] != lam * g[i][j]:
                return EinsteinResult(False, None, ric)
    return EinsteinResult(True, lam, ric)


def bi_invariant_sectional(mla: MetricLieAlgebra, x: Vector, y: Vector) -> Fraction:
    """Closed form (1/4)|[x,y]|^2 / Q valid for bi-invariant metrics.

    Used as an independent cross-check of the Koszul pipeline.
    """
    q = plane_q(mla, x, y)
    if q == 0:
        raise DegeneratePlane("plane is degenerate")
    b = bracket(mla.algebra, x, y)
    return Fraction(1, 4) * mla.inner(b, b) / q
