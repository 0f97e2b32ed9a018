"""Lie algebras by structure constants: brackets, Jacobi, Killing form, sums.

Structure constants are stored densely as c[i][j] = coordinates of [e_i, e_j];
dimensions in the catalog never exceed 24, so no sparsity tricks are needed at
the storage level.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .linalg import (
    BilinearForm,
    DimensionMismatch,
    Matrix,
    Subspace,
    Vector,
    ZERO,
    rational,
    vec_add,
    vec_is_zero,
    vec_scale,
    vector,
    zero_vector,
)


@dataclass(frozen=True)
class LieAlgebraData:
    """Basis labels plus bracket structure constants [e_i, e_j] = structure[i][j]."""

    labels: tuple[str, ...]
    structure: tuple[tuple[Vector, ...], ...]

    def __post_init__(self):
        n = len(self.labels)
        rows = tuple(tuple(vector(v) for v in row) for row in self.structure)
        object.__setattr__(self, "structure", rows)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise DimensionMismatch("structure constant array must be dim x dim")
        for row in rows:
            for v in row:
                if len(v) != n:
                    raise DimensionMismatch("bracket vector has wrong length")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def basis_vector(self, label: str) -> Vector:
        v = [ZERO] * self.dim
        v[self.index_of(label)] = Fraction(1)
        return tuple(v)


def from_brackets(
    labels: Sequence[str],
    brackets: Mapping[tuple[int, int], Mapping[int, object]] | Iterable,
) -> LieAlgebraData:
    """Build an algebra from brackets given for i < j; antisymmetry is filled in.

    ``brackets`` maps (i, j) to {k: coefficient}; unspecified brackets vanish.
    An iterable of (i, j, {k: coeff}) triples is accepted too.
    """
    n = len(labels)
    if not isinstance(brackets, Mapping):
        brackets = {(i, j): rhs for i, j, rhs in brackets}
    structure = [[list(zero_vector(n)) for _ in range(n)] for _ in range(n)]
    for (i, j), rhs in brackets.items():
        if i == j:
            raise ValueError("brackets must be given for distinct indices")
        for k, coeff in rhs.items():
            c = rational(coeff)
            structure[i][j][int(k)] = c
            structure[j][i][int(k)] = -c
    return LieAlgebraData(tuple(labels), tuple(tuple(tuple(v) for v in row) for row in structure))


def abelian(labels: Sequence[str]) -> LieAlgebraData:
    return from_brackets(labels, {})


def bracket(alg: LieAlgebraData, x: Vector, y: Vector) -> Vector:
    """Bilinear extension of the structure constants."""
    n = alg.dim
    if len(x) != n or len(y) != n:
        raise DimensionMismatch("vector length does not match algebra dimension")
    out = zero_vector(n)
    for i, a in enumerate(x):
        if a == 0:
            continue
        for j, b in enumerate(y):
            if b == 0:
                continue
            c = alg.structure[i][j]
            if not vec_is_zero(c):
                out = vec_add(out, vec_scale(a * b, c))
    return out


def ad_matrix(alg: LieAlgebraData, x: Vector) -> Matrix:
    """Matrix of ad(x): y -> [x, y] (columns are the images of basis vectors)."""
    n = alg.dim
    cols = [bracket(alg, x, basis(alg, j)) for j in range(n)]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def basis(alg: LieAlgebraData, i: int) -> Vector:
    v = [ZERO] * alg.dim
    v[i] = Fraction(1)
    return tuple(v)


def is_antisymmetric(alg: LieAlgebraData) -> bool:
    n = alg.dim
    for i in range(n):
        for j in range(i, n):
            if alg.structure[i][j] != vec_scale(Fraction(-1), alg.structure[j][i]):
                return False
    return True


def check_jacobi(alg: LieAlgebraData) -> list[tuple[int, int, int]]:
    """All ordered basis triples (i, j, k) where the Jacobi identity fails.

    Ordered triples (not just i<j<k) so that broken antisymmetry in the raw
    constants is detected as well.
    """
    n = alg.dim
    bad = []
    for i in range(n):
        for j in range(n):
            bij = alg.structure[i][j]
            for k in range(n):
                total = bracket(alg, bij, basis(alg, k))
                total = vec_add(total, bracket(alg, alg.structure[j][k], basis(alg, i)))
                total = vec_add(total, bracket(alg, alg.structure[k][i], basis(alg, j)))
                if not vec_is_zero(total):
                    bad.append((i, j, k))
    return bad


def killing_form(alg: LieAlgebraData) -> BilinearForm:
    """K(e_i, e_j) = trace(ad(e_i) ad(e_j)), computed exactly."""
    n = alg.dim
    ads = [ad_matrix(alg, basis(alg, i)) for i in range(n)]
    gram = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            t = sum((ads[i][r][c] * ads[j][c][r] for r in range(n) for c in range(n)), ZERO)
            gram[i][j] = t
            gram[j][i] = t
    return BilinearForm(tuple(tuple(r) for r in gram))


@dataclass(frozen=True)
class MetricLieAlgebra:
    """A Lie algebra with a symmetric bilinear form (the left-invariant metric).

    Non-degeneracy is not enforced here; the connection construction refuses
    degenerate metrics with its own error.
    """

    algebra: LieAlgebraData
    form: BilinearForm

    def __post_init__(self):
        if self.form.dim != self.algebra.dim:
            raise DimensionMismatch("form dimension does not match algebra")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def inner(self, x: Vector, y: Vector) -> Fraction:
        return self.form.apply(x, y)


@dataclass(frozen=True)
class SubalgebraDecl:
    """A declared subalgebra (the Lie algebra of a closed subgroup H).

    Closedness of the subgroup is metadata, never computed.
    """

    parent: LieAlgebraData
    span: Subspace
    claimed_closed_group: bool = True

    def __post_init__(self):
        if self.span.ambient_dim != self.parent.dim:
            raise DimensionMismatch("subalgebra lives in the wrong ambient space")


def is_subalgebra(alg: LieAlgebraData, span: Subspace) -> bool:
    """True iff the span is closed under the bracket."""
    for i, u in enumerate(span.basis):
        for v in span.basis[i:]:
            if not span.contains(bracket(alg, u, v)):
                return False
    return True


def is_ad_invariant(mla: MetricLieAlgebra, acting: Subspace | None = None) -> bool:
    """Check <[z, x], y> + <x, [z, y]> = 0 for z in the acting span.

    ``acting=None`` tests invariance under the whole algebra (bi-invariance).
    """
    alg = mla.algebra
    n = alg.dim
    zs = acting.basis if acting is not None else tuple(basis(alg, i) for i in range(n))
    for z in zs:
        ad_cols = [bracket(alg, z, basis(alg, i)) for i in range(n)]
        for i in range(n):
            gi = mla.form.gram[i]
            for j in range(i, n):
                lhs = sum((ad_cols[i][k] * mla.form.gram[k][j] for k in range(n) if ad_cols[i][k]), ZERO)
                rhs = sum((gi[k] * ad_cols[j][k] for k in range(n) if ad_cols[j][k]), ZERO)
                if lhs + rhs != 0:
                    return False
    return True


def direct_sum(factors: Sequence[MetricLieAlgebra], signs: Sequence[int] | None = None,
               relabel: Sequence[Sequence[str]] | None = None) -> MetricLieAlgebra:
    """Block-diagonal sum of metric Lie algebras with a +/-1 sign per factor.

    Labels are taken from ``relabel`` when given; otherwise factor labels are
    suffixed with the factor position whenever they would collide.
    """
    if signs is None:
        signs = [1] * len(factors)
    if len(signs) != len(factors):
        raise ValueError("one sign per factor required")
    if any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be +1 or -1")

    dims = [f.dim for f in factors]
    total = sum(dims)
    labels: list[str] = []
    seen = set()
    for pos, f in enumerate(factors):
        source = relabel[pos] if relabel is not None else f.algebra.labels
        if len(source) != f.dim:
            raise ValueError("relabel entry has wrong length")
        for name in source:
            if name in seen:
                name = f"{name}_{pos}"
            seen.add(name)
            labels.append(name)

    structure = [[list(zero_vector(total)) for _ in range(total)] for _ in range(total)]
    gram = [[ZERO] * total for _ in range(total)]
    offset = 0
    for f, s in zip(factors, signs):
        n = f.dim
        for i in range(n):
            for j in range(n):
                c = f.algebra.structure[i][j]
                for k in range(n):
                    structure[offset + i][offset + j][offset + k] = c[k]
                gram[offset + i][offset + j] = s * f.form.gram[i][j]
        offset += n
    alg = LieAlgebraData(tuple(labels), tuple(tuple(tuple(v) for v in row) for row in structure))
    return MetricLieAlgebra(alg, BilinearForm(tuple(tuple(r) for r in gram)))
