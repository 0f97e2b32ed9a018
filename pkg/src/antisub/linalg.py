"""Exact rational linear algebra: vectors, matrices, bilinear forms, subspaces.

Everything is computed over ``fractions.Fraction`` so equality tests are exact;
there is no floating point anywhere in this module.  Vectors are tuples of
Fractions, matrices are tuples of row tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class LinalgError(Exception):
    """Base class for linear-algebra failures."""


class DimensionMismatch(LinalgError):
    """Operands have incompatible dimensions."""


class DegenerateRestriction(LinalgError):
    """A bilinear form restricts degenerately to a subspace."""


def rational(x) -> Fraction:
    """Coerce ints, strings like ``"p/q"`` and Fractions to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {type(x).__name__}")


def vector(entries: Iterable) -> Vector:
    return tuple(rational(x) for x in entries)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vector(r) for r in rows)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def vec_add(v: Vector, w: Vector) -> Vector:
    return tuple(a + b for a, b in zip(v, w, strict=True))


def vec_sub(v: Vector, w: Vector) -> Vector:
    return tuple(a - b for a, b in zip(v, w, strict=True))


def vec_scale(c: Fraction, v: Vector) -> Vector:
    if c == 0:
        return zero_vector(len(v))
    return tuple(c * a for a in v)


def vec_is_zero(v: Vector) -> bool:
    return all(a == 0 for a in v)


def dot(v: Vector, w: Vector) -> Fraction:
    return sum((a * b for a, b in zip(v, w, strict=True)), ZERO)


def mat_vec(m: Matrix, v: Vector) -> Vector:
    # Accumulate by columns, skipping zero coefficients: catalog vectors are
    # sparse and Fraction arithmetic is the hot cost.
    n = len(m)
    out = [ZERO] * n
    for j, c in enumerate(v):
        if c == 0:
            continue
        for i in range(n):
            mij = m[i][j]
            if mij != 0:
                out[i] = out[i] + mij * c
    return tuple(out)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and len(a[0]) != len(b):
        raise DimensionMismatch("matrix product shapes do not match")
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def transpose(m: Matrix) -> Matrix:
    if not m:
        return ()
    return tuple(tuple(m[i][j] for i in range(len(m))) for j in range(len(m[0])))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_add(r, s) for r, s in zip(a, b, strict=True))


def mat_scale(c: Fraction, m: Matrix) -> Matrix:
    return tuple(vec_scale(c, r) for r in m)


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return a == b


def det(m: Matrix) -> Fraction:
    """Exact determinant by Gaussian elimination (empty matrix has det 1)."""
    n = len(m)
    if n == 0:
        return ONE
    rows = [list(r) for r in m]
    sign = ONE
    result = ONE
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            sign = -sign
        p = rows[col][col]
        result *= p
        for r in range(col + 1, n):
            f = rows[r][col] / p
            if f == 0:
                continue
            for c in range(col, n):
                rows[r][c] -= f * rows[col][c]
    return sign * result


def inverse(m: Matrix) -> Matrix:
    """Exact inverse via Gauss-Jordan; raises LinalgError when singular."""
    n = len(m)
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise LinalgError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r == col:
                continue
            f = aug[r][col]
            if f == 0:
                continue
            aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def rref(m: Sequence[Sequence[Fraction]]) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form; returns (reduced rows, pivot column indices)."""
    rows = [list(r) for r in m]
    if not rows:
        return (), ()
    ncols = len(rows[0])
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        rows[rank] = [x / p for x in rows[rank]]
        for r in range(len(rows)):
            if r == rank:
                continue
            f = rows[r][col]
            if f == 0:
                continue
            rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return tuple(tuple(r) for r in rows), tuple(pivots)


def rank(m: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(m)[1])


def nullspace(m: Sequence[Sequence[Fraction]], ncols: int | None = None) -> tuple[Vector, ...]:
    """Basis of {x : m x = 0}, one vector per free column of the RREF."""
    if ncols is None:
        if not m:
            raise ValueError("need ncols for an empty coefficient matrix")
        ncols = len(m[0])
    if not m:
        return identity(ncols)
    reduced, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][fc]
        basis.append(tuple(v))
    return tuple(basis)


def in_row_span(basis: Sequence[Vector], v: Vector) -> bool:
    if not basis:
        return vec_is_zero(v)
    stacked = list(basis) + [v]
    return rank(stacked) == rank(basis)


@dataclass(frozen=True)
class BilinearForm:
    """Symmetric bilinear form given by its Gram matrix."""

    gram: Matrix

    def __post_init__(self):
        g = matrix(self.gram)
        object.__setattr__(self, "gram", g)
        for i in range(len(g)):
            if len(g[i]) != len(g):
                raise DimensionMismatch("Gram matrix must be square")
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError("Gram matrix must be symmetric")

    @property
    def dim(self) -> int:
        return len(self.gram)

    def apply(self, v: Vector, w: Vector) -> Fraction:
        if len(v) != self.dim or len(w) != self.dim:
            raise DimensionMismatch("vector length does not match form dimension")
        return dot(mat_vec(self.gram, v), w)

    def det(self) -> Fraction:
        return det(self.gram)

    def is_nondegenerate(self) -> bool:
        return self.det() != 0


def diagonal_form(entries: Iterable) -> BilinearForm:
    es = vector(entries)
    n = len(es)
    return BilinearForm(tuple(tuple(es[i] if i == j else ZERO for j in range(n)) for i in range(n)))


@dataclass(frozen=True)
class Subspace:
    """Span of a list of linearly independent row vectors in an ambient space.

    The basis is kept exactly as given (so labeled generators survive into
    reports); membership tests row-reduce a copy.
    """

    ambient_dim: int
    basis: Matrix

    def __post_init__(self):
        b = matrix(self.basis)
        object.__setattr__(self, "basis", b)
        for row in b:
            if len(row) != self.ambient_dim:
                raise DimensionMismatch("basis vector has wrong length")
        if b and rank(b) != len(b):
            raise ValueError("subspace basis is linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Vector) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length does not match ambient dimension")
        return in_row_span(self.basis, vector(v))

    def same_span(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            return False
        return all(self.contains(v) for v in other.basis) and all(
            other.contains(v) for v in self.basis
        )


def full_space(n: int) -> Subspace:
    return Subspace(n, identity(n))


def zero_subspace(n: int) -> Subspace:
    return Subspace(n, ())


def contains(sub: Subspace, v: Vector) -> bool:
    return sub.contains(v)


def restrict_form(sub: Subspace, form: BilinearForm) -> BilinearForm:
    """Gram matrix of the form in the subspace basis (B G B^T)."""
    b = sub.basis
    images = [mat_vec(form.gram, row) for row in b]
    return BilinearForm(tuple(tuple(dot(b[i], images[j]) for j in range(len(b))) for i in range(len(b))))


def orth_complement(sub: Subspace, form: BilinearForm) -> Subspace:
    """Orthogonal complement of ``sub`` with respect to ``form``.

    Requires the restriction of the form to ``sub`` to be non-degenerate, which
    guarantees the complement really is complementary (not merely orthogonal).
    """
    if form.dim != sub.ambient_dim:
        raise DimensionMismatch("form and subspace live in different dimensions")
    if restrict_form(sub, form).det() == 0:
        raise DegenerateRestriction("form is degenerate on the subspace")
    # w is orthogonal to the subspace iff (B G) w = 0.
    constraints = [mat_vec(form.gram, row) for row in sub.basis]
    return Subspace(sub.ambient_dim, nullspace(constraints, ncols=sub.ambient_dim))


def signature(form: BilinearForm) -> tuple[int, int, int]:
    """Inertia (p, q, r) of a symmetric form by exact congruence reduction.

    p counts positive squares, q negative squares, r the radical dimension;
    p + q + r equals the dimension.
    """
    n = form.dim
    a = [list(row) for row in form.gram]
    p = q = 0
    for k in range(n):
        # Find a usable diagonal pivot at or below position k.
        pivot = next((i for i in range(k, n) if a[i][i] != 0), None)
        if pivot is None:
            # All remaining diagonal entries vanish; look for an off-diagonal
            # entry and fold it onto the diagonal with the congruence
            # row_i += row_j / col_i += col_j (turns 0 diagonal into 2*a_ij).
            off = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0),
                None,
            )
            if off is None:
                break  # remaining block is identically zero -> radical
            i, j = off
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            pivot = i
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            for r in range(n):
                a[r][k], a[r][pivot] = a[r][pivot], a[r][k]
        d = a[k][k]
        if d > 0:
            p += 1
        else:
            q += 1
        for r in range(k + 1, n):
            f = a[r][k] / d
            if f == 0:
                continue
            for c in range(n):
                a[r][c] -= f * a[k][c]
            for rr in range(n):
                a[rr][r] -= f * a[rr][k]
    return p, q, n - p - q
