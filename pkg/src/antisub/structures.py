"""Endomorphism structures on a metric Lie algebra.

Covers almost complex (J^2 = -Id) and almost para-complex (J^2 = +Id, J != +/-Id)
endomorphisms, their metric compatibility laws, the algebraic Nijenhuis
integrability test for left-invariant structures, and validation that a family
of endomorphisms realizes a composition-algebra action.

Convention: the para-complex Nijenhuis tensor flips the sign of the final
bracket term relative to the complex case, matching J^2 = +Id:

    complex:       N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y]
    para-complex:  N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] + [X,Y]
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebras import AlgebraTable, left_mult_matrix
from .liealg import LieAlgebraData, basis, bracket
from .linalg import (
    BilinearForm,
    Matrix,
    Vector,
    identity,
    mat_mul,
    mat_scale,
    mat_vec,
    matrix,
    transpose,
    vec_add,
    vec_is_zero,
    vec_sub,
)

COMPLEX_NIJENHUIS_SIGN = -1
PARA_NIJENHUIS_SIGN = 1


@dataclass(frozen=True)
class StructureEndo:
    """A named endomorphism with a declared kind (complex or para_complex)."""

    name: str
    kind: str
    matrix: Matrix

    def __post_init__(self):
        object.__setattr__(self, "matrix", matrix(self.matrix))
        if self.kind not in ("complex", "para_complex"):
            raise ValueError(f"unknown structure kind {self.kind!r}")

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def apply(self, v: Vector) -> Vector:
        return mat_vec(self.matrix, v)

    def satisfies_kind_law(self) -> bool:
        n = self.dim
        square = mat_mul(self.matrix, self.matrix)
        if self.kind == "complex":
            return square == mat_scale(Fraction(-1), identity(n))
        ident = identity(n)
        return square == ident and self.matrix != ident and self.matrix != mat_scale(Fraction(-1), ident)


def endo_from_images(labels: tuple[str, ...], name: str, kind: str,
                     images: dict[str, str]) -> StructureEndo:
    """Build an endomorphism from basis-image strings like {"e0": "-e1"}.

    Every basis label must be mapped; this keeps catalog definitions an exact
    transcription of the defining image lists.
    """
    n = len(labels)
    cols = []
    for lbl in labels:
        if lbl not in images:
            raise ValueError(f"no image given for basis element {lbl!r}")
        target = images[lbl].strip()
        sign = Fraction(1)
        if target.startswith("-"):
            sign = Fraction(-1)
            target = target[1:]
        elif target.startswith("+"):
            target = target[1:]
        col = [Fraction(0)] * n
        col[labels.index(target)] = sign
        cols.append(col)
    rows = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return StructureEndo(name, kind, rows)


def compose(name: str, a: StructureEndo, b: StructureEndo, kind: str) -> StructureEndo:
    """Matrix product a b as a named endomorphism of the stated kind."""
    return StructureEndo(name, kind, mat_mul(a.matrix, b.matrix))


def check_compatibility(endo: StructureEndo, form: BilinearForm) -> bool:
    """Metric compatibility: J^T G J = G for complex kind, = -G for para kind."""
    lhs = mat_mul(transpose(endo.matrix), mat_mul(form.gram, endo.matrix))
    if endo.kind == "complex":
        return lhs == form.gram
    return lhs == mat_scale(Fraction(-1), form.gram)


def nijenhuis(alg: LieAlgebraData, endo: StructureEndo, x: Vector, y: Vector) -> Vector:
    """Nijenhuis tensor N(x, y) for a left-invariant (para-)complex structure."""
    jx = endo.apply(x)
    jy = endo.apply(y)
    out = bracket(alg, jx, jy)
    out = vec_sub(out, endo.apply(bracket(alg, jx, y)))
    out = vec_sub(out, endo.apply(bracket(alg, x, jy)))
    last = bracket(alg, x, y)
    if endo.kind == "complex":
        out = vec_sub(out, last)
    else:
        out = vec_add(out, last)
    return out


def is_integrable(alg: LieAlgebraData, endo: StructureEndo) -> bool:
    """True iff the Nijenhuis tensor vanishes on all basis pairs."""
    if not endo.satisfies_kind_law():
        raise ValueError(f"{endo.name} does not satisfy its kind law")
    n = alg.dim
    for i in range(n):
        for j in range(i + 1, n):
            if not vec_is_zero(nijenhuis(alg, endo, basis(alg, i), basis(alg, j))):
                return False
    return True


def expected_kind(table: AlgebraTable, i: int) -> str:
    """Kind a generator for imaginary unit e_i must have, read off e_i^2."""
    sign, k = table.products[i][i]
    if k != 0:
        raise ValueError("imaginary unit squares outside the real line")
    return "complex" if sign < 0 else "para_complex"


@dataclass(frozen=True)
class AlgebraAction:
    """Endomorphisms realizing the imaginary units of a composition algebra.

    ``generators`` pairs each imaginary basis index with its endomorphism.
    """

    name: str
    table: AlgebraTable
    generators: tuple[tuple[int, StructureEndo], ...]

    def __post_init__(self):
        idx = [i for i, _ in self.generators]
        if sorted(idx) != list(range(1, self.table.dim)):
            raise ValueError("need one generator per imaginary basis unit")

    @property
    def dim(self) -> int:
        return self.generators[0][1].dim

    def generator(self, i: int) -> StructureEndo:
        for j, endo in self.generators:
            if j == i:
                return endo
        raise KeyError(i)

    def endos(self) -> tuple[StructureEndo, ...]:
        return tuple(e for _, e in self.generators)


def action_from_left_multiplication(name: str, table: AlgebraTable, blocks: int,
                                    block_index: "list[list[int]] | None" = None) -> AlgebraAction:
    """Action of a table on (algebra)^blocks by blockwise left multiplication.

    ``block_index[b][s]`` gives the ambient coordinate of slot ``s`` in block
    ``b``; the default is consecutive blocks of size table.dim.
    """
    d = table.dim
    n = blocks * d
    if block_index is None:
        block_index = [[b * d + s for s in range(d)] for b in range(blocks)]
    gens = []
    for i in range(1, d):
        small = left_mult_matrix(table, i)
        rows = [[Fraction(0)] * n for _ in range(n)]
        for b in range(blocks):
            for r in range(d):
                for c in range(d):
                    if small[r][c] != 0:
                        rows[block_index[b][r]][block_index[b][c]] = small[r][c]
        endo = StructureEndo(f"{name}{i}", expected_kind(table, i), tuple(tuple(r) for r in rows))
        gens.append((i, endo))
    return AlgebraAction(name, table, tuple(gens))


def check_action(action: AlgebraAction, form: BilinearForm) -> bool:
    """Validate the generator family against its table and the metric.

    For the associative tables every pairwise product must reproduce the signed
    table relation J_i J_j = sign * J_k (with J_0 = Id).  The octonion table
    cannot be realized that way by matrices (matrix products associate, the
    octonion table does not), so there the pairwise consequences that survive
    non-associativity are enforced instead: squares J_i^2 = -Id and
    anticommutation J_i J_j = -J_j J_i for distinct imaginary units.
    Compatibility with the form is required for every generator in both cases.
    """
    table = action.table
    n = action.dim
    ident = identity(n)
    for i, endo in action.generators:
        if endo.kind != expected_kind(table, i):
            return False
        if not endo.satisfies_kind_law():
            return False
        if not check_compatibility(endo, form):
            return False

    def as_matrix(sign: int, k: int) -> Matrix:
        base = ident if k == 0 else action.generator(k).matrix
        return base if sign > 0 else mat_scale(Fraction(-1), base)

    d = table.dim
    if table.kind == "octonion":
        for i in range(1, d):
            gi = action.generator(i).matrix
            if mat_mul(gi, gi) != mat_scale(Fraction(-1), ident):
                return False
            for j in range(i + 1, d):
                gj = action.generator(j).matrix
                if mat_mul(gi, gj) != mat_scale(Fraction(-1), mat_mul(gj, gi)):
                    return False
        return True

    for i in range(1, d):
        gi = action.generator(i).matrix
        for j in range(1, d):
            sign, k = table.products[i][j]
            if mat_mul(gi, action.generator(j).matrix) != as_matrix(sign, k):
                return False
    return True
