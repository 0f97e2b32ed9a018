"""Unital composition algebras given by multiplication tables.

Five builtin tables: complex, para-complex (split-complex), quaternion,
para-quaternion (split-quaternion) and octonion.  A table stores each basis
product as a signed basis index, plus the signs of the diagonal quadratic form
N(x) = sum_i sign_i * x_i^2 that the multiplication composes with
(N(x*y) = N(x) * N(y)).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import Matrix, Vector, ZERO, rational, vector

KINDS = ("complex", "para_complex", "quaternion", "para_quaternion", "octonion")


class TableMismatch(Exception):
    """Elements of different algebra tables were combined."""


# Multiplication tables written row by row: entry [i][j] is e_i * e_j.

_COMPLEX = [
    ["e0", "e1"],
    ["e1", "-e0"],
]

_PARA_COMPLEX = [
    ["e0", "e1"],
    ["e1", "e0"],
]

_QUATERNION = [
    ["e0", "e1", "e2", "e3"],
    ["e1", "-e0", "e3", "-e2"],
    ["e2", "-e3", "-e0", "e1"],
    ["e3", "e2", "-e1", "-e0"],
]

_PARA_QUATERNION = [
    ["e0", "e1", "e2", "e3"],
    ["e1", "-e0", "e3", "-e2"],
    ["e2", "-e3", "e0", "-e1"],
    ["e3", "e2", "e1", "e0"],
]

_OCTONION = [
    ["e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7"],
    ["e1", "-e0", "e3", "-e2", "e5", "-e4", "-e7", "e6"],
    ["e2", "-e3", "-e0", "e1", "e6", "e7", "-e4", "-e5"],
    ["e3", "e2", "-e1", "-e0", "e7", "-e6", "e5", "-e4"],
    ["e4", "-e5", "-e6", "-e7", "-e0", "e1", "e2", "e3"],
    ["e5", "e4", "-e7", "e6", "-e1", "-e0", "-e3", "e2"],
    ["e6", "e7", "e4", "-e5", "-e2", "e3", "-e0", "-e1"],
    ["e7", "-e6", "e5", "e4", "-e3", "-e2", "e1", "-e0"],
]

_TABLES = {
    "complex": (_COMPLEX, (1, 1)),
    "para_complex": (_PARA_COMPLEX, (1, -1)),
    "quaternion": (_QUATERNION, (1, 1, 1, 1)),
    "para_quaternion": (_PARA_QUATERNION, (1, 1, -1, -1)),
    "octonion": (_OCTONION, (1,) * 8),
}


def parse_signed_symbol(sym: str) -> tuple[int, int]:
    """Parse '-e3' / 'e3' into (sign, index)."""
    s = sym.strip()
    sign = 1
    if s.startswith("-"):
        sign = -1
        s = s[1:]
    elif s.startswith("+"):
        s = s[1:]
    if not s.startswith("e"):
        raise ValueError(f"bad basis symbol {sym!r}")
    return sign, int(s[1:])


@dataclass(frozen=True)
class AlgebraTable:
    """Structure constants of a composition algebra, one signed index per product."""

    kind: str
    products: tuple[tuple[tuple[int, int], ...], ...]
    form_signs: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.form_signs)

    def product_index(self, i: int, j: int) -> tuple[int, int]:
        return self.products[i][j]

    def unit_is_two_sided(self) -> bool:
        n = self.dim
        return all(self.products[0][j] == (1, j) for j in range(n)) and all(
            self.products[i][0] == (1, i) for i in range(n)
        )

    def with_flipped_sign(self, i: int, j: int) -> "AlgebraTable":
        """Copy of the table with the sign of one product entry flipped."""
        rows = [list(r) for r in self.products]
        s, k = rows[i][j]
        rows[i][j] = (-s, k)
        return AlgebraTable(self.kind, tuple(tuple(r) for r in rows), self.form_signs)


@lru_cache(maxsize=None)
def builtin(kind: str) -> AlgebraTable:
    """The builtin table for one of the five supported kinds."""
    if kind not in _TABLES:
        raise ValueError(f"unknown algebra kind {kind!r}")
    rows, signs = _TABLES[kind]
    products = tuple(tuple(parse_signed_symbol(s) for s in row) for row in rows)
    return AlgebraTable(kind, products, tuple(signs))


@dataclass(frozen=True)
class AlgebraElement:
    table: AlgebraTable
    coeffs: Vector

    def __post_init__(self):
        object.__setattr__(self, "coeffs", vector(self.coeffs))
        if len(self.coeffs) != self.table.dim:
            raise TableMismatch("coefficient count does not match table dimension")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if other.table != self.table:
            raise TableMismatch("elements belong to different tables")
        return AlgebraElement(self.table, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if other.table != self.table:
            raise TableMismatch("elements belong to different tables")
        return AlgebraElement(self.table, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return multiply(self, other)

    def scale(self, c) -> "AlgebraElement":
        c = rational(c)
        return AlgebraElement(self.table, tuple(c * a for a in self.coeffs))


def basis_element(table: AlgebraTable, i: int) -> AlgebraElement:
    coeffs = [ZERO] * table.dim
    coeffs[i] = Fraction(1)
    return AlgebraElement(table, tuple(coeffs))


def element(table: AlgebraTable, coeffs) -> AlgebraElement:
    return AlgebraElement(table, vector(coeffs))


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the basis product table."""
    if x.table != y.table:
        raise TableMismatch("elements belong to different tables")
    t = x.table
    out = [ZERO] * t.dim
    for i, a in enumerate(x.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(y.coeffs):
            if b == 0:
                continue
            sign, k = t.products[i][j]
            out[k] += sign * a * b
    return AlgebraElement(t, tuple(out))


def conjugate(x: AlgebraElement) -> AlgebraElement:
    """Conjugation: keep the e0 part, negate the imaginary part."""
    coeffs = [-a for a in x.coeffs]
    coeffs[0] = x.coeffs[0]
    return AlgebraElement(x.table, tuple(coeffs))


def norm(x: AlgebraElement) -> Fraction:
    """Quadratic form N(x) = sum_i form_sign_i * x_i^2."""
    return sum((s * a * a for s, a in zip(x.table.form_signs, x.coeffs)), ZERO)


def is_pure_imaginary(x: AlgebraElement) -> bool:
    return x.coeffs[0] == 0


def random_element(table: AlgebraTable, rng: random.Random) -> AlgebraElement:
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(table.dim)]
    return AlgebraElement(table, tuple(coeffs))


def check_composition(table: AlgebraTable, trials: int, seed: int) -> bool:
    """Check N(x*y) = N(x)*N(y) exactly on seeded pseudo-random rational pairs."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    for _ in range(trials):
        x = random_element(table, rng)
        y = random_element(table, rng)
        if norm(multiply(x, y)) != norm(x) * norm(y):
            return False
    return True


def left_mult_matrix(table: AlgebraTable, i: int) -> Matrix:
    """Matrix of y -> e_i * y in the basis (columns are the basis images)."""
    n = table.dim
    rows = [[ZERO] * n for _ in range(n)]
    for j in range(n):
        sign, k = table.products[i][j]
        rows[k][j] = Fraction(sign)
    return tuple(tuple(r) for r in rows)
