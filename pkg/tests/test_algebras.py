import random
from fractions import Fraction

import pytest

from antisub.algebras import (
    AlgebraElement,
    TableMismatch,
    basis_element,
    builtin,
    check_composition,
    conjugate,
    element,
    is_pure_imaginary,
    left_mult_matrix,
    multiply,
    norm,
    random_element,
)

F = Fraction

# Independent transcriptions of the three nontrivial tables as (sign, index)
# pairs, kept deliberately separate from the package's string-symbol encoding.

QUATERNION_EXPECTED = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
]

PARA_QUATERNION_EXPECTED = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (1, 0), (-1, 1)],
    [(1, 3), (1, 2), (1, 1), (1, 0)],
]

OCTONION_EXPECTED = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (-1, 7), (1, 6)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1), (1, 6), (1, 7), (-1, 4), (-1, 5)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0), (1, 7), (-1, 6), (1, 5), (-1, 4)],
    [(1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 5), (1, 4), (-1, 7), (1, 6), (-1, 1), (-1, 0), (-1, 3), (1, 2)],
    [(1, 6), (1, 7), (1, 4), (-1, 5), (-1, 2), (1, 3), (-1, 0), (-1, 1)],
    [(1, 7), (-1, 6), (1, 5), (1, 4), (-1, 3), (-1, 2), (1, 1), (-1, 0)],
]


@pytest.mark.parametrize("kind,expected", [
    ("quaternion", QUATERNION_EXPECTED),
    ("para_quaternion", PARA_QUATERNION_EXPECTED),
    ("octonion", OCTONION_EXPECTED),
])
def test_table_fidelity(kind, expected):
    table = builtin(kind)
    for i in range(table.dim):
        for j in range(table.dim):
            assert table.products[i][j] == expected[i][j], f"{kind} entry ({i},{j})"


def test_form_signs():
    assert builtin("complex").form_signs == (1, 1)
    assert builtin("para_complex").form_signs == (1, -1)
    assert builtin("quaternion").form_signs == (1, 1, 1, 1)
    assert builtin("para_quaternion").form_signs == (1, 1, -1, -1)
    assert builtin("octonion").form_signs == (1,) * 8


def test_unit_is_two_sided_everywhere():
    for kind in ("complex", "para_complex", "quaternion", "para_quaternion", "octonion"):
        assert builtin(kind).unit_is_two_sided()


def test_specific_products():
    q = builtin("quaternion")
    assert q.products[1][2] == (1, 3)    # e1 e2 = e3
    assert q.products[2][1] == (-1, 3)   # e2 e1 = -e3
    pq = builtin("para_quaternion")
    assert pq.products[2][2] == (1, 0)   # e2 e2 = +e0
    o = builtin("octonion")
    assert o.products[1][2] == (1, 3)
    assert o.products[2][1] == (-1, 3)
    assert o.products[4][5] == (1, 1)    # e4 e5 = e1


def test_multiply_unit_and_bilinearity():
    for kind in ("complex", "para_complex", "quaternion", "para_quaternion", "octonion"):
        table = builtin(kind)
        rng = random.Random(5)
        x = random_element(table, rng)
        unit = basis_element(table, 0)
        assert multiply(unit, x).coeffs == x.coeffs
        assert multiply(x, unit).coeffs == x.coeffs


def test_multiply_derived_value():
    q = builtin("quaternion")
    x = element(q, [0, 1, 1, 0])       # e1 + e2
    y = basis_element(q, 3)            # e3
    # row e1: e1 e3 = -e2; row e2: e2 e3 = e1
    assert multiply(x, y).coeffs == (F(0), F(1), F(-1), F(0))


def test_multiply_table_mismatch():
    with pytest.raises(TableMismatch):
        multiply(basis_element(builtin("quaternion"), 1), basis_element(builtin("octonion"), 1))


def test_norm_and_conjugate():
    q = builtin("quaternion")
    assert norm(basis_element(q, 0)) == 1
    assert norm(element(q, [1, 2, 3, 0])) == 14
    pq = builtin("para_quaternion")
    assert norm(basis_element(pq, 2)) == -1
    x = element(q, ["1/2", 1, 0, "-3"])
    assert conjugate(conjugate(x)).coeffs == x.coeffs


def test_real_part_of_x_xbar_is_norm():
    rng = random.Random(17)
    for kind in ("complex", "para_complex", "quaternion", "para_quaternion", "octonion"):
        table = builtin(kind)
        for _ in range(25):
            x = random_element(table, rng)
            prod = multiply(x, conjugate(x))
            assert prod.coeffs[0] == norm(x)
            assert all(c == 0 for c in prod.coeffs[1:])


def test_composition_identity_all_tables():
    for kind in ("complex", "para_complex", "quaternion", "para_quaternion", "octonion"):
        assert check_composition(builtin(kind), trials=200, seed=42)


def test_composition_para_quaternion_basis_exhaustive():
    pq = builtin("para_quaternion")
    for i in range(4):
        for j in range(4):
            x, y = basis_element(pq, i), basis_element(pq, j)
            assert norm(multiply(x, y)) == norm(x) * norm(y)


def test_composition_detects_corruption():
    corrupted = builtin("quaternion").with_flipped_sign(1, 2)
    assert not check_composition(corrupted, trials=200, seed=42)


def test_is_pure_imaginary():
    q = builtin("quaternion")
    assert is_pure_imaginary(basis_element(q, 1))
    assert not is_pure_imaginary(element(q, [1, 1, 0, 0]))
    assert is_pure_imaginary(basis_element(builtin("octonion"), 7))


def test_quaternion_associativity_all_triples():
    q = builtin("quaternion")
    es = [basis_element(q, i) for i in range(4)]
    for a in es:
        for b in es:
            for c in es:
                assert multiply(multiply(a, b), c).coeffs == multiply(a, multiply(b, c)).coeffs


def test_octonion_nonassociative_witness():
    o = builtin("octonion")
    e1, e2, e4 = basis_element(o, 1), basis_element(o, 2), basis_element(o, 4)
    lhs = multiply(multiply(e1, e2), e4)
    rhs = multiply(e1, multiply(e2, e4))
    assert lhs.coeffs != rhs.coeffs


def test_octonion_pure_imaginary_orthogonality():
    o = builtin("octonion")
    for i in range(1, 8):
        x = basis_element(o, i)
        for j in range(8):
            y = basis_element(o, j)
            prod = multiply(x, y)
            assert sum(a * b for a, b in zip(prod.coeffs, y.coeffs)) == 0
    # and against random vectors, by bilinearity
    rng = random.Random(29)
    for _ in range(50):
        y = random_element(o, rng)
        i = rng.randint(1, 7)
        prod = multiply(basis_element(o, i), y)
        assert sum(a * b for a, b in zip(prod.coeffs, y.coeffs)) == 0


def test_left_mult_matrix_matches_multiply():
    rng = random.Random(31)
    for kind in ("quaternion", "para_quaternion", "octonion"):
        table = builtin(kind)
        for i in range(1, table.dim):
            m = left_mult_matrix(table, i)
            y = random_element(table, rng)
            via_matrix = tuple(sum(m[r][c] * y.coeffs[c] for c in range(table.dim))
                               for r in range(table.dim))
            assert via_matrix == multiply(basis_element(table, i), y).coeffs


def test_check_composition_requires_trials():
    with pytest.raises(ValueError):
        check_composition(builtin("complex"), trials=0, seed=1)
