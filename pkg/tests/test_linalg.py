from fractions import Fraction

import pytest

from dgbr.errors import ShapeMismatch
from dgbr.fields import GF, QQ
from dgbr.linalg import Matrix


def mat(rows, field=QQ):
    return Matrix(field, [[field.coerce(x) for x in r] for r in rows])


def test_rref_and_rank():
    m = mat([[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    R, pivots = m.rref()
    assert pivots == (0, 1)
    assert m.rank() == 2
    # pivot columns are cleared above and below
    assert R.rows[0][0] == 1 and R.rows[1][1] == 1
    assert R.rows[0][1] == 0


def test_kernel_basis_exact():
    m = mat([[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    ker = m.kernel_basis()
    assert len(ker) == 1
    (v,) = ker
    assert v[2] == 1  # free variable set to one
    for row in m.rows:
        assert sum(a * b for a, b in zip(row, v)) == 0


def test_kernel_of_injective_map_is_empty():
    assert mat([[1, 0], [0, 1], [3, 7]]).kernel_basis() == []


def test_zero_row_matrix_with_ncols_hint():
    m = Matrix(QQ, [], ncols=3)
    assert m.rank() == 0
    assert len(m.kernel_basis()) == 3


def test_solve_particular_and_inconsistent():
    m = mat([[1, 1], [0, 1]])
    sol = m.solve((Fraction(3), Fraction(1)))
    assert sol == (Fraction(2), Fraction(1))
    m2 = mat([[1, 1], [2, 2]])
    assert m2.solve((Fraction(1), Fraction(3))) is None


def test_solve_picks_canonical_solution():
    # underdetermined: free variables stay zero
    m = mat([[1, 1, 1]])
    assert m.solve((Fraction(5),)) == (Fraction(5), Fraction(0), Fraction(0))


def test_inverse():
    m = mat([[2, 1], [1, 1]])
    inv = m.inverse()
    assert inv.rows[0] == (Fraction(1), Fraction(-1))
    assert mat([[1, 2], [2, 4]]).inverse() is None


def test_prime_field_elimination():
    F = GF(5)
    assert mat([[2, 1], [3, 4]], F).rank() == 1  # det = 5 = 0 here
    m = mat([[2, 1], [3, 3]], F)
    assert m.rank() == 2
    inv = m.inverse()
    prod = [
        [sum(m.rows[i][k] * inv.rows[k][j] for k in range(2)) % 5 for j in range(2)]
        for i in range(2)
    ]
    assert prod == [[1, 0], [0, 1]]


def test_from_columns_shape_checks():
    cols = [(Fraction(1), Fraction(0)), (Fraction(2), Fraction(1))]
    m = Matrix.from_columns(QQ, cols, 2)
    assert m.column(1) == (Fraction(2), Fraction(1))
    with pytest.raises(ShapeMismatch):
        Matrix.from_columns(QQ, [(Fraction(1),)], 2)


def test_column_space_pivots():
    m = mat([[1, 2, 0], [2, 4, 1]])
    assert m.column_space_pivots() == (0, 2)


def test_hstack():
    a = mat([[1], [0]])
    b = mat([[0], [1]])
    assert a.hstack(b).rank() == 2
