import pytest

from algebra.models.domain import GF, QQ
from common.errors.exceptions import DimensionError, DomainMismatchError
from matrix.models.mat import Mat
from support import qmat


def test_construction_coerces_entries() -> None:
    m = Mat([[5, -1]], GF(3))
    assert m.to_lists() == [[GF(3)(2), GF(3)(2)]]


def test_ragged_and_empty_matrices_are_refused() -> None:
    with pytest.raises(DimensionError):
        Mat([[1, 2], [3]], QQ)
    with pytest.raises(DimensionError):
        Mat([], QQ)


def test_entries_from_another_field_are_refused() -> None:
    with pytest.raises(DomainMismatchError):
        Mat([[GF(5)(1)]], QQ)


def test_arithmetic() -> None:
    a = qmat([[1, 2], [3, 4]])
    b = qmat([[0, 1], [1, 0]])
    assert a @ b == qmat([[2, 1], [4, 3]])
    assert a + b - b == a
    assert a.scale(2) == a + a
    assert a**2 == a @ a
    assert a.trace() == 5
    with pytest.raises(DimensionError):
        a @ qmat([[1, 2, 3]])


def test_block_diag_and_slicing() -> None:
    m = Mat.block_diag([qmat([[1]]), qmat([[2, 3], [4, 5]])], QQ)
    assert m == qmat([[1, 0, 0], [0, 2, 3], [0, 4, 5]])
    assert m.leading(2) == qmat([[1, 0], [0, 2]])
    assert m.select_columns([2, 0]) == qmat([[0, 1], [3, 0], [5, 0]])
    assert Mat.from_columns(m.columns(), QQ) == m


def test_predicates() -> None:
    s = qmat([[1, 2], [2, 1]])
    assert s.is_symmetric() and not s.is_diagonal()
    assert Mat.diag([1, 2], QQ).is_diagonal()
    assert Mat.zeros(2, 3, QQ).is_zero()
    assert s.transpose() == s.T == s
