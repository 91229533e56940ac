import random

import pytest
import sympy
from hypothesis import given, strategies as st

from algebra.models.domain import GF, QQ, ZZ
from common.errors.exceptions import DimensionError, SingularMatrixError
from matrix.models.mat import Mat
from matrix.services.matrix_service import MatrixService, get_matrix_service
from support import FOOTNOTE_23_STIFFNESS, lam, qmat, random_matrix

small_square = st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=-5, max_value=5), min_size=n, max_size=n), min_size=n, max_size=n
    )
)


def test_det_of_footnote_23_characteristic_matrix(matrix_service: MatrixService) -> None:
    k = qmat(FOOTNOTE_23_STIFFNESS)
    assert matrix_service.characteristic_polynomial(k) == lam(1, -4, 3, 0)
    assert matrix_service.det(k) == 0


def test_det_with_row_swaps(matrix_service: MatrixService) -> None:
    assert matrix_service.det(qmat([[0, 1], [1, 0]])) == -1
    assert matrix_service.det(qmat([[0, 0, 1], [0, 2, 0], [3, 0, 0]])) == -6


def test_det_over_integers_and_prime_fields(matrix_service: MatrixService) -> None:
    assert matrix_service.det(Mat([[2, 3], [4, 5]], ZZ)) == -2
    assert matrix_service.det(Mat([[2, 3], [4, 5]], GF(2))) == 0


def test_adjugate_identity(matrix_service: MatrixService) -> None:
    rng = random.Random(3)
    for _ in range(20):
        a = random_matrix(4, QQ, rng)
        d = matrix_service.det(a)
        assert a @ matrix_service.adjugate(a) == Mat.identity(4, QQ).scale(d)


def test_inverse_and_singular_refusal(matrix_service: MatrixService) -> None:
    a = qmat([[2, 1], [1, 1]])
    assert matrix_service.inverse(a) == qmat([[1, -1], [-1, 2]])
    with pytest.raises(SingularMatrixError):
        matrix_service.inverse(qmat([[1, 2], [2, 4]]))
    with pytest.raises(SingularMatrixError):
        matrix_service.inverse(Mat([[2, 0], [0, 1]], ZZ))


def test_rank_and_nullspace(matrix_service: MatrixService) -> None:
    a = qmat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert matrix_service.rank(a) == 2
    basis = matrix_service.nullspace(a)
    assert len(basis) == 1
    assert (a @ basis[0]).is_zero()
    assert len(matrix_service.column_space(a)) == 2


def test_generic_rank_of_polynomial_matrix(matrix_service: MatrixService) -> None:
    m = matrix_service.pencil_matrix(qmat([[1, 1], [1, 1]]), qmat([[1, 1], [1, 1]]))
    assert matrix_service.rank(m) == 1
    assert matrix_service.rank(matrix_service.characteristic_matrix(qmat([[0, 1], [0, 0]]))) == 2


def test_minors_are_enumerated_in_order(matrix_service: MatrixService) -> None:
    minors = matrix_service.k_minors(qmat([[1, 2, 3], [4, 5, 6]]), 2)
    assert [(m.rows, m.cols) for m in minors] == [((0, 1), (0, 1)), ((0, 1), (0, 2)), ((0, 1), (1, 2))]
    assert [m.value for m in minors] == [-3, -6, -3]
    with pytest.raises(DimensionError):
        matrix_service.k_minors(qmat([[1]]), 2)


def test_pencil_matrix_and_evaluation(matrix_service: MatrixService) -> None:
    p, q = qmat([[1, 0], [0, 2]]), qmat([[0, 1], [3, 0]])
    m = matrix_service.pencil_matrix(p, q)
    assert matrix_service.evaluate(m, 5) == p.scale(5) + q


@given(small_square)
def test_bareiss_agrees_with_cofactors_and_sympy(rows: list[list[int]]) -> None:
    service = get_matrix_service()
    a = qmat(rows)
    d = service.det(a)
    assert d == service.det_by_cofactors(a)
    assert d == int(sympy.Matrix(rows).det())


@given(small_square)
def test_inverse_round_trip(rows: list[list[int]]) -> None:
    service = get_matrix_service()
    a = qmat(rows)
    if service.det(a):
        assert service.inverse(a) @ a == Mat.identity(a.nrows, QQ)
    else:
        assert service.rank(a) < a.nrows
