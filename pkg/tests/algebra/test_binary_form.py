import pytest

from algebra.models.binary_form import BinaryForm, HomogeneousPoint
from algebra.models.domain import GF, QQ
from common.errors.exceptions import InvalidParameterError
from support import lam


def test_linear_form_and_power() -> None:
    f = BinaryForm.linear(1, -1, QQ) ** 2
    assert f == BinaryForm([1, -2, 1], QQ)
    assert f.render() == "u²−2uv+v²"
    assert f.render(machine=True) == "u^2-2*u*v+v^2"
    assert f.evaluate(3, 1) == 4


def test_homogenize_keeps_degree() -> None:
    f = BinaryForm.from_dehomogenized(lam(1, -2), 3)
    assert f.degree == 3
    assert f == BinaryForm.linear(1, -2, QQ) * BinaryForm.linear(0, 1, QQ) ** 2
    assert f.dehomogenize() == lam(1, -2)


def test_sign_relative_to() -> None:
    f = BinaryForm.linear(1, 1, QQ) ** 3
    assert f.sign_relative_to(f) == 1
    assert (-f).sign_relative_to(f) == -1
    assert BinaryForm.linear(1, 2, QQ).sign_relative_to(BinaryForm.linear(1, 1, QQ)) is None


def test_homogeneous_points_normalize() -> None:
    assert HomogeneousPoint(4, 2, QQ) == HomogeneousPoint(2, 1, QQ)
    assert HomogeneousPoint(3, 0, QQ).is_infinite()
    assert HomogeneousPoint(1, 2, GF(3)).render() == "(2:1)"
    with pytest.raises(InvalidParameterError):
        HomogeneousPoint(0, 0, QQ)


def test_point_lies_on_its_linear_form() -> None:
    point = HomogeneousPoint(5, 1, QQ)
    assert point.linear_form().evaluate(point.a, point.b) == 0
