from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from algebra.models.domain import GF, QQ, ZZ, is_prime
from common.errors.exceptions import DomainMismatchError, InvalidParameterError


def test_is_prime() -> None:
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(True)


def test_prime_field_rejects_composite_modulus() -> None:
    with pytest.raises(InvalidParameterError):
        GF(4)
    with pytest.raises(InvalidParameterError):
        GF(1)


def test_prime_field_reduces_integers_and_fractions() -> None:
    f = GF(7)
    assert f(9) == 2
    assert f(-1) == 6
    assert f(Fraction(1, 2)) == 4
    with pytest.raises(InvalidParameterError):
        f(Fraction(1, 7))


def test_fields_do_not_mix() -> None:
    with pytest.raises(DomainMismatchError):
        GF(3)(1) + GF(5)(1)
    with pytest.raises(DomainMismatchError):
        QQ(1) * GF(2)(1)


def test_rational_ordering_and_sign() -> None:
    assert QQ(Fraction(-1, 2)) < QQ(0) < 1
    assert QQ(-3).sign() == -1
    with pytest.raises(TypeError):
        GF(5)(1) < GF(5)(2)


def test_integer_ring_normal_form() -> None:
    assert ZZ.unit_normal(-6) == (6, -1)
    assert ZZ.gcd(12, -18) == 6
    assert ZZ.is_unit(-1) and not ZZ.is_unit(2)


def test_elements_of_prime_field_enumerate_once() -> None:
    assert [int(str(x)) for x in GF(5).elements()] == [0, 1, 2, 3, 4]


@given(st.integers(min_value=1, max_value=96))
def test_prime_field_inverse(a: int) -> None:
    f = GF(97)
    x = f(a)
    assert x * x.inverse() == 1
    assert x / x == f.one


@given(st.fractions(), st.fractions().filter(lambda b: b != 0))
def test_rational_division_is_exact(a: Fraction, b: Fraction) -> None:
    assert (QQ(a) / QQ(b)) * b == a
