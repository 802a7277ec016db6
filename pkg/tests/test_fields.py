from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from strategies import prime_fields, rationals
from ujla.fields import QQ, PrimeField, parse_field


def test_rational_arithmetic():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert QQ.mul(Fraction(2, 3), Fraction(3, 4)) == Fraction(1, 2)
    assert QQ.neg(Fraction(1, 2)) == Fraction(-1, 2)


def test_prime_field_inverse():
    F5 = PrimeField(5)
    assert F5.inv(2) == 3
    assert F5.mul(2, F5.inv(2)) == 1


def test_inverse_of_zero_is_an_error():
    with pytest.raises(ZeroDivisionError):
        QQ.inv(Fraction(0))
    with pytest.raises(ZeroDivisionError):
        PrimeField(7).inv(0)


def test_non_prime_modulus_rejected():
    with pytest.raises(ValueError, match="must be prime"):
        PrimeField(4)
    with pytest.raises(ValueError, match="must be prime"):
        parse_field("F10")
    with pytest.raises(ValueError, match="2\\^31"):
        PrimeField(2 ** 31 + 11)


def test_parse_field_labels():
    assert parse_field("Q") == QQ
    assert parse_field("F5") == PrimeField(5)
    with pytest.raises(ValueError):
        parse_field("R")


def test_scalar_parsing_and_formatting():
    assert QQ.parse("5/6") == Fraction(5, 6)
    assert QQ.parse("-3") == Fraction(-3)
    assert QQ.format(Fraction(5, 6)) == "5/6"
    assert QQ.format(Fraction(4, 2)) == "2"
    F5 = PrimeField(5)
    assert F5.parse("7") == 2
    assert F5.parse("-1") == 4
    assert F5.parse("1/2") == 3
    assert F5.format(8) == "3"
    with pytest.raises(ValueError):
        QQ.parse("x")
    with pytest.raises(ValueError):
        F5.parse("a/b")


def test_from_fraction():
    F5 = PrimeField(5)
    assert F5.from_fraction(Fraction(1, 2)) == 3
    with pytest.raises(ZeroDivisionError):
        PrimeField(2).from_fraction(Fraction(1, 2))


def test_elements_enumeration():
    assert list(PrimeField(3).elements()) == [0, 1, 2]
    with pytest.raises(ValueError):
        QQ.elements()


@given(rationals)
def test_rational_inverse_exact(x):
    if x != 0:
        assert QQ.mul(x, QQ.inv(x)) == Fraction(1)


@given(prime_fields, st.integers(), st.integers(), st.integers())
def test_prime_field_ring_axioms(field, a, b, c):
    a, b, c = field.normalize(a), field.normalize(b), field.normalize(c)
    assert field.add(a, b) == field.add(b, a)
    assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
    assert field.add(a, field.neg(a)) == field.zero
    if a != field.zero:
        assert field.mul(a, field.inv(a)) == field.one


@given(prime_fields, st.integers(min_value=0, max_value=100))
def test_prime_field_parse_roundtrip(field, n):
    x = field.normalize(n)
    assert field.parse(field.format(x)) == x
