from fractions import Fraction

import pytest
from hypothesis import given

from hhc.dyadic import CENTER, HALF, Dyadic, DyadicVec2

from conftest import dyadics


def test_canonical_form():
    assert Dyadic(4, 3) == Dyadic(1, 1)
    assert (Dyadic(4, 3).numerator, Dyadic(4, 3).exponent) == (1, 1)
    z = Dyadic(0, 9)
    assert (z.numerator, z.exponent) == (0, 0)
    assert Dyadic(6, 0).exponent == 0
    assert Dyadic(3, -2) == Dyadic(12)


def test_str_and_parse():
    assert str(Dyadic(1, 3)) == "1/2^3"
    assert str(Dyadic(0)) == "0/2^0"
    assert str(Dyadic(-3, 2)) == "-3/2^2"
    assert Dyadic.parse("5/2^3") == Dyadic(5, 3)
    assert Dyadic.parse("2") == Dyadic(2)
    with pytest.raises(ValueError):
        Dyadic.parse("1/3")


def test_from_fraction_rejects_odd_denominators():
    assert Dyadic.from_fraction(Fraction(3, 8)) == Dyadic(3, 3)
    with pytest.raises(ValueError):
        Dyadic.from_fraction(Fraction(1, 3))


def test_immutable():
    with pytest.raises(AttributeError):
        Dyadic(1).foo = 2


@given(dyadics(), dyadics())
def test_add_sub_exact(a, b):
    assert (a + b) - b == a
    assert (a + b).to_fraction() == a.to_fraction() + b.to_fraction()
    assert (a * b).to_fraction() == a.to_fraction() * b.to_fraction()


@given(dyadics(), dyadics())
def test_ordering_matches_fractions(a, b):
    assert (a < b) == (a.to_fraction() < b.to_fraction())
    assert (a == b) == (a.to_fraction() == b.to_fraction())


@given(dyadics())
def test_halve_negate_roundtrip(a):
    assert a.halve() * 2 == a
    assert -(-a) == a
    assert Dyadic.parse(str(a)) == a
    assert hash(a) == hash(Dyadic(a.numerator << 3, a.exponent + 3))


@given(dyadics())
def test_canonical_invariant(a):
    assert a.numerator % 2 == 1 or (a.numerator == 0 and a.exponent == 0) or a.exponent == 0


def test_vec_ops():
    v = DyadicVec2.of(1, 0)
    assert v.halve() == DyadicVec2(HALF, Dyadic(0))
    assert (CENTER - CENTER).norm2() == 0
    assert (CENTER * 2).norm2() == 2
    assert CENTER.in_unit_square() and not DyadicVec2.of(2, 0).in_unit_square()
