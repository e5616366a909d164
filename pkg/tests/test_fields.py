from fractions import Fraction

import pytest

from dgbr.errors import DgError, ParseError
from dgbr.fields import GF, QQ, field_from_description


def test_rational_parse_and_format():
    assert QQ.parse("3/4") == Fraction(3, 4)
    assert QQ.parse("-7") == Fraction(-7)
    assert QQ.format(Fraction(-1, 2)) == "-1/2"
    assert QQ.format(Fraction(5)) == "5"


@pytest.mark.parametrize("bad", ["1.5", "2e3", "1/0", "x", "", "1/2/3"])
def test_rational_parse_rejects(bad):
    with pytest.raises(ParseError):
        QQ.parse(bad)


def test_rational_arithmetic():
    a = QQ.parse("2/3")
    b = QQ.parse("3/5")
    assert QQ.mul(a, QQ.inv(a)) == QQ.one
    assert QQ.add(a, QQ.neg(a)) == QQ.zero
    assert QQ.mul(a, b) == Fraction(2, 5)
    assert QQ.characteristic() == 0


def test_prime_field_arithmetic():
    F = GF(7)
    assert F.add(5, 4) == 2
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.neg(2) == 5
    assert F.parse("12") == 5
    assert F.parse("-1") == 6
    assert F.format(6) == "6"
    assert F.characteristic() == 7


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        GF(5).inv(0)
    with pytest.raises(ZeroDivisionError):
        QQ.inv(QQ.zero)


def test_gf_requires_prime():
    with pytest.raises(DgError):
        GF(6)
    with pytest.raises(DgError):
        GF(1)


def test_gf_instances_cached():
    assert GF(5) is GF(5)
    assert GF(5) == GF(5)
    assert GF(5) != GF(7)
    assert GF(2) != QQ


def test_field_from_description_roundtrip():
    assert field_from_description(QQ.describe()) is QQ
    assert field_from_description(GF(3).describe()) is GF(3)


@pytest.mark.parametrize("desc", [
    {"kind": "real"},
    {"kind": "prime"},
    {"kind": "prime", "p": 4},
    {"kind": "rationals", "p": 3},
    {},
    "rationals",
])
def test_field_from_description_rejects(desc):
    with pytest.raises((ParseError, DgError)):
        field_from_description(desc)


def test_coerce():
    assert QQ.coerce(2) == Fraction(2)
    assert GF(3).coerce(5) == 2
    assert GF(3).coerce(-1) == 2
