from fractions import Fraction

import pytest

from mapfibers.fields import QQ, PrimeField


def test_rationals_are_exact():
    a = QQ.parse("2/3")
    b = QQ.parse("-5/7")
    assert QQ.mul(a, b) == Fraction(-10, 21)
    assert QQ.add(a, QQ.neg(a)) == QQ.zero()
    assert QQ.div(QQ.one(), a) == Fraction(3, 2)
    assert QQ.characteristic() == 0
    assert QQ.to_str(Fraction(-10, 21)) == "-10/21"


def test_prime_field_reduction():
    F = PrimeField(7)
    assert F.from_int(9) == 2
    assert F.from_int(-1) == 6
    assert F.parse("1/2") == 4          # 2 * 4 = 8 = 1
    assert F.characteristic() == 7


def test_prime_field_inverses():
    F = PrimeField(11)
    for a in range(1, 11):
        assert F.mul(a, F.inv(a)) == F.one()
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_composite_modulus_rejected():
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        PrimeField(1)
