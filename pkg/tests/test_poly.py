from fractions import Fraction

import pytest

from mapfibers.fields import PrimeField
from mapfibers.poly import Polynomial
from mapfibers.rings import standard_ring

R = standard_ring(("x", "y", "z"))
x, y, z = (Polynomial.variable(R, i) for i in range(3))


def test_ring_arithmetic():
    f = (x + y) * (x - y)
    assert f == x * x - y * y
    assert (x + y) ** 2 == x * x + x.scale(2) * y + y * y
    assert (f - f).is_zero()
    assert x * (y + z) == x * y + x * z


def test_frobenius_over_gf2():
    R2 = standard_ring(("x", "y"), PrimeField(2))
    a = Polynomial.variable(R2, 0)
    b = Polynomial.variable(R2, 1)
    assert (a + b) ** 2 == a * a + b * b


def test_degree_and_homogeneity():
    assert (x * y * z).degree() == 3
    assert (x + y).is_homogeneous()
    assert not (x + y * z).is_homogeneous()
    assert Polynomial.zero(R).is_zero()
    assert Polynomial.constant(R, 0).is_zero()
    assert Polynomial.constant(R, Fraction(3, 4)).degree() == 0


def test_evaluate_and_substitute():
    f = x * x - y * z
    vals = [Fraction(2), Fraction(3), Fraction(1)]
    assert f.evaluate(vals) == Fraction(1)
    g = f.substitute({0: y + z})          # x -> y + z, same ring
    assert g == (y + z) * (y + z) - y * z


def test_string_form_is_parseable():
    from mapfibers.mapfile import parse_polynomial
    f = x ** 3 - (x * y * z).scale(2) + z ** 3
    g = parse_polynomial(str(f), R)
    assert g == f


def test_mul_term():
    f = x + y
    assert f.mul_term((1, 0, 1), R.field.from_int(3)) == \
        (x * x * z + x * y * z).scale(3)
