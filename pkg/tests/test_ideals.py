import pytest

from mapfibers.ideals import (Ideal, colon, eliminate, exact_divide,
                              ideal_power, ideal_product, ideal_sum,
                              intersect, poly_gcd, poly_gcd_list,
                              radical_contains, saturate_element,
                              saturate_irrelevant, saturate_variable,
                              graded_piece_dim)
from mapfibers.poly import Polynomial
from mapfibers.rings import standard_ring

R = standard_ring(("x", "y", "z"))
x, y, z = (Polynomial.variable(R, i) for i in range(3))


def test_variable_saturation_strips_powers():
    I = Ideal(R, [x * x * y, x * z * z])
    S = saturate_variable(I, 0)
    assert S == Ideal(R, [y, z * z])
    assert saturate_element(I, x) == S


def test_irrelevant_saturation():
    primary = Ideal(R, [x * x, y * y, z * z])     # irrelevant-primary
    assert saturate_irrelevant(primary).contains(Polynomial.constant(R, 1))
    # x·m has the irrelevant ideal as an associated prime; saturation
    # strips it and leaves the hyperplane
    I = Ideal(R, [x * x, x * y, x * z])
    assert saturate_irrelevant(I) == Ideal(R, [x])
    # both components of (xy, xz) = (x) ∩ (y, z) are relevant: no-op
    J = Ideal(R, [x * y, x * z])
    assert saturate_irrelevant(J) == J


def test_saturation_is_idempotent_on_example():
    I = Ideal(R, [x * x * y, y * y * z, z * z * x])
    S = saturate_irrelevant(I)
    assert saturate_irrelevant(S) == S
    for g in I.generators:
        assert S.contains(g)


def test_intersection_and_colon():
    assert intersect(Ideal(R, [x]), Ideal(R, [y])) == Ideal(R, [x * y])
    assert colon(Ideal(R, [x * y]), y) == Ideal(R, [x])
    J = intersect(Ideal(R, [x, y]), Ideal(R, [z]))
    assert J == Ideal(R, [x * z, y * z])


def test_sum_product_power():
    A, B = Ideal(R, [x]), Ideal(R, [y])
    assert ideal_sum(A, B) == Ideal(R, [x, y])
    assert ideal_product(A, B) == Ideal(R, [x * y])
    sq = ideal_power(Ideal(R, [x, y]), 2)
    assert sq == Ideal(R, [x * x, x * y, y * y])


def test_exact_divide():
    f = (x + y) * (x - z)
    assert exact_divide(f, x + y) == x - z
    with pytest.raises(ValueError):
        exact_divide(f, x + z)


def test_poly_gcd():
    f = (x - y) * (x + y)
    g = (x - y) * (x - y)
    G = poly_gcd(f, g)
    assert exact_divide(G, x - y).is_constant()
    assert poly_gcd_list([f, g, (x - y) * z]) == G
    assert poly_gcd(x, y).is_constant()


def test_radical_membership():
    I = Ideal(R, [x * x, y ** 3])
    assert radical_contains(I, x)
    assert radical_contains(I, x + y)
    assert not radical_contains(I, z)


def test_elimination_projects():
    # V(x - y, x - z) projects to the diagonal y = z
    I = Ideal(R, [x - y, x - z])
    J, small = eliminate(I, (0,))
    assert small.variables == ("y", "z")
    assert [str(g) for g in J.minimal_basis()] == ["y - z"]


def test_graded_piece_dimension():
    assert graded_piece_dim([], 2, R) == 0
    # degree-2 piece of (x) is x·R_1: dimension 3
    assert graded_piece_dim([x], 2, R) == 3
