from mapfibers.groebner import normal_form
from mapfibers.ideals import Ideal
from mapfibers.poly import Polynomial
from mapfibers.rings import standard_ring

R4 = standard_ring(("x", "y", "z", "w"))
x, y, z, w = (Polynomial.variable(R4, i) for i in range(4))


def test_twisted_cubic_is_its_own_basis():
    gens = [x * z - y * y, x * w - y * z, y * w - z * z]
    gb = Ideal(R4, gens).groebner()
    # the reduced basis is the generators up to sign normalization
    norm = lambda polys: sorted(min(str(p), str(p.scale(-1))) for p in polys)
    assert norm(gb.polys) == norm(gens)


def test_reduction_collapses_pair():
    R = standard_ring(("x", "y"))
    a, b = Polynomial.variable(R, 0), Polynomial.variable(R, 1)
    gb = Ideal(R, [a * a + b * b, a * a - b * b]).groebner()
    assert sorted(str(g) for g in gb.polys) == ["x^2", "y^2"]


def test_principal_ideal_monic_generator():
    f = (x + y) * (x + y) * z.scale(7)
    gb = Ideal(R4, [f]).groebner()
    assert len(gb.polys) == 1
    lead_coeff = gb.polys[0].sorted_terms()[0][1]
    assert lead_coeff == R4.field.one()


def test_normal_form_membership():
    I = Ideal(R4, [x * z - y * y, x * w - y * z, y * w - z * z])
    gb = I.groebner()
    member = (x * z - y * y) * w - (x * w - y * z) * z
    assert normal_form(member, gb).is_zero()
    assert not normal_form(x * x, gb).is_zero()
    assert I.contains(member)


def test_deterministic_across_generator_order():
    gens = [x * z - y * y, x * w - y * z, y * w - z * z]
    a = Ideal(R4, gens).groebner().polys
    b = Ideal(R4, list(reversed(gens))).groebner().polys
    assert a == b


def test_quintic_initial_ideal(quintic_ideal):
    gb = quintic_ideal.groebner()
    leads = sorted(g.sorted_terms()[0][0] for g in gb.polys)
    assert leads == sorted([(4, 1, 0), (1, 4, 0), (4, 0, 1), (0, 4, 1)])
