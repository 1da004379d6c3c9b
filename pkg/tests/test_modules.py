from mapfibers.cohomology import quotient_resolution
from mapfibers.ideals import Ideal
from mapfibers.modules import (FreeModule, FreeModuleMap, kernel_of_free_map,
                               lift_through_generators, module_groebner,
                               vector_degree)
from mapfibers.poly import Polynomial
from mapfibers.rings import standard_ring

R = standard_ring(("x", "y", "z"))
x, y, z = (Polynomial.variable(R, i) for i in range(3))
zero = Polynomial.zero(R)


def test_koszul_syzygy_of_two_variables():
    target = FreeModule(R, (0,))
    source = FreeModule(R, (1, 1))
    M = FreeModuleMap(source, target, [[x, y]])
    ker = kernel_of_free_map(M)
    assert len(ker) == 1
    sy = ker[0]
    assert M.apply(sy) == (zero,)
    # the syzygy is (y, -x) up to sign and scale
    assert {str(sy[0]).lstrip("-"), str(sy[1]).lstrip("-")} == {"x", "y"}


def test_kernel_elements_map_to_zero(quintic_map):
    forms = list(quintic_map.forms)
    ring = quintic_map.source
    target = FreeModule(ring, (0,))
    source = FreeModule(ring, (5,) * 4)
    M = FreeModuleMap(source, target, [forms])
    ker = kernel_of_free_map(M)
    degs = sorted(vector_degree(v, source.shifts) for v in ker)
    assert degs == [6, 6, 8]
    for v in ker:
        assert all(c.is_zero() for c in M.apply(v))


def test_resolution_of_two_variables():
    res = quotient_resolution(Ideal(R, [x, y]))
    assert res.betti()[0] == [(0, 1)]
    assert res.betti()[1] == [(1, 2)]
    assert res.betti()[2] == [(2, 1)]
    # composition of consecutive maps vanishes
    for i in range(len(res.maps) - 1):
        outer, inner = res.maps[i], res.maps[i + 1]
        for c in range(inner.source.rank):
            img = inner.column(c)
            assert all(e.is_zero() for e in outer.apply(img))


def test_quintic_resolution_shifts(quintic_ideal):
    res = quotient_resolution(quintic_ideal)
    assert res.betti()[1] == [(5, 4)]
    assert res.betti()[2] == [(6, 2), (8, 1)]


def test_lift_through_generators():
    free = FreeModule(R, (0, 0))
    gens = [(x, y), (zero, z)]
    vec = (x * z, y * z + z * z)
    lam = lift_through_generators(vec, gens, free)
    assert lam is not None
    lhs0 = lam[0] * gens[0][0] + lam[1] * gens[1][0]
    lhs1 = lam[0] * gens[0][1] + lam[1] * gens[1][1]
    assert lhs0 == vec[0] and lhs1 == vec[1]
    assert lift_through_generators((Polynomial.constant(R, 1), zero),
                                   gens, free) is None


def test_module_groebner_membership():
    free = FreeModule(R, (0, 0))
    gens = [(x, zero), (zero, y)]
    mgb = module_groebner(gens, free)
    assert mgb.contains((x * y, y * y))
    assert not mgb.contains((y, zero))
