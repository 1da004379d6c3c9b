"""Randomized agreement between the fiber search and brute-force enumeration.

Over GF(7) every projective point can be enumerated, so the search result for
a random degree-3 map from P^2 can be checked two ways:

* every fiber the oracle sees must appear in the search inventory, and
* every extra search point must be invisible to the oracle for the honest
  reason — its fiber carries no GF(7)-rational source point at all.

Each record is also pushed through the factorization check and the degree
bounds deg h_y < d and d * deg h_y <= deg of the base locus.
"""

import random

import pytest

from mapfibers import (PrimeField, base_locus, brute_force_fiber_oracle,
                       build_map, check_fiber_factorization,
                       find_one_dim_fibers, image_ideal, standard_ring)
from mapfibers.fibers import PointProjective
from mapfibers.ideals import degree_monomials
from mapfibers.poly import Polynomial
from mapfibers.solve import projective_points

SEED = 733
F7 = PrimeField(7)
DEGREE = 3
N_MAPS = 20


def _rand_form(rng, ring, deg):
    monos = list(degree_monomials(3, deg))
    k = rng.randint(2, min(5, len(monos)))
    items = [(m, F7.from_int(rng.randrange(1, 7))) for m in rng.sample(monos, k)]
    f = Polynomial.from_terms(ring, items)
    return f if not f.is_zero() else Polynomial.variable(ring, 0) ** deg


def _candidate(rng, ring, structured):
    x, y, z = (Polynomial.variable(ring, i) for i in range(3))
    if structured:
        # products of linear forms make one-dimensional fibers likely
        u = _rand_form(rng, ring, 1) * _rand_form(rng, ring, 1)
        v = _rand_form(rng, ring, 1) * _rand_form(rng, ring, 1)
        return [y * u, x * v, z * u, z * v]
    return [_rand_form(rng, ring, DEGREE) for _ in range(4)]


def _sample_maps():
    rng = random.Random(SEED)
    ring = standard_ring(("x", "y", "z"), F7)
    accepted = []
    attempts = 0
    while len(accepted) < N_MAPS and attempts < 400:
        attempts += 1
        forms = _candidate(rng, ring, structured=attempts % 2 == 0)
        try:
            pmap = build_map(forms)
        except ValueError:
            continue
        if pmap.common_factor is not None:
            continue
        if not image_ideal(pmap).generically_finite:
            continue
        accepted.append(pmap)
    return accepted


MAPS = _sample_maps()
_searches = {}


def _search(idx):
    if idx not in _searches:
        _searches[idx] = find_one_dim_fibers(MAPS[idx], s_max=3)
    return _searches[idx]


def test_sample_size():
    assert len(MAPS) >= N_MAPS


def _maps_to(pmap, y):
    """All GF(7)-rational source points mapping to the image point y."""
    hits = []
    for x in projective_points(F7, 2):
        vals = [f.evaluate(list(x.coords)) for f in pmap.forms]
        if all(F7.is_zero(v) for v in vals):
            continue
        if PointProjective(tuple(vals), F7).coords == y.coords:
            hits.append(x)
    return hits


@pytest.mark.parametrize("idx", range(N_MAPS))
def test_search_agrees_with_oracle(idx):
    pmap = MAPS[idx]
    search = _search(idx)
    oracle = brute_force_fiber_oracle(pmap)
    s_recs = {r.point.coords: r for r in search.records}
    o_recs = {r.point.coords: r for r in oracle}

    # oracle direction must hold absolutely
    missing = set(o_recs) - set(s_recs)
    assert not missing, f"search missed oracle fibers at {sorted(missing)}"

    # extra search points are legitimate only if the oracle cannot see them:
    # the fiber contains no GF(7)-rational source point
    for coords in set(s_recs) - set(o_recs):
        hits = _maps_to(pmap, s_recs[coords].point)
        assert not hits, (f"oracle should have seen {coords}: "
                          f"hit by {[h.coords for h in hits]}")

    # common points carry the same divisor degree
    for coords in set(s_recs) & set(o_recs):
        assert s_recs[coords].divisor_degree == o_recs[coords].divisor_degree

    _, _, base_deg = base_locus(pmap)
    for rec in search.records:
        assert check_fiber_factorization(pmap, rec).passes
        assert rec.divisor_degree < DEGREE
        assert DEGREE * rec.divisor_degree <= base_deg


def test_sample_is_not_vacuous():
    # enough of the sampled maps must actually carry one-dimensional fibers
    nonempty = sum(1 for idx in range(N_MAPS) if _search(idx).records)
    assert nonempty >= 5
