"""Fiber analysis for rational maps between projective spaces.

A map φ: P^m --> P^n is given by n+1 forms of equal degree d with gcd 1.
The central objects are the Rees ideal 𝔓 (the defining ideal of the closed
graph), its specializations at target points y (the fibers of the graph
projection), and for each fiber of dimension m-1 the unmixed divisor

    h_y = gcd(f_0 - p_0 f_i, ..., f_n - p_n f_i),     y = (p_0 : ... : p_n),

where i is the pivot with p_i = 1.  `find_one_dim_fibers` assembles the full
inventory of (m-1)-dimensional fibers by two routes: a saturation/gcd search
through the powers I^s (sound for any m, restricted here to divisors that
factor into rational linear forms) and, for m = 2, the support of the
presented module N from `approx`, which is complete when the base locus is a
local complete intersection.  `check_divisor_degree_bound` verifies the
headline inequality Σ_y deg h_y ≤ indeg((I^s)^sat) < sd whenever some power
realizes it.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .groebner import normal_form
from .ideals import (Ideal, degree_monomials, eliminate, exact_divide,
                     ideal_power, intersect_many, poly_gcd_list,
                     restrict_polynomial, saturate_irrelevant,
                     saturate_variable)
from .modules import FreeModule, FreeModuleMap, kernel_of_free_map
from .poly import Polynomial
from .rings import RingDescriptor, standard_ring
from .solve import (NotZeroDimensionalError, PointProjective, _affine_points,
                    rational_points_zero_dim)


class NotGenericallyFiniteError(ValueError):
    """The closed image has dimension < m, so the generic fiber is positive-
    dimensional and the (m-1)-fiber inventory is not defined."""

    def __init__(self, image_dimension: int, expected: int):
        self.image_dimension = image_dimension
        self.expected = expected
        super().__init__(
            f"map is not generically finite: image dimension "
            f"{image_dimension} < source dimension {expected}")


@dataclass
class ParameterizedMap:
    """A rational map P^m --> P^n: n+1 forms of common degree d, gcd 1."""
    source: RingDescriptor
    target: RingDescriptor
    forms: Tuple[Polynomial, ...]
    d: int
    common_factor: Optional[Polynomial] = None   # divided out by build_map

    @property
    def m(self) -> int:
        return self.source.nvars - 1

    @property
    def n(self) -> int:
        return len(self.forms) - 1


def build_map(forms: Sequence[Polynomial],
              target_names: Optional[Sequence[str]] = None) -> ParameterizedMap:
    """Validate the forms and divide out their common gcd if nontrivial."""
    forms = list(forms)
    if len(forms) < 2:
        raise ValueError("a map needs at least two forms")
    ring = forms[0].ring
    if ring.nvars < 2:
        raise ValueError("source must be a projective space of dimension ≥ 1")
    live = [f for f in forms if not f.is_zero()]
    if not live:
        raise ValueError("all forms are zero")
    degs = set()
    for f in live:
        if f.ring != ring:
            raise ValueError("forms live in different rings")
        if not f.is_homogeneous():
            raise ValueError("forms must be homogeneous")
        degs.add(f.degree())
    if len(degs) != 1:
        raise ValueError(f"forms must share one degree, got {sorted(degs)}")

    g = poly_gcd_list(live)
    factor = None
    if g.degree() > 0:
        factor = g
        forms = [Polynomial.zero(ring) if f.is_zero() else exact_divide(f, g)
                 for f in forms]
    d = next(f for f in forms if not f.is_zero()).degree()
    if d == 0:
        raise ValueError("map is degenerate: forms are constant after "
                         "dividing out the common factor")
    if target_names is None:
        target_names = tuple(f"T{j}" for j in range(len(forms)))
    target = standard_ring(tuple(target_names), field=ring.field)
    return ParameterizedMap(ring, target, tuple(forms), d, factor)


@dataclass
class ReesData:
    """The Rees ideal 𝔓 ⊂ S = k[X, T] of the graph, with its linear part."""
    ambient: RingDescriptor        # k[X, T], deg X_i = 1, deg T_j = d+1
    rees: Ideal                    # 𝔓
    linear_part: List[Polynomial]  # syzygy forms Σ_j z_j T_j, generate 𝔓_(*,1)


def _lift_to(f: Polynomial, big: RingDescriptor) -> Polynomial:
    pad = big.nvars - f.ring.nvars
    return Polynomial(big, {m + (0,) * pad: c for m, c in f.terms.items()})


def rees_ideal(pmap: ParameterizedMap) -> ReesData:
    """𝔓 = (T_j - t·f_j : j) ∩ k[X, T], eliminating the auxiliary t.

    The linear part 𝔓_(*,1) is computed independently from the syzygies of
    (f_0 .. f_n); both a containment and a substitution T_j ↦ f_j check
    guard the elimination.
    """
    R = pmap.source
    nx, nt = R.nvars, len(pmap.forms)
    S = R.extend(pmap.target.variables, (pmap.d + 1,))
    aux = "t_aux"
    while aux in S.variables:
        aux += "_"
    big = S.extend((aux,), (1,))
    t = Polynomial.variable(big, big.nvars - 1)
    gens = [Polynomial.variable(big, nx + j) - t * _lift_to(f, big)
            for j, f in enumerate(pmap.forms)]
    P_small, small = eliminate(Ideal(big, gens), drop=(big.nvars - 1,))
    if small != S:
        raise ArithmeticError("elimination returned an unexpected ring")
    P = Ideal(S, [Polynomial(S, dict(g.terms)) for g in P_small.generators])

    row = FreeModuleMap(FreeModule(R, (pmap.d,) * nt), FreeModule(R, (0,)),
                        [list(pmap.forms)])
    linear = []
    for z in kernel_of_free_map(row):
        lin = Polynomial.zero(S)
        for j, zj in enumerate(z):
            lin = lin + _lift_to(zj, S) * Polynomial.variable(S, nx + j)
        linear.append(lin)

    subs = {nx + j: _lift_to(f, S) for j, f in enumerate(pmap.forms)}
    for g in P.generators:
        if not g.substitute(subs).is_zero():
            raise ArithmeticError("Rees generator does not vanish on the graph")
    for lin in linear:
        if not P.contains(lin):
            raise ArithmeticError("syzygy form missing from the Rees ideal")
    return ReesData(S, P, linear)


@dataclass
class ImageData:
    """The closed image in P^n and the generic-finiteness verdict."""
    ideal: Ideal                   # 𝔓 ∩ k[T], in the standard target ring
    dimension: int                 # projective dimension of the image
    degree: int
    generically_finite: bool


def image_ideal(pmap: ParameterizedMap, rd: Optional[ReesData] = None) -> ImageData:
    """𝔓 ∩ k[T]; the map is generically finite iff the image has dimension m."""
    if rd is None:
        rd = rees_ideal(pmap)
    nx = pmap.source.nvars
    elim, _ = eliminate(rd.rees, drop=tuple(range(nx)))
    # re-grade in the standard target ring so Hilbert data uses degree 1
    B = pmap.target
    img = Ideal(B, [Polynomial(B, dict(g.terms)) for g in elim.generators])
    cone_dim, deg = img.dimension_degree()
    dim = cone_dim - 1
    return ImageData(img, dim, deg, dim == pmap.m)


@dataclass
class FiberIdeals:
    """Specializations of the graph at a target point.

    `rees_fiber` defines the honest fiber π⁻¹(y).  `sym_fiber` specializes
    the syzygy forms 𝔓₁ (the symmetric-algebra fiber); it agrees with the
    Rees fiber after saturation wherever the base locus is locally a complete
    intersection.  `proportionality` is (f_j - p_j f_i : j ≠ i), whose zero
    locus is the fiber together with the whole base locus — the gcd of its
    generators is the fiber's unmixed divisor.
    """
    point: PointProjective
    pivot: int
    rees_fiber: Ideal
    sym_fiber: Ideal
    proportionality: Ideal

    def dimension(self) -> int:
        """Projective dimension of the fiber; -1 when empty."""
        return self.rees_fiber.dimension_degree()[0] - 1


def _pivot(y: PointProjective) -> int:
    for i, c in enumerate(y.coords):
        if c:
            return i
    raise ValueError("zero point")


def fiber_ideal(pmap: ParameterizedMap, rd: ReesData,
                y: PointProjective) -> FiberIdeals:
    """Specialize 𝔓 at T = y (the fiber of the graph projection) and also
    return the symmetric-algebra specialization for comparison."""
    R = pmap.source
    nx = R.nvars
    S = rd.ambient
    subs = {nx + j: Polynomial.constant(S, c) for j, c in enumerate(y.coords)}
    keep = list(range(nx))

    def specialize(gens):
        out = []
        for g in gens:
            sp = g.substitute(subs)
            if not sp.is_zero():
                out.append(restrict_polynomial(sp, R, keep))
        return out

    rees_gens = specialize(rd.rees.generators)
    sym_gens = specialize(rd.linear_part)
    i = _pivot(y)
    fi = pmap.forms[i]
    prop_gens = []
    for j, fj in enumerate(pmap.forms):
        if j == i:
            continue
        gen = fj - fi.scale(y.coords[j])
        if not gen.is_zero():
            prop_gens.append(gen)
    zero = [Polynomial.zero(R)]
    return FiberIdeals(y, i, Ideal(R, rees_gens or zero),
                       Ideal(R, sym_gens or zero),
                       Ideal(R, prop_gens or zero))


def fibers_agree(pmap: ParameterizedMap, rd: ReesData, y: PointProjective) -> bool:
    """Do the graph fiber and the symmetric-algebra fiber agree at y
    (after saturating the irrelevant ideal away)?"""
    fi = fiber_ideal(pmap, rd, y)
    return saturate_irrelevant(fi.rees_fiber) == saturate_irrelevant(fi.sym_fiber)


def unmixed_part(pmap: ParameterizedMap, y: PointProjective) -> Polynomial:
    """The divisor h_y = gcd(f_j - p_j f_i : j), monic; 1 when the fiber has
    no codimension-one component."""
    R = pmap.source
    i = _pivot(y)
    fi = pmap.forms[i]
    gens = []
    for j, fj in enumerate(pmap.forms):
        if j == i:
            continue
        g = fj - fi.scale(y.coords[j])
        if not g.is_zero():
            gens.append(g)
    if not gens:
        # all forms proportional at y — degenerate, whole source is the fiber
        return Polynomial.constant(R, R.field.one())
    return poly_gcd_list(gens)


def _scalar_ratio(a: Polynomial, b: Polynomial):
    """c with a = c·b, or None; b ≠ 0."""
    F = a.ring.field
    if a.is_zero():
        return F.zero()
    if set(a.terms) != set(b.terms):
        return None
    mono = next(iter(b.terms))
    c = F.mul(a.terms[mono], F.inv(b.terms[mono]))
    return c if a == b.scale(c) else None


def recover_points_from_divisor(pmap: ParameterizedMap,
                                h: Polynomial) -> List[PointProjective]:
    """All y with h | f_j - p_j f_i for every j: reduce each form modulo (h)
    and solve the proportionality f_j ≡ λ_j f_i for scalars λ_j."""
    if h.degree() < 1:
        raise ValueError("divisor must be nonconstant")
    gb = Ideal(pmap.source, [h]).groebner()
    nfs = [normal_form(f, gb) for f in pmap.forms]
    pivot = next((i for i, nf in enumerate(nfs) if not nf.is_zero()), None)
    if pivot is None:
        return []
    lam = []
    for nf in nfs:
        c = _scalar_ratio(nf, nfs[pivot])
        if c is None:
            return []
        lam.append(c)
    return [PointProjective(tuple(lam), pmap.source.field)]


def linear_factors(G: Polynomial) -> Tuple[List[Polynomial], bool]:
    """Monic linear factors of G with multiplicity.

    A linear form ℓ divides G iff G vanishes on the hyperplane ℓ = 0; per
    pivot chart of the dual space, substituting the parameterized hyperplane
    into G and equating coefficients gives a polynomial system in the ℓ
    coefficients, solved exactly.  The flag is True when G factors completely
    into the rational linear forms found.
    """
    R = G.ring
    F = R.field
    nv = R.nvars
    factors: List[Polynomial] = []
    work = G
    for k in range(nv):
        if work.degree() < 1:
            break
        unknowns = nv - 1 - k
        candidates: List[Polynomial] = []
        if unknowns == 0:
            candidates.append(Polynomial.variable(R, k))
        else:
            # work in R extended by the unknown ℓ-coefficients a_j
            C = R.extend(tuple(f"a_{j}" for j in range(unknowns)))
            plane = Polynomial.zero(C)
            for idx, v in enumerate(range(k + 1, nv)):
                plane = plane - (Polynomial.variable(C, nv + idx)
                                 * Polynomial.variable(C, v))
            restricted = _lift_to(G, C).substitute({k: plane})
            # coefficient of each X-monomial is a polynomial in the a's
            eqs: Dict[tuple, Polynomial] = {}
            avars = standard_ring(tuple(f"a_{j}" for j in range(unknowns)),
                                  field=F)
            for mono, c in restricted.terms.items():
                xpart, apart = mono[:nv], mono[nv:]
                if xpart not in eqs:
                    eqs[xpart] = Polynomial.zero(avars)
                eqs[xpart] = eqs[xpart] + Polynomial(avars, {apart: c})
            try:
                sols, _ = _affine_points([e for e in eqs.values()
                                          if not e.is_zero()], avars)
            except NotZeroDimensionalError:
                sols = []
            for sol in sols:
                ell = Polynomial.variable(R, k)
                for idx, v in enumerate(range(k + 1, nv)):
                    ell = ell + Polynomial.variable(R, v).scale(sol[idx])
                candidates.append(ell)
        for ell in candidates:
            while True:
                try:
                    quot = exact_divide(work, ell)
                except ValueError:
                    break
                factors.append(ell)
                work = quot
    return factors, work.degree() == 0


@dataclass
class FiberRecord:
    """One (m-1)-dimensional fiber: the point, its divisor, and diagnostics."""
    point: PointProjective
    pivot: int
    divisor: Polynomial
    divisor_degree: int
    fiber_dimension: int
    route: str = ""
    cofactors: Optional[List[Polynomial]] = None


@dataclass
class FiberSearch:
    """Result of the fiber inventory: records plus a completeness verdict."""
    records: List[FiberRecord]
    complete: bool
    base_locus_empty: bool
    route_a: Dict[int, dict] = field(default_factory=dict)
    route_b_ran: bool = False
    route_b_points_complete: Optional[bool] = None
    lci_proxy: Optional[bool] = None
    notes: List[str] = field(default_factory=list)


def base_locus(pmap: ParameterizedMap) -> Tuple[Ideal, int, int]:
    """Saturated base ideal I^sat and (cone dimension, degree) of V(I)."""
    I = Ideal(pmap.source, [f for f in pmap.forms if not f.is_zero()])
    sat = saturate_irrelevant(I)
    dim, deg = sat.dimension_degree()
    return sat, dim, deg


def lci_proxy_check(pmap: ParameterizedMap, rd: ReesData) -> bool:
    """Proxy for the local-complete-intersection hypothesis: the Rees ideal
    agrees with the symmetric-algebra ideal up to irrelevant torsion,
    i.e. 𝔓 ⊆ (𝔓₁·S : (X)^∞)."""
    S = rd.ambient
    J1 = Ideal(S, rd.linear_part)
    nx = pmap.source.nvars
    sat = intersect_many([saturate_variable(J1, i) for i in range(nx)])
    return rd.rees.is_subideal_of(sat)


def find_one_dim_fibers(pmap: ParameterizedMap, s_max: int = 3,
                        rd: Optional[ReesData] = None,
                        presentation=None) -> FiberSearch:
    """Inventory of the (m-1)-dimensional fibers of the graph projection.

    Route A (any m): for each s ≤ s_max with ν = indeg((I^s)^sat) < sd, the
    gcd G of the degree-ν piece of (I^s)^sat is a multiple of Π_y h_y; its
    rational linear factors propose points, each verified by an honest fiber
    dimension computation.  Route B (m = 2, four forms): the support of the
    presented module N is exactly the fiber locus when the base locus is lci;
    each support point is verified the same way.  The union is returned with
    a completeness flag that is True only when a complete route ran.
    """
    if rd is None:
        rd = rees_ideal(pmap)
    img = image_ideal(pmap, rd)
    if not img.generically_finite:
        raise NotGenericallyFiniteError(img.dimension, pmap.m)

    R = pmap.source
    d = pmap.d
    m = pmap.m
    I = Ideal(R, [f for f in pmap.forms if not f.is_zero()])
    sat, bl_dim, _ = base_locus(pmap)
    base_empty = bl_dim == 0
    result = FiberSearch([], False, base_empty)

    found: Dict[tuple, FiberRecord] = {}

    def try_point(y: PointProjective, route: str):
        key = y.coords
        if key in found:
            if route not in found[key].route:
                found[key].route += "+" + route
            return
        h = unmixed_part(pmap, y)
        if h.degree() < 1:
            return
        fi = fiber_ideal(pmap, rd, y)
        dim = fi.dimension()
        if dim != m - 1:
            return
        found[key] = FiberRecord(y, _pivot(y), h, h.degree(), dim, route)

    if base_empty:
        # divisors force base points, so 𝒴_{m-1} is provably empty
        result.complete = True
        result.notes.append("base locus empty: no fiber can contain a divisor")
        return result

    for s in range(1, s_max + 1):
        Js = ideal_power(I, s) if s > 1 else I
        Jsat = saturate_irrelevant(Js)
        nu = Jsat.initial_degree()
        entry = {"nu": nu, "sd": s * d, "applicable": nu < s * d}
        result.route_a[s] = entry
        if nu >= s * d:
            continue
        basis: List[Polynomial] = []
        for g in Jsat.minimal_basis():
            dg = g.degree()
            if dg <= nu:
                for mono in degree_monomials(R.nvars, nu - dg):
                    basis.append(g.mul_term(mono, R.field.one()))
        G = poly_gcd_list(basis)
        entry["gcd_degree"] = G.degree()
        if G.degree() < 1:
            continue
        factors, complete_factorization = linear_factors(G)
        entry["factors_complete"] = complete_factorization
        seen = set()
        for ell in factors:
            key = tuple(sorted(ell.terms.items()))
            if key in seen:
                continue
            seen.add(key)
            for y in recover_points_from_divisor(pmap, ell):
                try_point(y, "A")

    if m == 2 and len(pmap.forms) == 4 and all(not f.is_zero() for f in pmap.forms):
        from .approx import presentation_matrix_N
        pres = presentation
        if pres is None:
            try:
                pres = presentation_matrix_N(list(pmap.forms),
                                             target_names=pmap.target.variables)
            except ArithmeticError as exc:
                # rank cross-check can fail when the map misses a hypothesis;
                # the gcd route above is still sound on its own
                result.notes.append(f"support route unavailable: {exc}")
        if pres is not None:
            result.route_b_ran = True
            proxy = lci_proxy_check(pmap, rd)
            result.lci_proxy = proxy
            try:
                pts, pts_complete = rational_points_zero_dim(pres.annihilator)
                result.route_b_points_complete = pts_complete
                for y in pts:
                    try_point(y, "B")
                result.complete = pts_complete and proxy
                if not pts_complete:
                    result.notes.append(
                        "support has components with no rational point: "
                        "inventory restricted to the base field")
            except NotZeroDimensionalError:
                result.route_b_points_complete = False
                result.notes.append("module support is not zero-dimensional")
    if not result.complete and not result.route_b_ran:
        result.notes.append(
            "only the gcd route ran: inventory is sound but may be incomplete")
    if result.route_b_ran and result.lci_proxy is False:
        result.notes.append(
            "lci proxy failed: support route results verified individually")

    result.records = sorted(found.values(), key=lambda r: r.point.coords)
    return result


@dataclass
class DivisorBoundVerdict:
    """Σ_y deg h_y ≤ ν = indeg((I^s)^sat) < sd, when ν < sd realizes it."""
    s: int
    nu: int
    sd: int
    divisor_sum: int
    applicable: bool
    holds: Optional[bool]
    prior_bound: int              # informational: ⌊d/2⌋·d - 1

    def as_tuple(self) -> Tuple[int, int, int]:
        return self.nu, self.divisor_sum, self.sd


def check_divisor_degree_bound(pmap: ParameterizedMap, s: int,
                               records: Sequence[FiberRecord]) -> DivisorBoundVerdict:
    """Verify the divisor-degree bound at power s against found fibers."""
    I = Ideal(pmap.source, [f for f in pmap.forms if not f.is_zero()])
    Js = ideal_power(I, s) if s > 1 else I
    nu = saturate_irrelevant(Js).initial_degree()
    sd = s * pmap.d
    total = sum(r.divisor_degree for r in records)
    applicable = nu < sd
    holds = (total <= nu) if applicable else None
    prior = (pmap.d // 2) * pmap.d - 1
    return DivisorBoundVerdict(s, nu, sd, total, applicable, holds, prior)


@dataclass
class FactorizationVerdict:
    """The two ideal identities behind a divisor record."""
    ideal_matches: bool            # I = (f_i) + h_y·(g_j : j ≠ i)
    saturation_contained: bool     # I^sat ⊆ (f_i, h_y)
    cofactors: List[Polynomial]

    @property
    def passes(self) -> bool:
        return self.ideal_matches and self.saturation_contained


def check_fiber_factorization(pmap: ParameterizedMap,
                              rec: FiberRecord) -> FactorizationVerdict:
    """Materialize the cofactors g_j = (f_j - p_j f_i)/h_y and verify
    I = (f_i) + h_y·(g_j) and I^sat ⊆ (f_i, h_y).  A divisibility failure
    signals a false fiber record and raises."""
    R = pmap.source
    i = rec.pivot
    fi = pmap.forms[i]
    y = rec.point
    cofactors = []
    regen = [fi]
    for j, fj in enumerate(pmap.forms):
        if j == i:
            continue
        num = fj - fi.scale(y.coords[j])
        if num.is_zero():
            cofactors.append(Polynomial.zero(R))
            continue
        g = exact_divide(num, rec.divisor)     # raises if h_y is not a divisor
        cofactors.append(g)
        regen.append(rec.divisor * g)
    I = Ideal(R, [f for f in pmap.forms if not f.is_zero()])
    rebuilt = Ideal(R, [p for p in regen if not p.is_zero()])
    ideal_match = I == rebuilt
    sat = saturate_irrelevant(I)
    contained = sat.is_subideal_of(Ideal(R, [fi, rec.divisor]))
    rec.cofactors = cofactors
    return FactorizationVerdict(ideal_match, contained, cofactors)


def brute_force_fiber_oracle(pmap: ParameterizedMap,
                             rd: Optional[ReesData] = None) -> List[FiberRecord]:
    """Enumerate P^m over a small finite field, bucket by image point, and
    return the image points whose fiber has dimension m-1.

    Sound but only sees points rational over the ground field.
    """
    from .solve import projective_points
    F = pmap.source.field
    if F.characteristic() == 0:
        raise ValueError("oracle enumeration needs a finite field")
    if rd is None:
        rd = rees_ideal(pmap)
    m = pmap.m
    images = {}
    for x in projective_points(F, m):
        vals = [f.evaluate(list(x.coords)) for f in pmap.forms]
        if all(F.is_zero(v) for v in vals):
            continue
        y = PointProjective(tuple(vals), F)
        images.setdefault(y.coords, y)
    records = []
    for y in images.values():
        fi = fiber_ideal(pmap, rd, y)
        if fi.dimension() == m - 1:
            h = unmixed_part(pmap, y)
            records.append(FiberRecord(y, _pivot(y), h, h.degree(), m - 1,
                                       "oracle"))
    return sorted(records, key=lambda r: r.point.coords)
