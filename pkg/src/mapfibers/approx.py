"""Koszul-cycle presentation of the graded fiber module N.

For a map P^2 --> P^3 given by four forms f_0..f_3 of equal degree d with
finite base locus, the module N = ⊕_s H^1_m(R/I^s)_{sd-2} over the target
coordinate ring B = k[T_0..T_3] is presented by a matrix with linear entries.
The presentation is extracted from the Koszul complex K_* on (f_0..f_3):
writing Z_q = ker(K_q → K_{q-1}) for the cycle modules, graded local duality
turns the strand of the approximation complex in the relevant twist into

    B(-3)^l → B(-2)^mrank --P--> B(-1)^n → 0,        N = coker(P),

where n = dim Hom(Z_1, R)_{-d-1}, mrank = dim Hom(Z_2, R)_{-2d-1} and
l = dim Hom(Z_3, R)_{-3d-1}.  The entry P[a][b] is Σ_i (D_i)[b][a]·T_i with
D_i: Hom(Z_1,R)_{-d-1} → Hom(Z_2,R)_{-2d-1} given by composition with the
contraction e_i ⌟ (-): Z_2 → Z_1.

Everything here is exact linear algebra over the coefficient field: Hom
pieces are cut out of coordinate space by the syzygy constraints of the
cycle generators, and the contraction compositions are computed by lifting
through those generators.
"""

from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .cohomology import _dual_map_rows, _hom_basis, hdim_difference
from .ideals import Ideal, degree_monomials, intersect_many
from .modules import (FreeModule, FreeModuleMap, Vector, kernel_of_free_map,
                      lift_through_generators, module_groebner,
                      submodule_colon_component, vec_is_zero, vector_degree)
from .hilbert import hilbert_series_module_quotient
from .poly import Polynomial, mono_mul
from .rings import RingDescriptor, standard_ring
from . import linalg

# exterior-algebra bases for K_2 and K_3 on four generators
PAIRS: Tuple[Tuple[int, int], ...] = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
TRIPLES: Tuple[Tuple[int, int, int], ...] = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))


@dataclass
class KoszulData:
    """Koszul complex on four forms together with its cycle modules."""
    ring: RingDescriptor
    d: int
    forms: Tuple[Polynomial, ...]
    modules: List[FreeModule]              # K_0 .. K_4
    differentials: List[FreeModuleMap]     # d_1 .. d_4, d_q: K_q -> K_{q-1}
    cycles: Dict[int, List[Vector]]        # q -> minimal generators of Z_q
    _syzygies: Dict[int, List[Vector]] = field(default_factory=dict, repr=False)

    def cycle_syzygies(self, q: int) -> List[Vector]:
        """Generating syzygies among the chosen generators of Z_q."""
        if q not in self._syzygies:
            cover, gmap = _generator_cover(self.cycles[q], self.modules[q])
            self._syzygies[q] = kernel_of_free_map(gmap)
        return self._syzygies[q]


def koszul_cycles(forms: Sequence[Polynomial]) -> KoszulData:
    """Build the Koszul complex on four equal-degree forms in three variables
    and compute minimal generators of the cycle modules Z_1, Z_2, Z_3."""
    forms = tuple(forms)
    if len(forms) != 4:
        raise ValueError(f"expected 4 forms, got {len(forms)}: the construction "
                         "covers maps from P^2 to P^3 only")
    ring = forms[0].ring
    if ring.nvars != 3:
        raise ValueError(f"expected a polynomial ring in 3 variables, got {ring.nvars}")
    degs = set()
    for f in forms:
        if f.ring != ring:
            raise ValueError("forms live in different rings")
        if f.is_zero() or not f.is_homogeneous():
            raise ValueError("forms must be nonzero and homogeneous")
        degs.add(f.degree())
    if len(degs) != 1:
        raise ValueError(f"forms must share one degree, got degrees {sorted(degs)}")
    d = degs.pop()

    zero = Polynomial.zero(ring)
    K = [FreeModule(ring, (0,)),
         FreeModule(ring, (d,) * 4),
         FreeModule(ring, (2 * d,) * 6),
         FreeModule(ring, (3 * d,) * 4),
         FreeModule(ring, (4 * d,))]

    d1 = FreeModuleMap(K[1], K[0], [list(forms)])

    m2 = [[zero] * 6 for _ in range(4)]
    for p, (j, k) in enumerate(PAIRS):
        m2[k][p] = forms[j]
        m2[j][p] = -forms[k]
    d2 = FreeModuleMap(K[2], K[1], m2)

    pair_index = {jk: p for p, jk in enumerate(PAIRS)}
    m3 = [[zero] * 4 for _ in range(6)]
    for t, (j, k, l) in enumerate(TRIPLES):
        m3[pair_index[(k, l)]][t] = forms[j]
        m3[pair_index[(j, l)]][t] = -forms[k]
        m3[pair_index[(j, k)]][t] = forms[l]
    d3 = FreeModuleMap(K[3], K[2], m3)

    triple_index = {t: i for i, t in enumerate(TRIPLES)}
    m4 = [[zero] for _ in range(4)]
    signs = [1, -1, 1, -1]
    for i in range(4):
        rest = tuple(j for j in range(4) if j != i)
        m4[triple_index[rest]][0] = forms[i] if signs[i] > 0 else -forms[i]
    d4 = FreeModuleMap(K[4], K[3], m4)

    for dq in (d1, d2, d3, d4):
        if not dq.check_homogeneous():
            raise ArithmeticError("Koszul differential is not homogeneous")
    for hi, lo in ((d2, d1), (d3, d2), (d4, d3)):
        for c in range(hi.source.rank):
            if not vec_is_zero(lo.apply(hi.column(c))):
                raise ArithmeticError("Koszul differentials do not compose to zero")

    cycles = {q: kernel_of_free_map(dq) for q, dq in ((1, d1), (2, d2), (3, d3))}
    return KoszulData(ring, d, forms, K, [d1, d2, d3, d4], cycles)


def contract(i: int, vec: Vector, ring: RingDescriptor) -> Vector:
    """Interior product e_i ⌟ (-) on K_2 coordinates: e_i ⌟ e_{jk} = δ_ij e_k - δ_ik e_j.

    Anticommutes with the Koszul differential, so it carries Z_2 into Z_1.
    """
    out = [Polynomial.zero(ring)] * 4
    for p, (j, k) in enumerate(PAIRS):
        c = vec[p]
        if c.is_zero():
            continue
        if j == i:
            out[k] = out[k] + c
        elif k == i:
            out[j] = out[j] - c
    return tuple(out)


def _generator_cover(gens: Sequence[Vector], ambient: FreeModule):
    """Cover map ⊕_j R(-δ_j) → ambient sending the j-th basis vector to gens[j]."""
    degs = tuple(vector_degree(g, ambient.shifts) for g in gens)
    cover = FreeModule(ambient.ring, degs)
    matrix = [[gens[c][r] for c in range(len(gens))] for r in range(ambient.rank)]
    return cover, FreeModuleMap(cover, ambient, matrix)


@dataclass
class HomPiece:
    """Explicit k-basis of Hom(M, R)_e for M = ⟨gens⟩ ⊆ a graded free module.

    A homomorphism is recorded by its values u_j = φ(gens[j]) ∈ R_{δ_j + e};
    the values are subject to Σ_j σ_j·u_j = 0 for every generating syzygy σ.
    `coords` indexes the coordinate space: one slot per (generator j, monomial
    of degree δ_j + e), and each basis element is a coefficient vector over it.
    """
    e: int
    gen_degrees: Tuple[int, ...]
    coords: List[Tuple[int, tuple]]
    basis: List[List]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def values(self, ring: RingDescriptor, a: int) -> List[Polynomial]:
        """The value tuple (u_1, .., u_k) of the a-th basis homomorphism."""
        vals = [dict() for _ in self.gen_degrees]
        for (j, mono), c in zip(self.coords, self.basis[a]):
            if not ring.field.is_zero(c):
                vals[j][mono] = c
        return [Polynomial(ring, v) for v in vals]


def hom_piece(gens: Sequence[Vector], ambient: FreeModule, e: int,
              syzygies: Optional[Sequence[Vector]] = None) -> HomPiece:
    """Compute Hom(⟨gens⟩, R)_e by syzygy-constrained linear algebra."""
    ring = ambient.ring
    F = ring.field
    degs = tuple(vector_degree(g, ambient.shifts) for g in gens)
    monos = [degree_monomials(ring.nvars, dj + e) if dj + e >= 0 else ()
             for dj in degs]
    coords = [(j, m) for j in range(len(gens)) for m in monos[j]]
    col = {c: i for i, c in enumerate(coords)}

    if syzygies is None:
        cover, gmap = _generator_cover(gens, ambient)
        syzygies = kernel_of_free_map(gmap)

    rows = []
    for s in syzygies:
        eps = vector_degree(s, degs)
        if eps is None:
            continue
        row_of = {mu: [F.zero() for _ in coords]
                  for mu in degree_monomials(ring.nvars, eps + e)}
        for j, sj in enumerate(s):
            if sj.is_zero():
                continue
            for m in monos[j]:
                ci = col[(j, m)]
                for ms, cs in sj.terms.items():
                    row = row_of[mono_mul(ms, m)]
                    row[ci] = F.add(row[ci], cs)
        rows.extend(row_of.values())

    basis = linalg.nullspace(rows, len(coords), F)
    return HomPiece(e, degs, coords, basis)


def dual_hdim(kd: KoszulData, q: int, t: int) -> int:
    """dim_k H^3_m(Z_q)_t, computed by duality as dim Hom(Z_q, R)_{-t-3}."""
    if q not in kd.cycles:
        raise ValueError(f"no cycle module Z_{q}")
    return hom_piece(kd.cycles[q], kd.modules[q], -t - 3,
                     kd.cycle_syzygies(q)).dim


def complex_ranks(kd: KoszulData, I: Optional[Ideal] = None) -> Tuple[int, int, int]:
    """Ranks (l, mrank, n) of the presentation strand B(-3)^l → B(-2)^mrank → B(-1)^n.

    When the base ideal is supplied, n is recomputed independently as
    dim H^1_m(R/I)_{d-2} and the two answers must agree.
    """
    d = kd.d
    n = dual_hdim(kd, 1, d - 2)
    mrank = dual_hdim(kd, 2, 2 * d - 2)
    l = dual_hdim(kd, 3, 3 * d - 2)
    if I is not None:
        n_check = hdim_difference(I, 1, d - 2)
        if n_check != n:
            raise ArithmeticError(
                f"rank cross-check failed: Hom(Z_1) gives n={n} but "
                f"H^1_m(R/I)_{d - 2} = {n_check}")
    return l, mrank, n


def module_ext_dim(gens: Sequence[Vector], ambient: FreeModule, j: int, e: int) -> int:
    """dim_k Ext^j(M, R)_e for M = ⟨gens⟩ ⊆ a graded free module.

    Resolves M by iterated syzygy kernels and dualizes degreewise; used to
    spot-check depth of the cycle modules (H^0_m = H^1_m = 0 translates to
    Ext^3 = Ext^2 = 0 against R(-3))."""
    ring = ambient.ring
    covers: List[FreeModule] = []
    maps: List[FreeModuleMap] = []
    current, current_amb = list(gens), ambient
    while current:
        cover, gmap = _generator_cover(current, current_amb)
        covers.append(cover)
        maps.append(gmap)
        current = kernel_of_free_map(gmap)
        current_amb = cover
        if len(covers) > ring.nvars + 1:
            raise ArithmeticError("resolution exceeded the global dimension")
    if j >= len(covers):
        return 0
    hom_dim = len(_hom_basis(covers[j].shifts, e, ring.nvars))
    r_up = 0
    if j + 1 < len(maps):
        rows, _, _ = _dual_map_rows(maps[j + 1], e)
        r_up = linalg.rank(rows, ring.field)
    r_down = 0
    if j >= 1:
        rows, _, _ = _dual_map_rows(maps[j], e)
        r_down = linalg.rank(rows, ring.field)
    return hom_dim - r_up - r_down


@dataclass
class PresentationData:
    """Presentation of N over the target ring and derived invariants."""
    base_ring: RingDescriptor              # B = k[T_0..T_3]
    ranks: Tuple[int, int, int]            # (l, mrank, n)
    matrix: List[List[Polynomial]]         # n × mrank, entries linear in T
    coker_dims: Dict[int, int]             # s -> dim_k N_s
    coker_dim_deg: Tuple[int, int]         # (krull dim, degree) of coker over B
    stable_value: Optional[int]            # common value on [n, n+2], if constant
    annihilator: Ideal                     # ann_B(coker) — same radical as Fitt_0
    fitting_ideal: Optional[Ideal]         # literal maximal minors when affordable

    @property
    def n(self) -> int:
        return self.ranks[2]

    @property
    def mrank(self) -> int:
        return self.ranks[1]


# minors of an n×mrank matrix are only expanded when the subset count is modest
_MINor_SUBSET_LIMIT = 200


def _poly_det(M: List[List[Polynomial]], ring: RingDescriptor,
              cols: Tuple[int, ...], memo: Dict[Tuple[int, ...], Polynomial]) -> Polynomial:
    """Determinant of M restricted to rows 0..len(cols)-1 and the given columns,
    by Laplace expansion along the last row with sub-minors shared in `memo`."""
    if cols in memo:
        return memo[cols]
    if not cols:
        return memo.setdefault((), Polynomial.constant(ring, 1))
    k = len(cols) - 1
    acc = Polynomial.zero(ring)
    for idx, c in enumerate(cols):
        entry = M[k][c]
        if entry.is_zero():
            continue
        term = entry * _poly_det(M, ring, cols[:idx] + cols[idx + 1:], memo)
        acc = acc + term if (k + idx) % 2 == 0 else acc - term
    memo[cols] = acc
    return acc


def presentation_matrix_N(forms: Sequence[Polynomial],
                          target_names: Sequence[str] = ("T0", "T1", "T2", "T3"),
                          kd: Optional[KoszulData] = None,
                          s_window: Optional[int] = None,
                          with_minors: bool = True) -> PresentationData:
    """Compute the linear presentation matrix of N = ⊕_s H^1_m(R/I^s)_{sd-2}
    over B = k[T], its graded cokernel dimensions, and the support ideal."""
    if kd is None:
        kd = koszul_cycles(forms)
    ring, d = kd.ring, kd.d
    F = ring.field
    e1, e2 = -d - 1, -2 * d - 1

    z1, z2 = kd.cycles[1], kd.cycles[2]
    W1 = hom_piece(z1, kd.modules[1], e1, kd.cycle_syzygies(1))
    W2 = hom_piece(z2, kd.modules[2], e2, kd.cycle_syzygies(2))
    l = dual_hdim(kd, 3, 3 * d - 2)
    n, mrank = W1.dim, W2.dim

    n_check = hdim_difference(Ideal(ring, list(kd.forms)), 1, d - 2)
    if n_check != n:
        raise ArithmeticError(
            f"presentation rank n={n} disagrees with H^1_m(R/I)_{d - 2}={n_check}")

    # contractions of the Z_2 generators, expanded over the Z_1 generators
    lift_coeffs: Dict[Tuple[int, int], List[Polynomial]] = {}
    for i in range(4):
        for b, w in enumerate(z2):
            v = contract(i, w, ring)
            cs = lift_through_generators(v, z1, kd.modules[1])
            if cs is None:
                raise ArithmeticError("contraction left the cycle module Z_1")
            lift_coeffs[(i, b)] = cs

    # expansion matrix of the W_2 coordinate space, columns = W_2 basis
    w2_rows = [[W2.basis[bb][r] for bb in range(mrank)]
               for r in range(len(W2.coords))]
    w2_col = {c: r for r, c in enumerate(W2.coords)}

    def w2_coordinates(values: List[Polynomial]) -> List:
        x = [F.zero()] * len(W2.coords)
        for b, vb in enumerate(values):
            for m, c in vb.terms.items():
                x[w2_col[(b, m)]] = F.add(x[w2_col[(b, m)]], c)
        lam = linalg.solve(w2_rows, x, F)
        if lam is None:
            raise ArithmeticError("contraction composite is not in Hom(Z_2, R)")
        return lam

    # D_i[b][a]: coordinates of φ_a ∘ (e_i ⌟ -) in the W_2 basis
    D = [[[F.zero()] * n for _ in range(mrank)] for _ in range(4)]
    for a in range(n):
        u = W1.values(ring, a)
        for i in range(4):
            vals = []
            for b in range(len(z2)):
                vb = Polynomial.zero(ring)
                for j, cj in enumerate(lift_coeffs[(i, b)]):
                    if not cj.is_zero() and not u[j].is_zero():
                        vb = vb + cj * u[j]
                vals.append(vb)
            lam = w2_coordinates(vals)
            for b in range(mrank):
                D[i][b][a] = lam[b]

    B = standard_ring(tuple(target_names), field=F)
    unit = lambda i: tuple(1 if v == i else 0 for v in range(4))
    P = [[Polynomial(B, {unit(i): D[i][b][a]
                         for i in range(4) if not F.is_zero(D[i][b][a])})
          for b in range(mrank)] for a in range(n)]

    cfree = FreeModule(B, (1,) * n)
    columns = [tuple(P[a][b] for a in range(n)) for b in range(mrank)]
    mgb = module_groebner([c for c in columns if not vec_is_zero(c)], cfree)
    H = hilbert_series_module_quotient(mgb, cfree)
    top = max(n + 2, 4) if s_window is None else s_window
    coker_dims = {s: H.hf(s) for s in range(1, top + 1)}
    window = {H.hf(s) for s in range(n, n + 3)}
    stable = window.pop() if len(window) == 1 else None

    live_cols = [c for c in columns if not vec_is_zero(c)]
    if n == 0:
        # coker is the zero module, annihilated by everything
        ann = Ideal(B, [Polynomial.constant(B, 1)])
    elif live_cols:
        ann = intersect_many([
            Ideal(B, submodule_colon_component(live_cols, cfree, j) or
                  [Polynomial.zero(B)])
            for j in range(n)])
    else:
        ann = Ideal(B, [Polynomial.zero(B)])

    fitt = None
    if with_minors and n <= mrank and comb(mrank, n) <= _MINor_SUBSET_LIMIT:
        from itertools import combinations
        memo: Dict[Tuple[int, ...], Polynomial] = {}
        minors = []
        for cols in combinations(range(mrank), n):
            det = _poly_det(P, B, cols, memo)
            if not det.is_zero():
                minors.append(det)
        fitt = Ideal(B, minors or [Polynomial.zero(B)])

    return PresentationData(B, (l, mrank, n), P, coker_dims,
                            (H.krull_dim, H.degree), stable, ann, fitt)


@dataclass
class BoundsItem:
    name: str
    applicable: bool
    holds: Optional[bool]
    detail: str


@dataclass
class SurfaceBoundsVerdict:
    items: List[BoundsItem]

    @property
    def all_hold(self) -> bool:
        return all(it.holds for it in self.items if it.applicable)


def check_surface_bounds(pres: PresentationData, d: int,
                         base_degree: Optional[int] = None,
                         lci: Optional[bool] = None,
                         indeg_sat: Optional[int] = None) -> SurfaceBoundsVerdict:
    """Verify the numerical consequences of the presentation of N.

    Always checked: the cokernel dimensions are constant on [n, n+2] (a
    regularity witness) and deg N ≤ C(n+2, 3).  When the base locus is a
    local complete intersection and indeg(I^sat) = d, additionally check
    the sandwich d(d+1)/2 ≤ deg(base locus) ≤ d^2-2d+3 and the exact count
    n = deg(base locus) - d(d-1)/2 together with d ≤ n ≤ d(d-3)/2 + 3.
    """
    l, mrank, n = pres.ranks
    items = []

    stable = pres.stable_value
    items.append(BoundsItem(
        "regularity_window", True, stable is not None,
        f"dims on [n, n+2] = {[pres.coker_dims.get(s) for s in range(n, n + 3)]}"
        + (f", constant at {stable}" if stable is not None else ", not constant")))

    deg_n = pres.coker_dim_deg[1] if pres.coker_dim_deg[0] >= 1 else 0
    cap = comb(n + 2, 3)
    items.append(BoundsItem(
        "module_degree_cap", True, deg_n <= cap,
        f"deg N = {deg_n} ≤ C(n+2,3) = {cap}"))

    strict = bool(lci) and indeg_sat == d
    why_not = ("requires a local complete intersection base locus with "
               f"indeg(I^sat) = d (got lci={lci}, indeg={indeg_sat})")

    if base_degree is None or not strict:
        items.append(BoundsItem("base_degree_sandwich", False, None, why_not
                                if not strict else "base locus degree unavailable"))
        items.append(BoundsItem("rank_formula", False, None, why_not
                                if not strict else "base locus degree unavailable"))
    else:
        lo, hi = d * (d + 1) // 2, d * d - 2 * d + 3
        items.append(BoundsItem(
            "base_degree_sandwich", True, lo <= base_degree <= hi,
            f"{lo} ≤ deg(base locus) = {base_degree} ≤ {hi}"))
        expected_n = base_degree - d * (d - 1) // 2
        n_hi = d * (d - 3) // 2 + 3
        items.append(BoundsItem(
            "rank_formula", True, n == expected_n and d <= n <= n_hi,
            f"n = {n}, deg(base locus) - d(d-1)/2 = {expected_n}, bounds [{d}, {n_hi}]"))

    return SurfaceBoundsVerdict(items)
