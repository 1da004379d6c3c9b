"""Graded dimensions of local cohomology, two independent ways, and the
fiber-counting table.

Route one is the Grothendieck–Serre difference formula: for a quotient
R/J of dimension ≤ 1 only H⁰ and H¹ survive, so both are read off from
Hilbert data of J and its saturation.  Route two is graded local
duality: dim H^i_𝔪(M)_t = dim Ext^{c−i}(M, R(−c))_{−t} with c = #vars,
computed from a minimal free resolution by transposing matrices and
taking homology dimensions degree by degree.

The table N_s = dim H^m_𝔪(Iˢ)_{sd−m} counts fiber divisors: its
stabilized value equals Σ_y binom(deg h_y + m − 1, m) over the points
with (m−1)-dimensional fiber.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .hilbert import hilbert_series_quotient
from .ideals import (Ideal, degree_monomials, ideal_power,
                     saturate_irrelevant)
from .modules import FreeModuleMap, FreeResolution, free_resolution
from .rings import mono_mul

_resolution_cache: Dict[tuple, FreeResolution] = {}


def quotient_resolution(J: Ideal) -> FreeResolution:
    """Minimal free resolution of R/J (cached)."""
    key = (J.ring, J.generators)
    res = _resolution_cache.get(key)
    if res is None:
        res = free_resolution(list(J.generators))
        _resolution_cache[key] = res
    return res


# ---------------------------------------------------------------------------
# route one: difference formula

def hdim_difference(J: Ideal, i: int, t: int) -> int:
    """dim H^i_𝔪(R/J)_t for i ∈ {0,1}, valid when dim R/J ≤ 1."""
    if i not in (0, 1):
        raise ValueError("difference route only yields H⁰ and H¹")
    h = J.hilbert()
    if h.krull_dim > 1:
        raise ValueError("difference route requires dim R/J ≤ 1")
    sat = saturate_irrelevant(J)
    hs = sat.hilbert() if sat.generators else None
    hf_sat = hs.hf(t) if hs else comb(t + J.ring.nvars - 1, J.ring.nvars - 1) if t >= 0 else 0
    if i == 0:
        return h.hf(t) - hf_sat
    hp = h.hp(t)
    if hp.denominator != 1:
        raise ArithmeticError("Hilbert polynomial value is not integral")
    return int(hp) - hf_sat


# ---------------------------------------------------------------------------
# route two: duality via a transposed resolution

def _hom_basis(shifts: Sequence[int], e: int, nvars: int) -> List[Tuple[int, tuple]]:
    out = []
    for c, a in enumerate(shifts):
        for m in degree_monomials(nvars, e + a):
            out.append((c, m))
    return out


def _dual_map_rows(d: FreeModuleMap, e: int) -> Tuple[List[List], int, int]:
    """Matrix of Hom(−, R) applied to d, in degree e.

    Source basis comes from Hom(target of d), image lands in
    Hom(source of d); returns (rows, dim source, dim target).
    """
    ring = d.target.ring
    nv = ring.nvars
    F = ring.field
    src = _hom_basis(d.target.shifts, e, nv)
    tgt = _hom_basis(d.source.shifts, e, nv)
    tgt_index = {bm: k for k, bm in enumerate(tgt)}
    rows = [[F.zero()] * len(src) for _ in tgt]
    for col, (r, m) in enumerate(src):
        for b in range(d.source.rank):
            p = d.matrix[r][b]
            if p.is_zero():
                continue
            for mm, c in p.terms.items():
                k = tgt_index.get((b, mono_mul(mm, m)))
                if k is not None:
                    rows[k][col] = F.add(rows[k][col], c)
    return rows, len(src), len(tgt)


def hdim_duality(J: Ideal, i: int, t: int) -> int:
    """dim H^i_𝔪(R/J)_t by local duality; valid in any dimension."""
    ring = J.ring
    c = ring.nvars
    j = c - i
    if j < 0:
        return 0
    res = quotient_resolution(J)
    if j > res.length:
        return 0
    e = -t - c
    F = ring.field
    dim_j = len(_hom_basis(res.modules[j].shifts, e, c))
    if dim_j == 0:
        return 0
    if j < res.length:
        rows, ncols, _ = _dual_map_rows(res.maps[j], e)
        rk_out = linalg.rank(rows, F) if rows else 0
    else:
        rk_out = 0
    if j >= 1:
        rows_in, _, _ = _dual_map_rows(res.maps[j - 1], e)
        rk_in = linalg.rank(rows_in, F) if rows_in else 0
    else:
        rk_in = 0
    return dim_j - rk_out - rk_in


def hypersurface_hdim(d_f: int, mu: int, m: int) -> int:
    """dim H^m_𝔪(R/(f))_μ for a degree-d_f form in m+1 variables."""
    if d_f < 1:
        raise ValueError("hypersurface degree must be positive")
    t = d_f - m - 1 - mu
    if mu > d_f - m - 1:
        return 0
    full = comb(t + m, m)
    cut = comb(t - d_f + m, m) if t - d_f + m >= 0 else 0
    return full - cut


# ---------------------------------------------------------------------------
# the fiber-counting table

@dataclass
class CohomologyTable:
    """Per-s dimensions of H^m_𝔪(Iˢ) in one internal degree strand."""

    mu: int
    m: int
    values: Dict[int, int] = field(default_factory=dict)
    cross_values: Dict[int, int] = field(default_factory=dict)
    stable_value: Optional[int] = None
    stable_from: Optional[int] = None

    @property
    def stabilized(self) -> bool:
        return self.stable_value is not None

    def detect_stabilization(self, run: int = 3) -> None:
        ss = sorted(self.values)
        for k in range(len(ss) - run + 1):
            window = ss[k:k + run]
            if window[-1] - window[0] != run - 1:
                continue
            vals = {self.values[s] for s in window}
            if len(vals) == 1 and all(
                    self.values[s] == self.values[window[0]]
                    for s in ss[k:]):
                self.stable_value = self.values[window[0]]
                self.stable_from = window[0]
                return


def m_mu_dims(I: Ideal, d: int, mu: int, s_range: Sequence[int],
              m: Optional[int] = None, cross_check: bool = False) -> CohomologyTable:
    """dim H^m_𝔪(Iˢ)_{μ+sd} per s, via H^{m−1}_𝔪(R/Iˢ).

    The identification uses 0 → Iˢ → R → R/Iˢ → 0 and the vanishing of
    H^{m−1}_𝔪(R) and H^m_𝔪(R) (depth m+1).  For m = 2 the difference
    route is used (with an optional duality cross-check); higher m goes
    through duality alone.
    """
    if m is None:
        m = I.ring.nvars - 1
    table = CohomologyTable(mu=mu, m=m)
    for s in sorted(set(s_range)):
        if s < 1:
            raise ValueError("s must be ≥ 1")
        J = ideal_power(I, s) if s > 1 else I
        t = mu + s * d
        if m == 2:
            val = hdim_difference(J, 1, t)
            if cross_check:
                other = hdim_duality(J, 1, t)
                table.cross_values[s] = other
                if other != val:
                    raise ArithmeticError(
                        f"cohomology routes disagree at s={s}: {val} vs {other}")
        else:
            val = hdim_duality(J, m - 1, t)
            if cross_check:
                table.cross_values[s] = val
        table.values[s] = val
    table.detect_stabilization()
    return table


def n_table(I: Ideal, d: int, s_range: Sequence[int],
            m: Optional[int] = None, cross_check: bool = True) -> CohomologyTable:
    """The strand μ = −m: N_s = dim H^m_𝔪(Iˢ)_{sd−m}."""
    if m is None:
        m = I.ring.nvars - 1
    return m_mu_dims(I, d, -m, s_range, m=m, cross_check=cross_check)


@dataclass
class ModuleDegreeVerdict:
    stabilized_value: Optional[int]
    divisor_sum: int
    holds: bool
    inconclusive: bool
    detail: str


def check_module_degree_formula(divisor_degrees: Sequence[int],
                                table: CohomologyTable,
                                m: int) -> ModuleDegreeVerdict:
    """Stabilized N_s against Σ binom(deg h_y + m − 1, m)."""
    rhs = sum(comb(deg + m - 1, m) for deg in divisor_degrees)
    if not table.stabilized:
        return ModuleDegreeVerdict(None, rhs, False, True,
                                   "no stabilization observed in the computed window")
    lhs = table.stable_value
    return ModuleDegreeVerdict(
        lhs, rhs, lhs == rhs, False,
        f"stabilized value {lhs} vs divisor sum {rhs} (equal)" if lhs == rhs
        else f"stabilized value {lhs} differs from divisor sum {rhs}")


def predicted_support(records: Sequence, mu: int, m: int) -> List:
    """Fibers whose divisor degree meets deg ≥ μ + m + 1.

    These are the points where the strand M_μ must be supported;
    records need a ``divisor_degree`` attribute.
    """
    return [r for r in records if r.divisor_degree >= mu + m + 1]
