"""Ideal-level operations: sums, products, intersections, colons,
saturations, elimination, multivariate gcd, graded pieces.

Everything is exact.  Saturation by a variable uses the reverse-lex
trick (put the variable last in a graded reverse-lex order, then strip
its content from each reduced basis element); saturation by a general
element falls back to the inverse-adjunction trick in an extended ring.
Both require / preserve homogeneity where documented.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .fields import PrimeField
from .groebner import GroebnerBasis, normal_form, reduced_groebner
from .hilbert import HilbertData, hilbert_series_quotient
from .poly import Polynomial
from .rings import (GREVLEX, Monomial, RingDescriptor, TermOrder,
                    elimination_order, grevlex_with_last, mono_div,
                    mono_divides, mono_mul)


class Ideal:
    """A finitely generated ideal with cached reduced bases."""

    __slots__ = ("ring", "generators", "_gb")

    def __init__(self, ring: RingDescriptor, generators: Iterable[Polynomial]):
        gens = tuple(g for g in generators if not g.is_zero())
        for g in gens:
            if g.ring is not ring and g.ring != ring:
                raise ValueError("generator from a different ring")
        self.ring = ring
        self.generators = gens
        self._gb: Dict[TermOrder, GroebnerBasis] = {}

    def groebner(self, order: TermOrder = GREVLEX) -> GroebnerBasis:
        gb = self._gb.get(order)
        if gb is None:
            gb = reduced_groebner(list(self.generators), order=order, ring=self.ring)
            self._gb[order] = gb
        return gb

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        return normal_form(f, self.groebner()).is_zero()

    def is_subideal_of(self, other: "Ideal") -> bool:
        return all(other.contains(g) for g in self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal) or self.ring != other.ring:
            return NotImplemented
        return self.groebner().polys == other.groebner().polys

    def __hash__(self):
        return hash((self.ring, self.generators))

    def hilbert(self) -> HilbertData:
        return hilbert_series_quotient(self.groebner())

    def dimension_degree(self) -> Tuple[int, int]:
        h = self.hilbert()
        return h.krull_dim, h.degree

    def initial_degree(self) -> Optional[int]:
        """Least t with a nonzero element of degree t, None for (0)."""
        polys = self.groebner().polys
        if not polys:
            return None
        return min(p.degree() for p in polys)

    def minimal_basis(self) -> List[Polynomial]:
        """Generators with redundant members dropped (graded case)."""
        gens = sorted(self.generators, key=lambda g: (g.degree(), str(g)))
        kept: List[Polynomial] = []
        for g in gens:
            if not kept:
                kept.append(g)
                continue
            if not normal_form(g, reduced_groebner(kept, ring=self.ring)).is_zero():
                kept.append(g)
        return kept

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.generators) or '0'})"


# ---------------------------------------------------------------------------
# ring transport helpers

def extend_polynomial(f: Polynomial, big: RingDescriptor) -> Polynomial:
    """Reinterpret f in a ring that adds variables after f's own."""
    pad = big.nvars - f.ring.nvars
    terms = {mono + (0,) * pad: c for mono, c in f.terms.items()}
    return Polynomial(big, terms)


def restrict_polynomial(f: Polynomial, small: RingDescriptor, keep: Sequence[int]) -> Polynomial:
    """Project f onto the subring of the variables listed in keep."""
    terms = {}
    for mono, c in f.terms.items():
        for i, e in enumerate(mono):
            if e and i not in keep:
                raise ValueError("polynomial involves an eliminated variable")
        terms[tuple(mono[i] for i in keep)] = c
    return Polynomial(small, terms)


# ---------------------------------------------------------------------------
# core constructions

def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.ring, I.generators + J.generators)

def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.ring, [g * h for g in I.generators for h in J.generators])

def ideal_power(I: Ideal, s: int) -> Ideal:
    if s < 1:
        raise ValueError("power must be >= 1")
    out = I
    for _ in range(s - 1):
        out = ideal_product(out, I)
    # products of generators repeat; prune by monomial-degree dedup
    seen = set()
    gens = []
    for g in out.generators:
        key = tuple(sorted(g.terms.items()))
        if key not in seen:
            seen.add(key)
            gens.append(g)
    return Ideal(I.ring, gens)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating an auxiliary scalar t from t·I + (1−t)·J."""
    R = I.ring
    big = R.extend(("_t",))
    t = Polynomial.variable(big, big.nvars - 1)
    one = Polynomial.constant(big, R.field.one())
    gens = [t * extend_polynomial(g, big) for g in I.generators]
    gens += [(one - t) * extend_polynomial(g, big) for g in J.generators]
    order = elimination_order(frozenset({big.nvars - 1}))
    gb = reduced_groebner(gens, order=order, ring=big)
    keep = list(range(R.nvars))
    out = [restrict_polynomial(p, R, keep) for p in gb.polys
           if all(m[big.nvars - 1] == 0 for m in p.terms)]
    return Ideal(R, out)


def intersect_many(ideals: Sequence[Ideal]) -> Ideal:
    if not ideals:
        raise ValueError("need at least one ideal")
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J)
    return out


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f/g when g divides f exactly; raises otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return f
    R = f.ring
    F = R.field
    key = GREVLEX.key_function(R.nvars)
    lg = max(g.terms, key=key)
    cg = g.terms[lg]
    rem = dict(f.terms)
    quot: Dict[Monomial, object] = {}
    while rem:
        lf = max(rem, key=key)
        if not mono_divides(lg, lf):
            raise ValueError("not an exact multiple")
        qm = mono_div(lf, lg)
        qc = F.div(rem[lf], cg)
        quot[qm] = qc
        for m, c in g.terms.items():
            mm = mono_mul(qm, m)
            nc = F.sub(rem.get(mm, F.zero()), F.mul(qc, c))
            if F.is_zero(nc):
                rem.pop(mm, None)
            else:
                rem[mm] = nc
    return Polynomial(R, quot)


def colon(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f) = { g : g·f ∈ I }."""
    if f.is_zero():
        raise ZeroDivisionError("colon by zero")
    inter = intersect(I, Ideal(I.ring, [f]))
    return Ideal(I.ring, [exact_divide(g, f) for g in inter.generators])


def strip_variable_power(f: Polynomial, i: int) -> Polynomial:
    """Divide f by the largest power of X_i that divides it."""
    if f.is_zero():
        return f
    k = min(m[i] for m in f.terms)
    if k == 0:
        return f
    terms = {m[:i] + (m[i] - k,) + m[i + 1:]: c for m, c in f.terms.items()}
    return Polynomial(f.ring, terms)


def saturate_variable(I: Ideal, i: int) -> Ideal:
    """(I : X_i^∞) for a homogeneous ideal, via reverse-lex-last order."""
    if I.is_zero():
        return I
    # the reverse-lex divisibility trick needs standard-graded homogeneity
    if any(w != (1,) for w in I.ring.weights):
        return saturate_element(I, Polynomial.variable(I.ring, i))
    for g in I.generators:
        if not g.is_homogeneous():
            return saturate_element(I, Polynomial.variable(I.ring, i))
    order = grevlex_with_last(I.ring.nvars, i)
    gb = I.groebner(order)
    return Ideal(I.ring, [strip_variable_power(p, i) for p in gb.polys])


def saturate_element(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f^∞) via the inverse-adjunction trick in R[w]."""
    R = I.ring
    big = R.extend(("_w",))
    w = Polynomial.variable(big, big.nvars - 1)
    one = Polynomial.constant(big, R.field.one())
    gens = [extend_polynomial(g, big) for g in I.generators]
    gens.append(w * extend_polynomial(f, big) - one)
    order = elimination_order(frozenset({big.nvars - 1}))
    gb = reduced_groebner(gens, order=order, ring=big)
    keep = list(range(R.nvars))
    out = [restrict_polynomial(p, R, keep) for p in gb.polys
           if all(m[big.nvars - 1] == 0 for m in p.terms)]
    return Ideal(R, out)


def saturate_irrelevant(I: Ideal) -> Ideal:
    """(I : 𝔪^∞) where 𝔪 = (X_0,…,X_n): intersect per-variable saturations."""
    if I.is_zero():
        return I
    pieces = [saturate_variable(I, i) for i in range(I.ring.nvars)]
    return intersect_many(pieces)


def eliminate(I: Ideal, drop: Sequence[int]) -> Tuple[Ideal, RingDescriptor]:
    """Generators of I ∩ k[kept variables]; returns (ideal, small ring)."""
    R = I.ring
    block = frozenset(drop)
    keep = [i for i in range(R.nvars) if i not in block]
    small = R.subring(keep)
    gb = I.groebner(elimination_order(block))
    out = [restrict_polynomial(p, small, keep) for p in gb.polys
           if all(all(m[i] == 0 for i in block) for m in p.terms)]
    return Ideal(small, out), small


def radical_contains(I: Ideal, f: Polynomial) -> bool:
    """f ∈ √I, by adjoining an inverse for f and testing 1 ∈ ideal."""
    if f.is_zero():
        return True
    R = I.ring
    big = R.extend(("_w",))
    w = Polynomial.variable(big, big.nvars - 1)
    one = Polynomial.constant(big, R.field.one())
    gens = [extend_polynomial(g, big) for g in I.generators]
    gens.append(w * extend_polynomial(f, big) - one)
    gb = reduced_groebner(gens, ring=big)
    return any(p.is_constant() for p in gb.polys)


def same_radical(I: Ideal, J: Ideal) -> bool:
    return (all(radical_contains(J, g) for g in I.generators)
            and all(radical_contains(I, g) for g in J.generators))


# ---------------------------------------------------------------------------
# gcd via lattice of principal ideals

def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Multivariate gcd: f·g / lcm, with lcm generating (f) ∩ (g)."""
    if f.is_zero():
        return _normalize_poly(g)
    if g.is_zero():
        return _normalize_poly(f)
    R = f.ring
    inter = intersect(Ideal(R, [f]), Ideal(R, [g]))
    gens = inter.generators
    if len(gens) != 1:
        raise ArithmeticError("principal intersection expected")
    return _normalize_poly(exact_divide(f * g, gens[0]))


def poly_gcd_list(polys: Sequence[Polynomial]) -> Polynomial:
    out = polys[0]
    for p in polys[1:]:
        if out.is_constant() and not out.is_zero():
            break
        out = poly_gcd(out, p)
    return _normalize_poly(out)


def _normalize_poly(f: Polynomial) -> Polynomial:
    """Scale so the reverse-lex leading coefficient is one."""
    if f.is_zero():
        return f
    key = GREVLEX.key_function(f.ring.nvars)
    lead = max(f.terms, key=key)
    c = f.terms[lead]
    F = f.ring.field
    if F.is_zero(F.sub(c, F.one())):
        return f
    return f.scale(F.inv(c))


# ---------------------------------------------------------------------------
# graded pieces as row spaces

@lru_cache(maxsize=None)
def degree_monomials(nvars: int, t: int) -> Tuple[Monomial, ...]:
    """All exponent tuples of total degree t, reverse-lex sorted."""
    if t < 0:
        return ()
    def gen(rem, slots):
        if slots == 1:
            yield (rem,)
            return
        for e in range(rem, -1, -1):
            for tail in gen(rem - e, slots - 1):
                yield (e,) + tail
    monos = list(gen(t, nvars))
    key = GREVLEX.key_function(nvars)
    monos.sort(key=key, reverse=True)
    return tuple(monos)


def graded_piece_matrix(polys: Sequence[Polynomial], t: int,
                        ring: RingDescriptor) -> List[List]:
    """Rows spanning the degree-t part of the ideal generated by polys."""
    monos = degree_monomials(ring.nvars, t)
    index = {m: j for j, m in enumerate(monos)}
    F = ring.field
    rows = []
    for g in polys:
        d = g.degree()
        if d is None or d > t:
            continue
        for m in degree_monomials(ring.nvars, t - d):
            row = [F.zero()] * len(monos)
            for gm, c in g.terms.items():
                row[index[mono_mul(gm, m)]] = c
            rows.append(row)
    return rows


def graded_piece_dim(polys: Sequence[Polynomial], t: int, ring: RingDescriptor) -> int:
    from . import linalg
    rows = graded_piece_matrix(polys, t, ring)
    if not rows:
        return 0
    return linalg.rank(rows, ring.field)
