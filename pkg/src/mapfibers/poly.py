"""Sparse multivariate polynomials over an exact coefficient field.

Terms live in a dict mapping exponent tuples to nonzero coefficients.
The text syntax accepted by :func:`parse_polynomial` is the one used in
map files: variables, integer or rational literals, ``+ - * ^`` and
parentheses, with ``**`` accepted as a synonym for ``^``.  Adjacent
factors must be joined with ``*`` explicitly.
"""

from __future__ import annotations

from typing import Dict, Iterable, Optional

from .rings import Monomial, RingDescriptor, mono_mul


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingDescriptor, terms: Optional[Dict[Monomial, object]] = None):
        self.ring = ring
        self.terms = terms if terms is not None else {}

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, ring: RingDescriptor) -> "Polynomial":
        return cls(ring, {})

    @classmethod
    def constant(cls, ring: RingDescriptor, c) -> "Polynomial":
        c = ring.field.from_int(c) if isinstance(c, int) else c
        if ring.field.is_zero(c):
            return cls(ring, {})
        return cls(ring, {ring.zero_mono(): c})

    @classmethod
    def variable(cls, ring: RingDescriptor, i: int, power: int = 1) -> "Polynomial":
        return cls(ring, {ring.var_mono(i, power): ring.field.one()})

    @classmethod
    def from_terms(cls, ring: RingDescriptor, items: Iterable) -> "Polynomial":
        terms: Dict[Monomial, object] = {}
        F = ring.field
        for mono, c in items:
            if mono in terms:
                c = F.add(terms[mono], c)
            if F.is_zero(c):
                terms.pop(mono, None)
            else:
                terms[mono] = c
        return cls(ring, terms)

    # -- predicates --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        if not self.terms:
            return True
        z = self.ring.zero_mono()
        return len(self.terms) == 1 and z in self.terms

    def is_homogeneous(self) -> bool:
        degs = {self.ring.weighted_degree(m) for m in self.terms}
        return len(degs) <= 1

    def degree(self) -> int:
        """Total degree (max over terms), -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def multidegree(self) -> Optional[tuple]:
        """Weighted degree if homogeneous, else None."""
        degs = {self.ring.weighted_degree(m) for m in self.terms}
        if len(degs) == 1:
            return next(iter(degs))
        return None

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        F = self.ring.field
        big, small = (self.terms, other.terms) if len(self.terms) >= len(other.terms) else (other.terms, self.terms)
        out = dict(big)
        for m, c in small.items():
            if m in out:
                s = F.add(out[m], c)
                if F.is_zero(s):
                    del out[m]
                else:
                    out[m] = s
            else:
                out[m] = c
        return Polynomial(self.ring, out)

    def __neg__(self) -> "Polynomial":
        F = self.ring.field
        return Polynomial(self.ring, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        F = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            if m in out:
                s = F.sub(out[m], c)
                if F.is_zero(s):
                    del out[m]
                else:
                    out[m] = s
            else:
                out[m] = F.neg(c)
        return Polynomial(self.ring, out)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        F = self.ring.field
        if not self.terms or not other.terms:
            return Polynomial(self.ring, {})
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Monomial, object] = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = mono_mul(ma, mb)
                c = F.mul(ca, cb)
                if m in out:
                    s = F.add(out[m], c)
                    if F.is_zero(s):
                        del out[m]
                    else:
                        out[m] = s
                else:
                    out[m] = c
        return Polynomial(self.ring, out)

    def scale(self, c) -> "Polynomial":
        F = self.ring.field
        if F.is_zero(c):
            return Polynomial(self.ring, {})
        return Polynomial(self.ring, {m: F.mul(v, c) for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c) -> "Polynomial":
        F = self.ring.field
        if F.is_zero(c):
            return Polynomial(self.ring, {})
        return Polynomial(self.ring, {mono_mul(m, mono): F.mul(v, c) for m, v in self.terms.items()})

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def evaluate(self, values):
        """Evaluate at a full point (one field element per variable)."""
        F = self.ring.field
        total = F.zero()
        for m, c in self.terms.items():
            v = c
            for i, e in enumerate(m):
                if e:
                    vi = values[i]
                    for _ in range(e):
                        v = F.mul(v, vi)
            total = F.add(total, v)
        return total

    def substitute(self, assignment: Dict[int, "Polynomial"]) -> "Polynomial":
        """Substitute polynomials for some variables (others stay)."""
        ring = self.ring
        out = Polynomial.zero(ring)
        for m, c in self.terms.items():
            piece = Polynomial.constant(ring, 1).scale(c)
            residual = list(m)
            for i, e in enumerate(m):
                if e and i in assignment:
                    residual[i] = 0
                    piece = piece * (assignment[i] ** e)
            piece = piece.mul_term(tuple(residual), ring.field.one())
            out = out + piece
        return out

    # -- comparisons / hashing ---------------------------------------

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms and self.ring == other.ring

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- display -----------------------------------------------------

    def sorted_terms(self, key=None):
        if key is None:
            from .rings import GREVLEX
            key = GREVLEX.key_function(self.ring.nvars)
        return sorted(self.terms.items(), key=lambda mc: key(mc[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        F = self.ring.field
        names = self.ring.variables
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            cs = F.to_str(c)
            if factors:
                body = "*".join(factors)
                if cs == "1":
                    term = body
                elif cs == "-1":
                    term = "-" + body
                else:
                    term = f"{cs}*{body}"
            else:
                term = cs
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += " - " + term[1:] if term.startswith("-") else " + " + term
        return out

    def __repr__(self):
        return f"<{self} in {self.ring!r}>"


# -- parsing ---------------------------------------------------------


class _Parser:
    """Recursive-descent parser for the map-file polynomial syntax."""

    def __init__(self, text: str, ring: RingDescriptor):
        self.text = text
        self.pos = 0
        self.ring = ring

    def parse(self) -> Polynomial:
        p = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise ValueError(f"unexpected character {self.text[self.pos]!r} at position {self.pos} in {self.text!r}")
        return p

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> Polynomial:
        ch = self.peek()
        sign = 1
        while ch in "+-":
            if ch == "-":
                sign = -sign
            self.pos += 1
            ch = self.peek()
        p = self.term()
        if sign < 0:
            p = -p
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                p = p + self.term()
            elif ch == "-":
                self.pos += 1
                p = p - self.term()
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            ch = self.peek()
            if ch == "*" and not self.text.startswith("**", self.pos):
                self.pos += 1
                p = p * self.factor()
            else:
                return p

    def factor(self) -> Polynomial:
        p = self.atom()
        ch = self.peek()
        if ch == "^" or self.text.startswith("**", self.pos):
            self.pos += 2 if self.text.startswith("**", self.pos) else 1
            k = self.integer()
            p = p ** k
        return p

    def atom(self) -> Polynomial:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            p = self.expr()
            if self.peek() != ")":
                raise ValueError(f"missing ')' at position {self.pos} in {self.text!r}")
            self.pos += 1
            return p
        if ch == "-":
            self.pos += 1
            return -self.atom()
        if ch.isdigit():
            num = self.integer()
            if self.peek() == "/":
                self.pos += 1
                den = self.integer()
                c = self.ring.field.parse(f"{num}/{den}")
                return Polynomial.constant(self.ring, c)
            return Polynomial.constant(self.ring, num)
        if ch.isalpha() or ch == "_":
            name = self.identifier()
            return Polynomial.variable(self.ring, self.ring.index_of(name))
        raise ValueError(f"unexpected character {ch!r} at position {self.pos} in {self.text!r}")

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ValueError(f"expected an integer at position {start} in {self.text!r}")
        return int(self.text[start:self.pos])

    def identifier(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos]


def parse_polynomial(text: str, ring: RingDescriptor) -> Polynomial:
    return _Parser(text, ring).parse()
