"""Graded polynomial ring descriptors, monomials, and term orders.

Monomials are exponent tuples, one entry per ring variable.  A ring
carries a per-variable weight vector so the same machinery covers the
standard grading (every variable has weight (1,)) and the bigraded
source-times-target ring (weights (1,0) and (0,1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .fields import Field, QQ

Monomial = tuple  # exponent tuple, one entry per variable


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a | b, i.e. every exponent of a is <= that of b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


@dataclass(frozen=True)
class TermOrder:
    """A monomial order: graded reverse-lex, lex, or a block order.

    ``kind`` is one of "grevlex", "lex", "elim".  ``var_order`` lists
    variable indices from most to least significant (defaults to the
    ring order).  For "elim", ``block`` is the set of variable indices
    to be eliminated: monomials are compared grevlex on the block
    first, then grevlex on the remaining variables, so any monomial
    touching the block beats any monomial that avoids it.
    """

    kind: str = "grevlex"
    var_order: Optional[tuple] = None
    block: Optional[frozenset] = None

    def key_function(self, nvars: int) -> Callable[[Monomial], tuple]:
        """Return key(mono) such that key(u) > key(v) iff u > v."""
        order = self.var_order if self.var_order is not None else tuple(range(nvars))
        if len(order) != nvars:
            raise ValueError("var_order length does not match variable count")
        rev = tuple(reversed(order))
        if self.kind == "grevlex":
            def key(e, _rev=rev):
                return (sum(e), tuple(-e[i] for i in _rev))
            return key
        if self.kind == "lex":
            def key(e, _ord=order):
                return tuple(e[i] for i in _ord)
            return key
        if self.kind == "elim":
            block = self.block or frozenset()
            brev = tuple(i for i in rev if i in block)
            krev = tuple(i for i in rev if i not in block)
            def key(e, _brev=brev, _krev=krev):
                bdeg = sum(e[i] for i in _brev)
                return (bdeg, tuple(-e[i] for i in _brev),
                        sum(e) - bdeg, tuple(-e[i] for i in _krev))
            return key
        raise ValueError(f"unknown term order kind {self.kind!r}")


GREVLEX = TermOrder("grevlex")
LEX = TermOrder("lex")


def elimination_order(block) -> TermOrder:
    """Order that eliminates the given variable indices."""
    return TermOrder("elim", block=frozenset(block))


def grevlex_with_last(nvars: int, last: int) -> TermOrder:
    """Grevlex with variable ``last`` moved to least significance.

    Used for saturating with respect to a single variable: dividing the
    reduced basis elements by their trailing-variable power then yields
    the colon by that variable's powers.
    """
    order = tuple(i for i in range(nvars) if i != last) + (last,)
    return TermOrder("grevlex", var_order=order)


@dataclass(frozen=True)
class RingDescriptor:
    """Variable names, coefficient field, and per-variable weights."""

    variables: tuple
    field: Field
    weights: tuple  # per-variable degree vectors, all the same length

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        if len(self.weights) != len(self.variables):
            raise ValueError("weights length does not match variable count")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def grading_length(self) -> int:
        return len(self.weights[0]) if self.weights else 1

    def index_of(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"no variable {name!r} in ring {self.variables}")

    def weighted_degree(self, mono: Monomial) -> tuple:
        deg = [0] * self.grading_length
        for e, w in zip(mono, self.weights):
            if e:
                for k in range(len(w)):
                    deg[k] += e * w[k]
        return tuple(deg)

    def zero_mono(self) -> Monomial:
        return (0,) * self.nvars

    def var_mono(self, i: int, power: int = 1) -> Monomial:
        e = [0] * self.nvars
        e[i] = power
        return tuple(e)

    def extend(self, extra_names, extra_weight=None) -> "RingDescriptor":
        """New ring with extra variables appended."""
        w = extra_weight if extra_weight is not None else (1,) * self.grading_length
        return RingDescriptor(
            self.variables + tuple(extra_names),
            self.field,
            self.weights + tuple(w for _ in extra_names),
        )

    def subring(self, keep_indices) -> "RingDescriptor":
        keep = tuple(keep_indices)
        return RingDescriptor(
            tuple(self.variables[i] for i in keep),
            self.field,
            tuple(self.weights[i] for i in keep),
        )

    def __repr__(self):
        return f"{self.field.name}[{', '.join(self.variables)}]"


def standard_ring(names, field: Field = QQ) -> RingDescriptor:
    names = tuple(names)
    return RingDescriptor(names, field, ((1,),) * len(names))


def bigraded_ring(source_names, target_names, field: Field = QQ) -> RingDescriptor:
    """Ring on source variables (degree (1,0)) and target variables ((0,1))."""
    source_names = tuple(source_names)
    target_names = tuple(target_names)
    weights = ((1, 0),) * len(source_names) + ((0, 1),) * len(target_names)
    return RingDescriptor(source_names + target_names, field, weights)
