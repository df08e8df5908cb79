"""Sparse univariate polynomials with exact coefficients.

A polynomial is a mapping exponent -> nonzero coefficient over one of the
fields in :mod:`curvesgp.fields`.  The support is the stored exponent set;
the order o(f) is its minimum and the degree d(f) its maximum.  Orders of
the zero polynomial are +infinity by convention, degrees -infinity, so
comparisons against conductors and bounds work without special cases.

Instances are immutable after construction and safe to share.
"""

from __future__ import annotations

import math
from typing import Iterable

from .fields import QQ, check_same_field


class Poly:
    """Sparse polynomial in one variable over an exact field."""

    __slots__ = ("field", "coeffs", "_exps")

    def __init__(self, field, coeffs: dict):
        self.field = field
        clean = {e: c for e, c in coeffs.items() if not field.is_zero(c)}
        self.coeffs = clean
        self._exps = tuple(sorted(clean))

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, field=QQ) -> "Poly":
        return cls(field, {})

    @classmethod
    def constant(cls, value, field=QQ) -> "Poly":
        return cls(field, {0: field.coerce(value)})

    @classmethod
    def x_power(cls, exp: int, field=QQ, coeff=1) -> "Poly":
        return cls(field, {exp: field.coerce(coeff)})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, object]], field=QQ) -> "Poly":
        acc: dict = {}
        for exp, c in terms:
            if exp < 0:
                raise ValueError("negative exponent")
            c = field.coerce(c)
            acc[exp] = field.add(acc.get(exp, field.zero), c)
        return cls(field, acc)

    # -- structure ---------------------------------------------------

    @property
    def support(self) -> tuple[int, ...]:
        return self._exps

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def order(self):
        """min supp(f); +infinity for the zero polynomial."""
        return self._exps[0] if self._exps else math.inf

    @property
    def degree(self):
        """max supp(f); -infinity for the zero polynomial."""
        return self._exps[-1] if self._exps else -math.inf

    def coeff(self, exp: int):
        return self.coeffs.get(exp, self.field.zero)

    @property
    def trailing_coeff(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no trailing coefficient")
        return self.coeffs[self._exps[0]]

    @property
    def leading_coeff(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[self._exps[-1]]

    def trailing_monomial(self) -> "Poly":
        """M_o(f), the lowest-order term."""
        if self.is_zero:
            raise ValueError("zero polynomial")
        e = self._exps[0]
        return Poly(self.field, {e: self.coeffs[e]})

    def leading_monomial(self) -> "Poly":
        """M(f), the highest-degree term."""
        if self.is_zero:
            raise ValueError("zero polynomial")
        e = self._exps[-1]
        return Poly(self.field, {e: self.coeffs[e]})

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        check_same_field(self.field, other.field)
        acc = dict(self.coeffs)
        f = self.field
        for e, c in other.coeffs.items():
            acc[e] = f.add(acc.get(e, f.zero), c)
        return Poly(f, acc)

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, {e: f.neg(c) for e, c in self.coeffs.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        check_same_field(self.field, other.field)
        f = self.field
        acc: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                acc[e] = f.add(acc.get(e, f.zero), f.mul(c1, c2))
        return Poly(f, acc)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly.constant(1, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c) -> "Poly":
        f = self.field
        c = f.coerce(c)
        return Poly(f, {e: f.mul(v, c) for e, v in self.coeffs.items()})

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k (k may be negative if all exponents allow it)."""
        if k < 0 and self._exps and self._exps[0] + k < 0:
            raise ValueError("shift would create negative exponents")
        return Poly(self.field, {e + k: c for e, c in self.coeffs.items()})

    def truncate(self, prec: int) -> "Poly":
        """Drop all terms of exponent >= prec."""
        return Poly(self.field, {e: c for e, c in self.coeffs.items() if e < prec})

    def derivative(self) -> "Poly":
        f = self.field
        return Poly(f, {e - 1: f.mul(c, f.coerce(e))
                        for e, c in self.coeffs.items() if e > 0})

    def substitute(self, g: "Poly") -> "Poly":
        """f(g(x)), by Horner over the sparse support."""
        check_same_field(self.field, g.field)
        if self.is_zero:
            return Poly.zero(self.field)
        exps = list(reversed(self._exps))
        acc = Poly(self.field, {0: self.coeffs[exps[0]]})
        for prev, nxt in zip(exps, exps[1:]):
            acc = acc * g ** (prev - nxt)
            acc = acc + Poly(self.field, {0: self.coeffs[nxt]})
        return acc * g ** exps[-1]

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, tuple(sorted(self.coeffs.items()))))

    # -- normalisation -----------------------------------------------

    def monic_trailing(self) -> tuple["Poly", object]:
        """(f/a, a) for the trailing coefficient a, so M_o becomes x^o(f)."""
        if self.is_zero:
            raise ValueError("cannot normalise the zero polynomial")
        a = self.trailing_coeff
        f = self.field
        return self.scale(f.inv(a)), a

    def monic_leading(self) -> tuple["Poly", object]:
        """(f/a, a) for the leading coefficient a."""
        if self.is_zero:
            raise ValueError("cannot normalise the zero polynomial")
        a = self.leading_coeff
        f = self.field
        return self.scale(f.inv(a)), a

    # -- display -----------------------------------------------------

    def __str__(self):
        return render_poly(self, "x")

    def __repr__(self):
        return f"Poly({self})"


def render_poly(p: Poly, var: str) -> str:
    """GAP-style rendering, highest exponent first: ``-1/2*x^15+x^13``."""
    if p.is_zero:
        return "0"
    field = p.field
    parts = []
    for e in reversed(p.support):
        c = p.coeffs[e]
        s = field.coeff_str(c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        if e == 0:
            body = s
        else:
            v = var if e == 1 else f"{var}^{e}"
            body = v if s == "1" else f"{s}*{v}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("-" if neg else "+") + body)
    return "".join(parts)


# Operation aliases matching the mathematical vocabulary.

def order(f: Poly):
    """o(f) = min supp(f); o(0) = +infinity."""
    return f.order


def degree(f: Poly):
    """d(f) = max supp(f); d(0) = -infinity."""
    return f.degree


def mul(f: Poly, g: Poly) -> Poly:
    return f * g


def trailing_normalize(f: Poly) -> tuple[Poly, object]:
    return f.monic_trailing()
