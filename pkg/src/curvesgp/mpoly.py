"""Sparse multivariate polynomials, Sylvester resultants and Y-adic division.

Exponent tuples (one entry per variable) map to nonzero coefficients.  The
variable tuple is part of the value: ``MPoly(("x", "y"), ...)`` and the same
data over ``("u", "x")`` are different things, and mixing them is an error.
Resultants go through the Sylvester matrix with fraction-free (Bareiss)
elimination so every intermediate entry stays a polynomial.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .fields import QQ, check_same_field
from .poly import Poly


class MPoly:
    __slots__ = ("vars", "field", "coeffs")

    def __init__(self, vars: Sequence[str], field, coeffs: dict):
        self.vars = tuple(vars)
        self.field = field
        self.coeffs = {e: c for e, c in coeffs.items() if not field.is_zero(c)}

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, vars, field=QQ) -> "MPoly":
        return cls(vars, field, {})

    @classmethod
    def constant(cls, vars, value, field=QQ) -> "MPoly":
        n = len(vars)
        return cls(vars, field, {(0,) * n: field.coerce(value)})

    @classmethod
    def variable(cls, vars, name: str, field=QQ, power: int = 1) -> "MPoly":
        exp = [0] * len(vars)
        exp[list(vars).index(name)] = power
        return cls(vars, field, {tuple(exp): field.one})

    @classmethod
    def monomial(cls, vars, exps: Sequence[int], coeff, field=QQ) -> "MPoly":
        return cls(vars, field, {tuple(exps): field.coerce(coeff)})

    @classmethod
    def from_poly(cls, p: Poly, vars, name: str) -> "MPoly":
        """Embed a univariate polynomial, its variable mapped to ``name``."""
        idx = list(vars).index(name)
        n = len(vars)
        coeffs = {}
        for e, c in p.coeffs.items():
            exp = [0] * n
            exp[idx] = e
            coeffs[tuple(exp)] = c
        return cls(vars, p.field, coeffs)

    # -- structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "MPoly"):
        check_same_field(self.field, other.field)
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def degree_in(self, name: str) -> int:
        """Highest exponent of a variable; -1 for the zero polynomial."""
        if self.is_zero:
            return -1
        i = self.vars.index(name)
        return max(e[i] for e in self.coeffs)

    def coeff_in(self, name: str, k: int) -> "MPoly":
        """Coefficient of name^k, as an MPoly in the same variables."""
        i = self.vars.index(name)
        out = {}
        for e, c in self.coeffs.items():
            if e[i] == k:
                e2 = e[:i] + (0,) + e[i + 1:]
                out[e2] = c
        return MPoly(self.vars, self.field, out)

    def is_constant(self) -> bool:
        return all(all(x == 0 for x in e) for e in self.coeffs)

    def constant_value(self):
        if self.is_zero:
            return self.field.zero
        if not self.is_constant():
            raise ValueError("not a constant")
        return next(iter(self.coeffs.values()))

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        f = self.field
        acc = dict(self.coeffs)
        for e, c in other.coeffs.items():
            acc[e] = f.add(acc.get(e, f.zero), c)
        return MPoly(self.vars, f, acc)

    def __neg__(self) -> "MPoly":
        f = self.field
        return MPoly(self.vars, f, {e: f.neg(c) for e, c in self.coeffs.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        f = self.field
        acc: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = f.add(acc.get(e, f.zero), f.mul(c1, c2))
        return MPoly(self.vars, f, acc)

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power")
        result = MPoly.constant(self.vars, 1, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c) -> "MPoly":
        f = self.field
        c = f.coerce(c)
        return MPoly(self.vars, f, {e: f.mul(v, c) for e, v in self.coeffs.items()})

    def __eq__(self, other):
        return (isinstance(other, MPoly) and self.vars == other.vars
                and self.field == other.field and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.coeffs.items()))))

    # -- division ----------------------------------------------------

    def exact_div(self, other: "MPoly") -> "MPoly":
        """Quotient self/other when the division is exact (lex elimination)."""
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        f = self.field
        rem = dict(self.coeffs)
        lead = max(other.coeffs)
        lead_c = other.coeffs[lead]
        quot: dict = {}
        while rem:
            e = max(rem)
            diff = tuple(a - b for a, b in zip(e, lead))
            if any(d < 0 for d in diff):
                raise ArithmeticError("division is not exact")
            q = f.div(rem[e], lead_c)
            quot[diff] = q
            for e2, c2 in other.coeffs.items():
                tgt = tuple(a + b for a, b in zip(diff, e2))
                v = f.sub(rem.get(tgt, f.zero), f.mul(q, c2))
                if f.is_zero(v):
                    rem.pop(tgt, None)
                else:
                    rem[tgt] = v
        return MPoly(self.vars, f, quot)

    def divmod_in(self, name: str, divisor: "MPoly") -> tuple["MPoly", "MPoly"]:
        """Polynomial division along one variable; divisor monic in it."""
        self._check(divisor)
        i = self.vars.index(name)
        d = divisor.degree_in(name)
        lead = divisor.coeff_in(name, d)
        if not lead.is_constant() or self.field.is_zero(lead.constant_value()):
            raise ValueError(f"divisor must have unit leading coefficient in {name}")
        lc = lead.constant_value()
        f = self.field
        rem = self
        quot = MPoly.zero(self.vars, f)
        while not rem.is_zero and rem.degree_in(name) >= d:
            k = rem.degree_in(name)
            head = rem.coeff_in(name, k).scale(f.inv(lc))
            shift = MPoly.variable(self.vars, name, f, power=k - d)
            term = head * shift
            quot = quot + term
            rem = rem - term * divisor
        return quot, rem

    # -- substitution ------------------------------------------------

    def subs(self, values: Mapping[str, "MPoly"]) -> "MPoly":
        """Substitute MPolys (all over one common variable tuple) for variables."""
        items = list(values.items())
        target_vars = items[0][1].vars
        f = self.field
        out = MPoly.zero(target_vars, f)
        cache: dict = {}

        def power(name, k):
            if (name, k) not in cache:
                cache[(name, k)] = values[name] ** k
            return cache[(name, k)]

        for e, c in self.coeffs.items():
            term = MPoly.constant(target_vars, c, f)
            for name, k in zip(self.vars, e):
                if k:
                    term = term * power(name, k)
            out = out + term
        return out

    def eval_univariate(self, values: Mapping[str, Poly]) -> Poly:
        """Substitute a univariate polynomial for every variable."""
        f = self.field
        out = Poly.zero(f)
        cache: dict = {}

        def power(name, k):
            if (name, k) not in cache:
                cache[(name, k)] = values[name] ** k
            return cache[(name, k)]

        for e, c in self.coeffs.items():
            term = Poly.constant(c, f)
            for name, k in zip(self.vars, e):
                if k:
                    term = term * power(name, k)
            out = out + term
        return out

    def to_poly(self) -> Poly:
        """Collapse to a univariate Poly; needs at most one active variable."""
        active = [i for i in range(len(self.vars))
                  if any(e[i] for e in self.coeffs)]
        if len(active) > 1:
            raise ValueError("more than one variable present")
        i = active[0] if active else 0
        return Poly(self.field, {e[i]: c for e, c in self.coeffs.items()})

    # -- display -----------------------------------------------------

    def __str__(self):
        return render_mpoly(self)

    def __repr__(self):
        return f"MPoly({self})"


def render_mpoly(p: MPoly) -> str:
    """Deterministic rendering; later variables dominate the term order."""
    if p.is_zero:
        return "0"
    field = p.field
    parts = []
    for e in sorted(p.coeffs, key=lambda t: tuple(reversed(t)), reverse=True):
        c = p.coeffs[e]
        s = field.coeff_str(c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        factors = []
        for name, k in zip(p.vars, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        if not factors:
            body = s
        else:
            body = "*".join(factors) if s == "1" else s + "*" + "*".join(factors)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("-" if neg else "+") + body)
    return "".join(parts)


# -- determinants and resultants --------------------------------------


def bareiss_determinant(matrix: list[list[MPoly]], vars, field) -> MPoly:
    """Fraction-free determinant; entries stay polynomials throughout."""
    n = len(matrix)
    if n == 0:
        return MPoly.constant(vars, 1, field)
    m = [row[:] for row in matrix]
    sign = 1
    prev = MPoly.constant(vars, 1, field)
    for k in range(n - 1):
        if m[k][k].is_zero:
            pivot = next((i for i in range(k + 1, n) if not m[i][k].is_zero), None)
            if pivot is None:
                return MPoly.zero(vars, field)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = MPoly.zero(vars, field)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_resultant(p: MPoly, q: MPoly, name: str) -> MPoly:
    """Res of p, q with respect to one variable, as a polynomial in the rest.

    The result keeps the full variable tuple (the eliminated variable simply
    no longer occurs).  Degenerate degrees follow the usual conventions:
    both constant in the variable is an error, one constant gives a power.
    """
    dp = p.degree_in(name)
    dq = q.degree_in(name)
    if p.is_zero or q.is_zero:
        raise ValueError("resultant of a zero polynomial")
    if dp <= 0 and dq <= 0:
        raise ValueError(f"both inputs are constant in {name}")
    if dp == 0:
        return p ** dq
    if dq == 0:
        return q ** dp
    pc = [p.coeff_in(name, k) for k in range(dp, -1, -1)]
    qc = [q.coeff_in(name, k) for k in range(dq, -1, -1)]
    n = dp + dq
    zero = MPoly.zero(p.vars, p.field)
    rows = []
    for i in range(dq):
        rows.append([zero] * i + pc + [zero] * (dq - 1 - i))
    for i in range(dp):
        rows.append([zero] * i + qc + [zero] * (dp - 1 - i))
    assert all(len(r) == n for r in rows)
    return bareiss_determinant(rows, p.vars, p.field)


def resultant_eliminate(p: MPoly, q: MPoly, name: str, monic_in: str | None = None) -> MPoly:
    """Resultant w.r.t. ``name``, sign-normalised to be monic in ``monic_in``.

    Normalisation happens only when the leading coefficient in ``monic_in``
    is a nonzero constant (a unit); otherwise the raw determinant is kept.
    """
    res = sylvester_resultant(p, q, name)
    if monic_in is not None and not res.is_zero:
        d = res.degree_in(monic_in)
        lead = res.coeff_in(monic_in, d)
        if lead.is_constant():
            res = res.scale(res.field.inv(lead.constant_value()))
    return res


def curve_resultant(f: Poly, g: Poly, vars=("x", "y")) -> MPoly:
    """Res_t(X - f(t), Y - g(t)), normalised monic in the second variable.

    This is the minimal polynomial F(X, Y) of the parametrised curve
    X = f(t), Y = g(t) when the parametrisation is proper.
    """
    work_vars = ("_t",) + tuple(vars)
    P = MPoly.variable(work_vars, vars[0], f.field) - MPoly.from_poly(f, work_vars, "_t")
    Q = MPoly.variable(work_vars, vars[1], f.field) - MPoly.from_poly(g, work_vars, "_t")
    res = resultant_eliminate(P, Q, "_t", monic_in=vars[1])
    out = {}
    for e, c in res.coeffs.items():
        if e[0] != 0:
            raise ArithmeticError("eliminated variable survived")
        out[e[1:]] = c
    return MPoly(tuple(vars), f.field, out)


def eval_bipoly(G: MPoly, f: Poly, g: Poly) -> Poly:
    """Substitute X -> f, Y -> g into a polynomial in two variables."""
    check_same_field(f.field, g.field)
    check_same_field(G.field, f.field)
    if len(G.vars) != 2:
        raise ValueError("expected a polynomial in exactly two variables")
    return G.eval_univariate({G.vars[0]: f, G.vars[1]: g})
