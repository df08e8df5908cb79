"""Shared helpers for the test suite."""

from fractions import Fraction

from curvesgp import MPoly, Poly, QQ


def xp(e: int, c=1, field=QQ) -> Poly:
    return Poly.x_power(e, field, c)


def P(*terms, field=QQ) -> Poly:
    """Poly from (exponent, coefficient) pairs; coefficients may be strings."""
    return Poly.from_terms(terms, field)


def XY(terms: dict, field=QQ) -> MPoly:
    """MPoly in (x, y) from {(ex, ey): coefficient}."""
    return MPoly(("x", "y"), field, {k: field.coerce(v) for k, v in terms.items()})


def UX(terms: dict, nvars: int, field=QQ) -> MPoly:
    """MPoly in (u, X0..X{nvars-1}) from {(eu, e0, ...): coefficient}."""
    vars = ("u",) + tuple(f"X{i}" for i in range(nvars))
    return MPoly(vars, field, {k: field.coerce(v) for k, v in terms.items()})


def frac(s) -> Fraction:
    return Fraction(s)


def brute_semigroup_members(gens, bound):
    """Membership table of <gens> on [0, bound] by dynamic programming."""
    table = [False] * (bound + 1)
    table[0] = True
    for n in range(1, bound + 1):
        table[n] = any(n >= g and table[n - g] for g in gens)
    return table


def brute_conductor(gens):
    """Least c with c + N inside <gens>; requires gcd 1."""
    bound = 4 * max(gens) ** 2 + 4 * max(gens)
    table = brute_semigroup_members(gens, bound)
    c = bound
    while c > 0 and table[c - 1]:
        c -= 1
    return c
