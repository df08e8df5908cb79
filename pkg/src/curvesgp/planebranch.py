"""Two-generator pipelines: gcd descent, approximate roots, delta-sequences.

For K[[f, g]] the semigroup of orders comes straight out of the support of
g once f has been turned into an exact n-th power of a new uniformiser
(the gcd descent on that support is the Newton-Puiseux data).  For
K[f, g] the semigroup of degrees comes out of the resultant curve
F(X, Y) through its approximate roots; the same descent on intersection
numbers also applies to a bare polynomial F believed to have one place
at infinity, and failure of the delta-sequence conditions refutes that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .fields import check_same_field
from .mpoly import MPoly, curve_resultant, eval_bipoly, sylvester_resultant
from .numsgp import NumSgp, gcd_chain
from .poly import Poly
from .series import SeriesApprox, compose_series, nth_root_series, reverse_series


class NotOnePlaceAtInfinity(ValueError):
    """The gcd descent or the delta-sequence conditions failed."""


PRECISION_CAP = 2 ** 14


@dataclass(frozen=True)
class CharSequence:
    """Newton-Puiseux data (m_k, d_k, e_k, r_k) of a local branch."""

    n: int
    m: tuple[int, ...]
    d: tuple[int, ...]  # d_1 .. d_{h+1}, ending at 1
    e: tuple[int, ...]
    r: tuple[int, ...]  # r_0 .. r_h

    @property
    def h(self) -> int:
        return len(self.m)


@dataclass(frozen=True)
class DeltaSeq:
    """A generator arrangement satisfying the delta-sequence conditions."""

    r: tuple[int, ...]
    d: tuple[int, ...]
    e: tuple[int, ...]

    @property
    def h(self) -> int:
        return len(self.r) - 1


def char_sequence_from_support(n: int, supp: Sequence[int]) -> CharSequence:
    """Run the gcd descent m_k = inf { i in supp : d_k does not divide i }."""
    supp = sorted(set(supp))
    if n < 1 or not supp:
        raise ValueError("need a positive order and a nonempty support")
    ds = [n]
    ms: list[int] = []
    while ds[-1] != 1:
        d = ds[-1]
        m = next((i for i in supp if i % d), None)
        if m is None:
            raise ValueError(
                f"gcd descent stalls at {d}: support has no exponent outside {d}*N")
        ms.append(m)
        ds.append(math.gcd(d, m))
    h = len(ms)
    es = tuple(ds[k] // ds[k + 1] for k in range(h))
    rs = [n]
    if h >= 1:
        rs.append(ms[0])
    for k in range(2, h + 1):
        rs.append(rs[k - 1] * es[k - 2] + ms[k - 1] - ms[k - 2])
    seq = CharSequence(n, tuple(ms), tuple(ds), es, tuple(rs))
    # sanity: the products r_k d_k must increase in the local ordering
    for k in range(1, h):
        assert seq.r[k] * seq.d[k - 1] < seq.r[k + 1] * seq.d[k]
    return seq


def delta_check(r: Sequence[int]) -> bool:
    """The delta-sequence conditions on an arrangement (r_0, ..., r_h).

    (1) the gcd chain descends strictly to 1, (2) the products r_k d_k
    strictly decrease, (3) e_k r_k lies in the monoid of the prefix.
    """
    r = list(r)
    if not r or any(x <= 0 for x in r):
        return False
    ds = gcd_chain(r)
    if ds[-1] != 1:
        return False
    for k in range(1, len(ds)):
        if ds[k] >= ds[k - 1]:
            return False
    for k in range(2, len(r)):
        if r[k] * ds[k - 1] >= r[k - 1] * ds[k - 2]:
            return False
    for k in range(1, len(r)):
        e_k = ds[k - 1] // ds[k]
        if not NumSgp(r[:k]).contains(e_k * r[k]):
            return False
    return True


def delta_sequence(r: Sequence[int]) -> DeltaSeq:
    if not delta_check(r):
        raise NotOnePlaceAtInfinity(f"{tuple(r)} is not a delta-sequence")
    ds = gcd_chain(list(r))
    es = tuple(ds[k - 1] // ds[k] for k in range(1, len(ds)))
    return DeltaSeq(tuple(r), tuple(ds), es)


def conductor_formula(seq) -> int:
    """C = sum (e_k - 1) r_k - r_0 + 1, for either kind of sequence."""
    r, e = seq.r, seq.e
    return sum((e[j] - 1) * r[j + 1] for j in range(len(e))) - r[0] + 1


# -- local pipeline ----------------------------------------------------


def reparametrize(f: Poly, g: Poly, prec: int) -> SeriesApprox:
    """g rewritten in the uniformiser that turns f into an exact n-th power.

    With xt(t) = t * (f/t^n)^(1/n) and t(xt) its reverse, the result is
    g(t(xt)) mod xt^prec, so that K[[f, g]] = K[[xt^n, result]].
    """
    if f.is_zero:
        raise ValueError("zero first generator")
    n = int(f.order)
    field = f.field
    if field.char and n % field.char == 0:
        raise ValueError(f"characteristic {field.char} divides the order {n}")
    if f.trailing_coeff != field.one:
        raise ValueError("first generator must have trailing coefficient 1")
    unit_part = SeriesApprox(f.shift(-n), prec)
    root = nth_root_series(unit_part, n)
    xt = SeriesApprox(root.poly.shift(1), prec)  # t * (f/t^n)^{1/n}
    t_of_x = reverse_series(xt)
    return compose_series(SeriesApprox(g, prec), t_of_x)


def gamma_local_pair(f: Poly, g: Poly) -> tuple[NumSgp, CharSequence]:
    """Semigroup of orders of K[[f, g]] via the Newton-Puiseux descent."""
    check_same_field(f.field, g.field)
    if f.field.char != 0:
        raise ValueError("the plane-branch pipeline needs characteristic zero")
    f = f - Poly.constant(f.coeff(0), f.field)
    g = g - Poly.constant(g.coeff(0), g.field)
    if f.is_zero or g.is_zero:
        raise ValueError("zero or constant generator")
    if g.order < f.order:
        f, g = g, f
    f = f.monic_trailing()[0]
    g = g.monic_trailing()[0]
    combined = math.gcd(math.gcd(*f.support), math.gcd(*g.support))
    if combined != 1:
        raise ValueError(f"supports have common divisor {combined}")
    n = int(f.order)
    if f == Poly.x_power(n, f.field):
        seq = char_sequence_from_support(n, g.support)
        return NumSgp(seq.r), seq
    prec = 2 * (n + max(g.support))
    while True:
        gt = reparametrize(f, g, prec)
        try:
            seq = char_sequence_from_support(n, gt.poly.support)
            return NumSgp(seq.r), seq
        except ValueError:
            if prec >= PRECISION_CAP:
                raise ValueError(
                    f"gcd descent still incomplete at precision {prec}: "
                    "degenerate input")
            prec = min(2 * prec, PRECISION_CAP)


# -- approximate roots -------------------------------------------------


def g_adic_expansion(F: MPoly, G: MPoly, var: str = "y") -> list[MPoly]:
    """Digits [a_d, ..., a_1, a_0] with F = sum a_i G^i, deg_var a_i < deg_var G."""
    digits = []
    rem = F
    while not rem.is_zero and rem.degree_in(var) >= G.degree_in(var):
        rem, digit = rem.divmod_in(var, G)
        digits.append(digit)
    digits.append(rem)
    return list(reversed(digits))


def approximate_root(F: MPoly, d: int, var: str = "y") -> MPoly:
    """The unique monic G with deg G = n/d whose G-adic alpha_1 vanishes.

    Tschirnhaus iteration G <- G + alpha_1/d from G = Y^{n/d}; each pass
    strictly lowers the degree of F - G^d, so deg_Y F passes suffice.
    """
    if F.field.char != 0:
        raise ValueError("approximate roots need characteristic zero")
    n = F.degree_in(var)
    if n <= 0:
        raise ValueError("input must involve the root variable")
    lead = F.coeff_in(var, n)
    if not lead.is_constant() or lead.constant_value() != F.field.one:
        raise ValueError(f"input must be monic in {var}")
    if d < 1 or n % d:
        raise ValueError(f"{d} does not divide the {var}-degree {n}")
    q = n // d
    G = MPoly.variable(F.vars, var, F.field, power=q)
    inv_d = F.field.inv(F.field.coerce(d))
    for _ in range(n + 1):
        digits = g_adic_expansion(F, G, var)
        assert len(digits) == d + 1
        alpha1 = digits[1]  # coefficient of G^{d-1} in [a_d*G^d + a_{d-1}G^{d-1} + ...]
        if alpha1.is_zero:
            return G
        G = G + alpha1.scale(inv_d)
    raise RuntimeError("Tschirnhaus iteration failed to converge")  # unreachable


# -- global pipelines --------------------------------------------------


def intersection_degree(F: MPoly, G: MPoly) -> int:
    """int(F, G) for an unparametrised curve: deg_X of Res_Y(F, G)."""
    res = sylvester_resultant(F, G, "y")
    if res.is_zero:
        raise ValueError("the two curves share a component")
    return res.degree_in("x")


def _normalize_global_pair(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    check_same_field(f.field, g.field)
    if f.field.char != 0:
        raise ValueError("the plane-branch pipeline needs characteristic zero")
    if f.is_zero or g.is_zero or (f.degree == 0) or (g.degree == 0):
        raise ValueError("zero or constant generator")
    f = f.monic_leading()[0]
    g = g.monic_leading()[0]
    if f.degree < g.degree:
        f, g = g, f
    while not g.is_zero and g.degree == f.degree:
        g = g - f.scale(g.leading_coeff)
    if g.is_zero or g.degree <= 0:
        raise ValueError("generators are algebraically dependent in degree 1")
    g = g.monic_leading()[0]
    combined = math.gcd(math.gcd(*f.support), math.gcd(*g.support))
    if combined != 1:
        raise ValueError(f"supports have common divisor {combined}")
    return f, g


@dataclass
class PlaneResult:
    semigroup: NumSgp
    sequence: object            # CharSequence or DeltaSeq
    curve: MPoly                # F(x, y)
    roots: list[MPoly]          # approximate roots G_1, G_2, ...
    evaluated: list[Poly]       # g_k = G_k(f, g) when a parametrisation exists
    generators: list[Poly]      # normalised f, g when a parametrisation exists


def gamma_at_infinity(f: Poly, g: Poly) -> PlaneResult:
    """Degree semigroup of K[f, g] via approximate roots of the resultant."""
    f, g = _normalize_global_pair(f, g)
    F = curve_resultant(f, g)
    n = F.degree_in("y")
    if n != int(f.degree):
        raise ValueError("parametrisation is not proper (resultant degree drop)")
    rs = [n]
    roots: list[MPoly] = []
    evaluated: list[Poly] = []
    d = n
    while d != 1:
        G = approximate_root(F, d)
        gk = eval_bipoly(G, f, g)
        if gk.is_zero:
            raise NotOnePlaceAtInfinity("approximate root evaluates to zero")
        rk = int(gk.degree)
        nxt = math.gcd(d, rk)
        if nxt == d:
            raise NotOnePlaceAtInfinity(
                f"gcd descent stalls at {d} (int value {rk})")
        rs.append(rk)
        roots.append(G)
        evaluated.append(gk)
        d = nxt
    seq = delta_sequence(rs)
    return PlaneResult(NumSgp(rs), seq, F, roots, evaluated, [f, g])


def gamma_curve_infinity(F: MPoly) -> PlaneResult:
    """Degree semigroup of a plane curve with one place at infinity.

    Only the necessary delta-sequence conditions are checked; when they
    fail the input cannot have one place at infinity and the error says
    so.  int(F, G) is computed as deg_X Res_Y(F, G).
    """
    if F.field.char != 0:
        raise ValueError("the plane-branch pipeline needs characteristic zero")
    n = F.degree_in("y")
    if n <= 0:
        raise ValueError("curve must involve y")
    lead = F.coeff_in("y", n)
    if not lead.is_constant():
        raise NotOnePlaceAtInfinity("leading y-coefficient is not a unit")
    F = F.scale(F.field.inv(lead.constant_value()))
    rs = [n]
    roots: list[MPoly] = []
    d = n
    while d != 1:
        G = approximate_root(F, d)
        rk = intersection_degree(F, G)
        nxt = math.gcd(d, rk)
        if nxt == d:
            raise NotOnePlaceAtInfinity(
                f"gcd descent stalls at {d} (int value {rk})")
        rs.append(rk)
        roots.append(G)
        d = nxt
    seq = delta_sequence(rs)
    return PlaneResult(NumSgp(rs), seq, F, roots, [], [])


# -- local pipeline with roots (monomial first generator) ---------------


def plane_local(f: Poly, g: Poly) -> PlaneResult:
    """Local two-generator pipeline with explicit approximate roots.

    Needs f to be the pure monomial x^n (reach that situation through
    :func:`reparametrize` otherwise); the g_k = G_k(f, g) then realise
    the generators r_k as orders, giving a concrete basis of K[[f, g]].
    """
    check_same_field(f.field, g.field)
    if f.field.char != 0:
        raise ValueError("the plane-branch pipeline needs characteristic zero")
    if f.is_zero or len(f.support) != 1 or f.trailing_coeff != f.field.one:
        raise ValueError("first generator must be a monic monomial x^n")
    n = int(f.order)
    g = g.monic_trailing()[0]
    if not (0 < n < g.order):
        raise ValueError("need o(f) < o(g) for the monomial pipeline")
    seq = char_sequence_from_support(n, g.support)
    F = curve_resultant(f, g)
    roots: list[MPoly] = []
    evaluated: list[Poly] = []
    for k in range(1, seq.h + 1):
        G = approximate_root(F, seq.d[k - 1])
        gk = eval_bipoly(G, f, g)
        if int(gk.order) != seq.r[k]:
            raise RuntimeError(
                f"approximate root has order {gk.order}, expected r_{k}={seq.r[k]}")
        roots.append(G)
        evaluated.append(gk)
    return PlaneResult(NumSgp(seq.r), seq, F, roots, evaluated, [f, g])
