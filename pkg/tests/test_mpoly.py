import random

import pytest

from curvesgp import MPoly, curve_resultant, eval_bipoly, resultant_eliminate
from curvesgp.mpoly import sylvester_resultant
from util import XY, P, xp


def test_resultant_t7_vs_t4_plus_t2():
    F = curve_resultant(xp(7), xp(4) + xp(2))
    assert F == XY({(0, 7): 1, (2, 3): -7, (4, 0): -1, (2, 2): -14,
                    (2, 1): -7, (2, 0): -1})


def test_resultant_t4_vs_t6_plus_t7():
    F = curve_resultant(xp(4), xp(6) + xp(7))
    assert F == XY({(0, 4): 1, (3, 2): -2, (6, 0): 1, (5, 1): -4, (7, 0): -1})


def test_resultant_sign_convention():
    assert curve_resultant(xp(1), xp(1)) == XY({(0, 1): 1, (1, 0): -1})


def test_resultant_rejects_constants():
    vars = ("t", "x", "y")
    c = MPoly.constant(vars, 3)
    with pytest.raises(ValueError):
        resultant_eliminate(c, c + c, "t")


def test_resultant_of_degree_zero_side():
    # one side constant in the eliminated variable: Res = that side ^ deg(other)
    F = XY({(0, 2): 1, (3, 0): -1})  # y^2 - x^3
    G = XY({(1, 0): 1})              # x
    res = sylvester_resultant(F, G, "y")
    assert res == XY({(2, 0): 1})


def test_resultant_vanishes_on_parametrisation():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randrange(2, 5)
        m = rng.randrange(2, 6)
        f = P(*([(n, 1)] + [(n + k, rng.randrange(-2, 3)) for k in range(1, 3)]))
        g = P(*([(m, 1)] + [(m + k, rng.randrange(-2, 3)) for k in range(1, 3)]))
        F = curve_resultant(f, g)
        assert eval_bipoly(F, f, g).is_zero


def test_eval_bipoly_examples():
    G = XY({(0, 2): 1, (3, 0): -1})  # Y^2 - X^3
    assert eval_bipoly(G, xp(4), xp(6) + xp(7)) == P((13, 2), (14, 1))
    G2 = XY({(0, 3): 1, (2, 0): -1})  # Y^3 - X^2
    assert eval_bipoly(G2, xp(6) + xp(1), xp(4)) == P((7, -2), (2, -1))
    X = XY({(1, 0): 1})
    assert eval_bipoly(X, xp(5) + xp(2), xp(9)) == xp(5) + xp(2)


def test_divmod_in():
    F = XY({(0, 4): 1, (3, 2): -2, (6, 0): 1, (5, 1): -4, (7, 0): -1})
    G = XY({(0, 2): 1, (3, 0): -1})
    q, r = F.divmod_in("y", G)
    assert q * G + r == F
    assert r.degree_in("y") < 2


def test_exact_div_round_trip():
    a = XY({(1, 0): 1, (0, 1): 2, (0, 0): -1})
    b = XY({(2, 1): 3, (0, 2): -5, (1, 0): 1})
    assert (a * b).exact_div(a) == b
    with pytest.raises(ArithmeticError):
        (a * b + MPoly.constant(("x", "y"), 1)).exact_div(a)


def test_bareiss_determinant_with_zero_pivot():
    from fractions import Fraction

    from curvesgp.mpoly import bareiss_determinant

    vars = ("x", "y")
    def c(v):
        return MPoly.constant(vars, v)

    x = MPoly.variable(vars, "x")
    zero = MPoly.zero(vars)
    # leading pivot is zero: a row swap (and sign flip) is required
    m = [[zero, c(1), c(2)],
         [c(1), x, c(0)],
         [c(3), c(0), c(1)]]
    # det = 0*(x*1-0*0) - 1*(1*1-0*3) + 2*(1*0-x*3) = -1 - 6x
    det = bareiss_determinant(m, vars, x.field)
    assert det == MPoly(vars, x.field, {(0, 0): Fraction(-1), (1, 0): Fraction(-6)})
    singular = [[zero, zero], [c(1), c(1)]]
    assert bareiss_determinant(singular, vars, x.field).is_zero


def test_divmod_requires_unit_leading_coefficient():
    F = XY({(0, 2): 1, (3, 0): -1})
    G = XY({(1, 1): 1})  # leading y-coefficient is x, not a unit
    with pytest.raises(ValueError):
        F.divmod_in("y", G)


def test_degree_queries():
    F = XY({(0, 4): 1, (7, 0): -1})
    assert F.degree_in("y") == 4
    assert F.degree_in("x") == 7
    assert MPoly.zero(("x", "y")).degree_in("x") == -1
