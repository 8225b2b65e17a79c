from fractions import Fraction

import pytest

from ghilb.prng import SplitMix64
from ghilb.symbolic import (OMEGA, Poly, Ring, derivative, det,
                            jacobian_determinant, rank, rational_partial,
                            solve_combination)
from helpers import random_fraction, random_poly


def test_derivative_basics():
    R = Ring(("x", "y"))
    x, y = R.vars()
    p = x ** 3 * y + 2 * x - 5
    assert derivative(p, "x") == 3 * x ** 2 * y + 2
    assert derivative(p, "y") == x ** 3
    assert derivative(R.const(7), "x") == R.zero


def test_derivative_linearity_and_product_rule():
    rng = SplitMix64(41)
    for _ in range(40):
        p = random_poly(rng, ("x", "y"))
        q = random_poly(rng, ("x", "y"))
        c = random_fraction(rng)
        assert derivative(p + q, "x") == derivative(p, "x") + derivative(q, "x")
        assert derivative(c * p, "y") == c * derivative(p, "y")
        assert (derivative(p * q, "x")
                == derivative(p, "x") * q + p * derivative(q, "x"))


def test_det_small_matrices():
    assert det([]) == 1
    assert det([[Fraction(5)]]) == 5
    assert det([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]) == -2
    m3 = [[Fraction(2), 0, 0], [0, Fraction(3), 0], [0, 0, Fraction(4)]]
    assert det(m3) == 24
    # singular
    assert det([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]) == 0
    # cyclotomic entries
    assert det([[OMEGA, 0], [0, OMEGA ** 2]]) == 1


def test_jacobian_identity_map():
    R = Ring(("x", "y", "z"))
    funcs = [(R.var(n), R.one) for n in ("x", "y", "z")]
    pt = {"x": Fraction(2), "y": Fraction(-1), "z": Fraction(7, 3)}
    assert jacobian_determinant(funcs, ("x", "y", "z"), pt) == 1


def test_jacobian_polynomial_map():
    # (x^2, x*y): det = [[2x, 0], [y, x]] = 2x^2
    R = Ring(("x", "y"))
    x, y = R.vars()
    funcs = [(x ** 2, R.one), (x * y, R.one)]
    pt = {"x": Fraction(3), "y": Fraction(5)}
    assert jacobian_determinant(funcs, ("x", "y"), pt) == 18


def test_rational_partial_quotient_rule():
    # d/dx (x/y) = 1/y, d/dy (x/y) = -x/y^2
    R = Ring(("x", "y"))
    x, y = R.vars()
    pt = {"x": Fraction(2), "y": Fraction(3)}
    assert rational_partial((x, y), "x", pt) == Fraction(1, 3)
    assert rational_partial((x, y), "y", pt) == Fraction(-2, 9)
    with pytest.raises(ZeroDivisionError):
        rational_partial((x, y), "x", {"x": 1, "y": 0})


def test_jacobian_symmetric_functions():
    # u = x + y, v = x*y: det [[1, 1], [y, x]] = x - y
    R = Ring(("x", "y"))
    x, y = R.vars()
    funcs = [(x + y, R.one), (x * y, R.one)]
    pt = {"x": Fraction(5), "y": Fraction(2)}
    assert jacobian_determinant(funcs, ("x", "y"), pt) == 3


def test_rank():
    assert rank([]) == 0
    assert rank([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]) == 1
    assert rank([[Fraction(1), 0], [0, Fraction(1)]]) == 2
    assert rank([[OMEGA, Fraction(1)], [OMEGA ** 2, OMEGA]]) == 1


def test_solve_combination():
    v1 = [Fraction(1), Fraction(0), Fraction(1)]
    v2 = [Fraction(0), Fraction(1), Fraction(1)]
    target = [Fraction(2), Fraction(3), Fraction(5)]
    c = solve_combination([v1, v2], target)
    assert c == [Fraction(2), Fraction(3)]
    assert solve_combination([v1, v2], [1, 0, 0]) is None
    assert solve_combination([], [0, 0]) == []
    assert solve_combination([], [1, 0]) is None
