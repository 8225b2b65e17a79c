from fractions import Fraction

import pytest

from ghilb.prng import SplitMix64
from ghilb.symbolic import (BlockOrder, GRLEX, LEX, OMEGA, OMEGA2, Poly, Ring)
from helpers import random_fraction, random_poly

Z = ("Z1", "Z2", "Z3", "Z4")


def test_zero_coefficients_never_stored():
    p = Poly(Z, {(1, 0, 0, 0): Fraction(0), (0, 1, 0, 0): Fraction(2)})
    assert list(p.terms) == [(0, 1, 0, 0)]
    q = Poly.variable(Z, "Z1") - Poly.variable(Z, "Z1")
    assert q.is_zero()
    assert q == 0


def test_ring_factory():
    R = Ring(Z)
    z1, z2, z3, z4 = R.vars()
    assert z1 * z2 == R.monomial((1, 1, 0, 0))
    assert R.one + R.zero == R.const(1)
    with pytest.raises(ValueError):
        Ring(("a", "a"))


def test_arithmetic_identities_random():
    rng = SplitMix64(11)
    for _ in range(60):
        p = random_poly(rng, Z)
        q = random_poly(rng, Z)
        r = random_poly(rng, Z)
        assert (p + q) * r == p * r + q * r
        assert p * q == q * p
        assert p - p == 0
        assert (p * q) * r == p * (q * r)


def test_pow_matches_repeated_multiplication():
    rng = SplitMix64(13)
    p = random_poly(rng, Z, max_terms=3, max_exp=2)
    acc = Poly.const(Z, Fraction(1))
    for n in range(5):
        assert p ** n == acc
        acc = acc * p


def test_scalar_multiplication_and_coercion():
    R = Ring(Z)
    z1 = R.var("Z1")
    assert 2 * z1 == z1 + z1
    assert Fraction(1, 2) * (z1 + z1) == z1
    assert OMEGA * z1 * OMEGA * OMEGA == z1
    assert (z1 + 1) - 1 == z1


def test_evaluate():
    R = Ring(("x", "y"))
    x, y = R.vars()
    p = x ** 2 * y - 3 * y + 1
    v = p.evaluate({"x": Fraction(2), "y": Fraction(1, 2)})
    assert v == Fraction(4, 2) - Fraction(3, 2) + 1
    w = (x + OMEGA * y).evaluate({"x": 1, "y": 1})
    assert w == 1 + OMEGA
    with pytest.raises(ValueError):
        p.evaluate({"x": 1})


def test_substitute_composition():
    R = Ring(("x", "y"))
    x, y = R.vars()
    p = x ** 2 + y
    # x -> x + y, y -> x*y
    q = p.substitute({"x": x + y, "y": x * y})
    assert q == x ** 2 + 2 * x * y + y ** 2 + x * y
    # scalar images collapse to a constant
    c = p.substitute({"x": Fraction(2), "y": Fraction(3)}, names=("x", "y"))
    assert c == R.const(7)


def test_substitute_into_larger_ring():
    small = Ring(("x",))
    big = Ring(("x", "t"))
    p = small.var("x") ** 2
    q = p.substitute({"x": big.var("x") + big.var("t")})
    assert q.names == ("x", "t")
    assert q == (big.var("x") + big.var("t")) ** 2


def test_conjugate_coeffs():
    R = Ring(("x",))
    x = R.var("x")
    p = OMEGA * x + 2
    assert p.conjugate_coeffs() == OMEGA2 * x + 2
    assert p.conjugate_coeffs().conjugate_coeffs() == p


def test_embed():
    p = Poly(("x", "z"), {(1, 2): Fraction(3)})
    q = p.embed(("w", "x", "y", "z"))
    assert q.names == ("w", "x", "y", "z")
    assert q.terms == {(0, 1, 0, 2): Fraction(3)}


def test_grlex_order():
    # degree first, then earlier variables win ties
    p = Poly(Z, {(1, 0, 1, 0): Fraction(1), (0, 2, 0, 0): Fraction(1)})
    e, _ = p.leading_term(GRLEX)
    assert e == (1, 0, 1, 0)
    q = Poly(Z, {(1, 0, 0, 0): Fraction(1), (0, 1, 1, 0): Fraction(1)})
    e, _ = q.leading_term(GRLEX)
    assert e == (0, 1, 1, 0)


def test_lex_order():
    q = Poly(Z, {(1, 0, 0, 0): Fraction(1), (0, 1, 1, 0): Fraction(1)})
    e, _ = q.leading_term(LEX)
    assert e == (1, 0, 0, 0)


def test_block_order_keeps_main_variables_dominant():
    names = ("Z1", "Z2", "Z3", "Z4", "g12")
    order = BlockOrder(names, dominant=("Z1", "Z2", "Z3", "Z4"))
    # Z1*Z2 - g12*Z3*Z4: flat grlex would pick the degree-3 term
    p = Poly(names, {(1, 1, 0, 0, 0): Fraction(1),
                     (0, 0, 1, 1, 1): Fraction(-1)})
    assert p.leading_term(order)[0] == (1, 1, 0, 0, 0)
    assert p.leading_term(GRLEX)[0] == (0, 0, 1, 1, 1)
    # ties on the main block fall through to the parameter block
    q = Poly(names, {(0, 1, 0, 0, 1): Fraction(1),
                     (0, 1, 0, 0, 0): Fraction(-1)})
    assert q.leading_term(order)[0] == (0, 1, 0, 0, 1)
    with pytest.raises(ValueError):
        BlockOrder(names, dominant=("nope",))


def test_degree_queries():
    R = Ring(("x", "y"))
    x, y = R.vars()
    p = x ** 3 * y + y ** 2
    assert p.total_degree() == 4
    assert p.degree_in("x") == 3
    assert p.degree_in("y") == 2
    assert R.zero.total_degree() == -1


def test_str_is_readable():
    R = Ring(("x", "y"))
    x, y = R.vars()
    assert str(R.zero) == "0"
    assert str(x ** 2 - y) in ("x^2-y", "x^2-y")
    assert str(2 * x) == "2*x"
    assert str(OMEGA * x) == "w*x"


def test_random_evaluation_is_a_ring_map():
    rng = SplitMix64(21)
    for _ in range(40):
        p = random_poly(rng, ("x", "y"))
        q = random_poly(rng, ("x", "y"))
        pt = {"x": random_fraction(rng), "y": random_fraction(rng)}
        assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)
        assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
