"""Shared test helpers: deterministic random scalars and polynomials."""

from fractions import Fraction

from ghilb.prng import SplitMix64
from ghilb.symbolic import Cyclotomic, Poly


def random_fraction(rng: SplitMix64, lo=-9, hi=9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 9))


def random_cyclotomic(rng: SplitMix64) -> Cyclotomic:
    return Cyclotomic(random_fraction(rng), random_fraction(rng))


def random_poly(rng: SplitMix64, names, max_terms=5, max_exp=3,
                cyclotomic=False) -> Poly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = tuple(rng.randint(0, max_exp) for _ in names)
        c = random_cyclotomic(rng) if cyclotomic else random_fraction(rng)
        terms[e] = c
    return Poly(names, terms)
