"""Sparse multivariate polynomials over exact scalars.

A :class:`Poly` stores a tuple of variable names and a dict mapping
exponent tuples to nonzero coefficients (Fraction or Cyclotomic). The
representation is canonical: no zero coefficients are ever stored, so
equality is plain dict equality.

Monomial orders are small strategy objects exposing ``key(exps)``; a
larger key means a larger monomial. ``GrLex`` and ``Lex`` break ties
toward earlier variables. ``BlockOrder`` compares a dominant block of
variables first (graded-lex within the block) and only then the
remaining variables; it is what keeps main-variable leading terms in
front when auxiliary parameters are adjoined to a ring.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from .scalars import Cyclotomic, Scalar, conjugate_scalar

Exps = Tuple[int, ...]

_SCALAR_TYPES = (int, Fraction, Cyclotomic)


# ---------------------------------------------------------------------------
# exponent-tuple helpers

def exp_mul(e1: Exps, e2: Exps) -> Exps:
    return tuple(a + b for a, b in zip(e1, e2))


def exp_div(e1: Exps, e2: Exps):
    """e1 / e2 as an exponent tuple, or None if e2 does not divide e1."""
    out = []
    for a, b in zip(e1, e2):
        if a < b:
            return None
        out.append(a - b)
    return tuple(out)


def exp_lcm(e1: Exps, e2: Exps) -> Exps:
    return tuple(max(a, b) for a, b in zip(e1, e2))


def exp_divides(e1: Exps, e2: Exps) -> bool:
    """True if the monomial with exponents e1 divides the one with e2."""
    return all(a <= b for a, b in zip(e1, e2))


# ---------------------------------------------------------------------------
# monomial orders

class GrLex:
    """Graded lexicographic: degree first, ties toward earlier variables."""

    def key(self, exps: Exps):
        return (sum(exps), exps)

    def __repr__(self):
        return "GrLex()"


class Lex:
    def key(self, exps: Exps):
        return exps

    def __repr__(self):
        return "Lex()"


class BlockOrder:
    """Two-block order: graded-lex on ``dominant`` variables, then
    graded-lex on the rest. Positions are resolved against ``names``."""

    def __init__(self, names: Sequence[str], dominant: Iterable[str]):
        dom = set(dominant)
        missing = dom - set(names)
        if missing:
            raise ValueError(f"unknown dominant variables: {sorted(missing)}")
        self.main = tuple(i for i, n in enumerate(names) if n in dom)
        self.tail = tuple(i for i, n in enumerate(names) if n not in dom)

    def key(self, exps: Exps):
        main = tuple(exps[i] for i in self.main)
        tail = tuple(exps[i] for i in self.tail)
        return (sum(main), main, sum(tail), tail)

    def __repr__(self):
        return f"BlockOrder(main={self.main})"


GRLEX = GrLex()
LEX = Lex()


# ---------------------------------------------------------------------------

class Poly:
    __slots__ = ("names", "terms")

    def __init__(self, names: Sequence[str], terms: Mapping[Exps, Scalar]):
        self.names = tuple(names)
        self.terms: Dict[Exps, Scalar] = {
            e: c for e, c in terms.items() if c != 0
        }

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, names) -> "Poly":
        return cls(names, {})

    @classmethod
    def const(cls, names, c) -> "Poly":
        n = len(names)
        return cls(names, {(0,) * n: c} if c != 0 else {})

    @classmethod
    def variable(cls, names, name) -> "Poly":
        i = tuple(names).index(name)
        e = tuple(1 if j == i else 0 for j in range(len(names)))
        return cls(names, {e: Fraction(1)})

    @classmethod
    def monomial(cls, names, exps: Exps, coeff: Scalar = Fraction(1)) -> "Poly":
        return cls(names, {tuple(exps): coeff})

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Scalar:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        # degree of 0 reported as -1 to keep comparisons simple
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.names.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def leading_term(self, order) -> Tuple[Exps, Scalar]:
        if not self.terms:
            raise ValueError("leading term of zero")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def coeff(self, exps: Exps) -> Scalar:
        return self.terms.get(tuple(exps), Fraction(0))

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.names != other.names:
            raise ValueError(f"ring mismatch: {self.names} vs {other.names}")

    def __add__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            other = Poly.const(self.names, other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return Poly(self.names, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            other = Poly.const(self.names, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            if other == 0:
                return Poly.zero(self.names)
            return Poly(self.names,
                        {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        terms: Dict[Exps, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = exp_mul(e1, e2)
                s = terms.get(e, 0) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return Poly(self.names, terms)

    def __rmul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need n >= 0")
        result = Poly.const(self.names, Fraction(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            other = Poly.const(self.names, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.names == other.names and self.terms == other.terms

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    # -- coefficient maps ---------------------------------------------------

    def map_coeffs(self, fn) -> "Poly":
        return Poly(self.names, {e: fn(c) for e, c in self.terms.items()})

    def conjugate_coeffs(self) -> "Poly":
        """Apply w -> w^2 to every coefficient (identity on rationals)."""
        return self.map_coeffs(conjugate_scalar)

    # -- evaluation / substitution -------------------------------------------

    def evaluate(self, vals: Mapping[str, Scalar]) -> Scalar:
        missing = [n for n in self.names if n not in vals]
        if missing:
            raise ValueError(f"missing values for {missing}")
        point = [vals[n] for n in self.names]
        # per-variable power cache; exponents here stay small
        cache: Dict[Tuple[int, int], Scalar] = {}

        def pw(i, e):
            if e == 0:
                return Fraction(1)
            got = cache.get((i, e))
            if got is None:
                got = point[i] ** e
                cache[(i, e)] = got
            return got

        acc: Scalar = Fraction(0)
        for exps, c in self.terms.items():
            t = c
            for i, e in enumerate(exps):
                if e:
                    t = t * pw(i, e)
            acc = acc + t
        return acc

    def substitute(self, images: Mapping[str, Union["Poly", Scalar]],
                   names: Sequence[str] = None) -> "Poly":
        """Substitute polynomials (or scalars) for variables.

        Unmapped variables must exist in the target ring and map to
        themselves. The target variable set is ``names`` if given, else
        the names of any polynomial image, else this polynomial's names.
        """
        if names is None:
            for v in images.values():
                if isinstance(v, Poly):
                    names = v.names
                    break
            else:
                names = self.names
        names = tuple(names)
        imgs: Dict[str, Poly] = {}
        for n in self.names:
            v = images.get(n)
            if v is None:
                imgs[n] = Poly.variable(names, n)
            elif isinstance(v, Poly):
                if v.names != names:
                    raise ValueError("substitution images disagree on ring")
                imgs[n] = v
            else:
                imgs[n] = Poly.const(names, v)

        cache: Dict[Tuple[str, int], Poly] = {}

        def pw(n, e):
            if e == 0:
                return Poly.const(names, Fraction(1))
            got = cache.get((n, e))
            if got is None:
                got = imgs[n] ** e
                cache[(n, e)] = got
            return got

        acc = Poly.zero(names)
        for exps, c in self.terms.items():
            t = Poly.const(names, c)
            for i, e in enumerate(exps):
                if e:
                    t = t * pw(self.names[i], e)
            acc = acc + t
        return acc

    def embed(self, names: Sequence[str]) -> "Poly":
        """Re-express in a larger ring containing all current variables."""
        names = tuple(names)
        pos = []
        for n in self.names:
            pos.append(names.index(n))
        terms = {}
        for exps, c in self.terms.items():
            e = [0] * len(names)
            for i, x in enumerate(exps):
                e[pos[i]] = x
            terms[tuple(e)] = c
        return Poly(names, terms)

    # -- display -------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=GRLEX.key, reverse=True):
            c = self.terms[exps]
            factors = []
            for n, e in zip(self.names, exps):
                if e == 1:
                    factors.append(n)
                elif e > 1:
                    factors.append(f"{n}^{e}")
            mono = "*".join(factors)
            cs = str(c)
            if "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self):
        return f"Poly({self})"


class Ring:
    """Thin factory for polynomials sharing one variable tuple."""

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.names = names

    def var(self, name: str) -> Poly:
        return Poly.variable(self.names, name)

    def vars(self) -> Tuple[Poly, ...]:
        return tuple(Poly.variable(self.names, n) for n in self.names)

    def const(self, c) -> Poly:
        return Poly.const(self.names, c)

    @property
    def zero(self) -> Poly:
        return Poly.zero(self.names)

    @property
    def one(self) -> Poly:
        return Poly.const(self.names, Fraction(1))

    def monomial(self, exps: Exps, coeff: Scalar = Fraction(1)) -> Poly:
        return Poly.monomial(self.names, exps, coeff)

    def __repr__(self):
        return f"Ring({', '.join(self.names)})"
