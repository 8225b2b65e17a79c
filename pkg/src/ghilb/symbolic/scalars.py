"""Exact scalar arithmetic.

Two scalar domains are used throughout the package:

* plain rationals, represented by :class:`fractions.Fraction`;
* the quadratic extension by a primitive cube root of unity ``w``,
  represented by :class:`Cyclotomic` (pairs ``a + b*w`` with rational
  ``a``, ``b`` and the reduction rule ``w**2 == -1 - w``).

Mixed expressions coerce upward: ``Fraction + Cyclotomic`` lands in
:class:`Cyclotomic`. All operations are exact; nothing here ever touches
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Fraction

RationalLike = Union[int, Fraction]


class Cyclotomic:
    """An element ``a + b*w`` of Q(w) with ``w`` a primitive cube root of 1."""

    __slots__ = ("a", "b")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    # -- coercion -----------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic(x, 0)
        return None

    # -- ring structure -----------------------------------------------

    def __add__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(-self.a, -self.b)

    def __sub__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(o.a - self.a, o.b - self.b)

    def __mul__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        # (a1 + b1 w)(a2 + b2 w), reduced with w^2 = -1 - w
        a1, b1, a2, b2 = self.a, self.b, o.a, o.b
        return Cyclotomic(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2 - b1 * b2)

    __rmul__ = __mul__

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, i.e. w -> w^2."""
        return Cyclotomic(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        """Field norm ``x * conj(x)``; zero iff x is zero."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self) -> "Cyclotomic":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conjugate()
        return Cyclotomic(c.a / n, c.b / n)

    def __truediv__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclotomic(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing -----------------------------------------

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)  # agree with Fraction/int when rational
        return hash((self.a, self.b, "w"))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def is_rational(self) -> bool:
        return self.b == 0

    # -- display --------------------------------------------------------

    def __repr__(self):
        return f"Cyclotomic({self.a!r}, {self.b!r})"

    def __str__(self):
        return scalar_str(self)


OMEGA = Cyclotomic(0, 1)
OMEGA2 = Cyclotomic(-1, -1)
# w - w^2 = 1 + 2w; its square is -3
SQRT_MINUS_THREE = Cyclotomic(1, 2)

Scalar = Union[int, Fraction, Cyclotomic]


def conjugate_scalar(x: Scalar) -> Scalar:
    return x.conjugate() if isinstance(x, Cyclotomic) else x


def scalar_inverse(x: Scalar) -> Scalar:
    if isinstance(x, Cyclotomic):
        return x.inverse()
    return Fraction(1) / Fraction(x)


def scalar_str(x: Scalar) -> str:
    """Canonical text form: rationals as 'p/q' or 'p', elements of Q(w)
    as 'a', 'bw', or 'a+bw' with explicit sign and no spaces."""
    if isinstance(x, Cyclotomic):
        if x.b == 0:
            return str(x.a)
        if x.b == 1:
            wpart = "w"
        elif x.b == -1:
            wpart = "-w"
        else:
            wpart = f"{x.b}w"
        if x.a == 0:
            return wpart
        sign = "+" if x.b > 0 else ""
        return f"{x.a}{sign}{wpart}"
    return str(Fraction(x))
