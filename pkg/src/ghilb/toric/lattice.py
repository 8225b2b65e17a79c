"""Lattices refining Z^n by diagonal group data, and rational simplex points.

The lattice N for a finite diagonal abelian group is Z^n extended by
generator vectors g/D; everything is handled through the integer lattice
L = D*N inside Z^n, triangularized once by integer row reduction so that
membership tests and basis extraction are exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple


def _hermite_rows(rows: Sequence[Sequence[int]], n: int) -> List[List[int]]:
    """Row-staircase form (Hermite style) of a full-column-rank integer
    row family: returns n rows, row i with positive pivot at column i."""
    work = [list(map(int, r)) for r in rows]
    out: List[List[int]] = []
    for col in range(n):
        while True:
            nz = sorted((i for i in range(len(work)) if work[i][col] != 0),
                        key=lambda i: abs(work[i][col]))
            if not nz:
                raise ValueError("rows do not span full rank")
            if len(nz) == 1:
                break
            i0 = nz[0]
            for i in nz[1:]:
                q = work[i][col] // work[i0][col]
                if q:
                    work[i] = [a - q * b
                               for a, b in zip(work[i], work[i0])]
        piv = work.pop(nz[0])
        if piv[col] < 0:
            piv = [-a for a in piv]
        out.append(piv)
    return out


def mat_inverse(rows: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    """Exact inverse by Gauss-Jordan; raises on singular input."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j))
                                         for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


class DiagonalGroupLattice:
    """N = Z^n + sum(Z * g/D) for integer generator vectors g with
    coordinate sum divisible by D."""

    def __init__(self, n: int, denominator: int,
                 generators: Sequence[Sequence[int]]):
        if denominator < 1:
            raise ValueError("denominator must be positive")
        self.n = n
        self.denominator = denominator
        self.generators = [tuple(map(int, g)) for g in generators]
        for g in self.generators:
            if len(g) != n:
                raise ValueError("generator length mismatch")
            if sum(g) % denominator != 0:
                raise ValueError("generator coordinate sum not divisible "
                                 "by the denominator")
        rows = [[denominator * int(i == j) for j in range(n)]
                for i in range(n)]
        rows += [list(g) for g in self.generators]
        # L = D*N as an integer lattice, staircase basis
        self._scaled_basis = _hermite_rows(rows, n)
        det = 1
        for i in range(n):
            det *= self._scaled_basis[i][i]
        if denominator ** n % det != 0:
            raise ValueError("lattice index is not integral")
        self.order = denominator ** n // det  # |N / Z^n| = |G|

    def contains_scaled(self, x: Sequence[int]) -> bool:
        """Membership of an integer vector in L = D*N."""
        c = list(map(int, x))
        for i in range(self.n):
            q, rem = divmod(c[i], self._scaled_basis[i][i])
            if rem != 0:
                return False
            c = [a - q * b for a, b in zip(c, self._scaled_basis[i])]
        return all(a == 0 for a in c)

    def contains(self, point: Sequence[Fraction]) -> bool:
        """Membership of a rational vector in N."""
        scaled = [Fraction(x) * self.denominator for x in point]
        if any(s.denominator != 1 for s in scaled):
            return False
        return self.contains_scaled([s.numerator for s in scaled])

    def basis(self) -> List[Tuple[Fraction, ...]]:
        """Rows form an N-basis (the staircase basis of L divided by D)."""
        D = self.denominator
        return [tuple(Fraction(a, D) for a in row)
                for row in self._scaled_basis]

    def dual_contains(self, mu: Sequence[int]) -> bool:
        """Membership in M = dual lattice of N (within Z^n): integral
        pairing with every lattice generator g/D."""
        D = self.denominator
        for g in self.generators:
            if sum(m * a for m, a in zip(mu, g)) % D != 0:
                return False
        return True

    def __repr__(self):
        return (f"DiagonalGroupLattice(n={self.n}, "
                f"denominator={self.denominator}, order={self.order})")


def ar_lattice(r: int, n: int) -> DiagonalGroupLattice:
    """The lattice of the diagonal abelian family with |G| = (r+1)^(n-1):
    all diagonal matrices of (r+1)-th roots of unity with determinant 1."""
    if r < 1 or n < 2:
        raise ValueError("need r >= 1 and n >= 2")
    gens = []
    for j in range(1, n):
        g = [0] * n
        g[0] = 1
        g[j] = -1
        gens.append(g)
    return DiagonalGroupLattice(n, r + 1, gens)


@dataclass(frozen=True)
class SimplexPoint:
    """Rational point with nonnegative coordinates summing to 1, stored
    as integer coordinates over a common denominator (reduced form)."""

    coords: Tuple[int, ...]
    den: int

    def __init__(self, coords: Sequence[int], den: int):
        if den < 1:
            raise ValueError("denominator must be positive")
        coords = tuple(map(int, coords))
        if any(c < 0 for c in coords):
            raise ValueError("coordinates must be nonnegative")
        if sum(coords) != den:
            raise ValueError("coordinates must sum to the denominator")
        g = den
        for c in coords:
            g = gcd(g, c)
        object.__setattr__(self, "coords", tuple(c // g for c in coords))
        object.__setattr__(self, "den", den // g)

    @classmethod
    def from_fractions(cls, fracs: Sequence[Fraction]) -> "SimplexPoint":
        fracs = [Fraction(f) for f in fracs]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        return cls([int(f * den) for f in fracs], den)

    def as_fractions(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.coords)

    def coords_over(self, den: int) -> Tuple[int, ...]:
        """Integer coordinates over a prescribed common denominator."""
        if den % self.den != 0:
            raise ValueError(f"point not representable over /{den}")
        f = den // self.den
        return tuple(c * f for c in self.coords)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + f")/{self.den}"


def vertex_weight(p: SimplexPoint, lat: DiagonalGroupLattice) -> int:
    """Least m >= 1 with m*p in N."""
    D = lat.denominator
    for m in range(1, p.den * D + 1):
        t = [D * m * c for c in p.coords]
        if all(x % p.den == 0 for x in t):
            if lat.contains_scaled([x // p.den for x in t]):
                return m
    raise AssertionError("no multiple landed in the lattice")
