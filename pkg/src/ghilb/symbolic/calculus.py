"""Exact differentiation and small exact linear algebra.

The Jacobian helper works on rational functions given as (numerator,
denominator) polynomial pairs and evaluates everything at an exact point,
so determinants of chart coordinate changes come out as exact scalars.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Mapping, Optional, Sequence, Tuple

from .poly import Poly
from .scalars import Scalar, scalar_inverse


def derivative(p: Poly, name: str) -> Poly:
    i = p.names.index(name)
    terms = {}
    for e, c in p.terms.items():
        if e[i]:
            ne = list(e)
            ne[i] -= 1
            terms[tuple(ne)] = c * e[i]
    return Poly(p.names, terms)


def det(matrix: Sequence[Sequence[Scalar]]) -> Scalar:
    """Determinant by cofactor expansion; intended for n <= 4."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return matrix[0][0]
    total: Scalar = Fraction(0)
    for j in range(n):
        c = matrix[0][j]
        if c == 0:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in matrix[1:]]
        term = c * det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


RationalFunc = Tuple[Poly, Poly]  # (numerator, denominator)


def rational_partial(func: RationalFunc, name: str,
                     point: Mapping[str, Scalar]) -> Scalar:
    """d(num/den)/d(name) evaluated at an exact point."""
    num, den = func
    dv = den.evaluate(point)
    if dv == 0:
        raise ZeroDivisionError(f"denominator vanishes at {dict(point)}")
    nv = num.evaluate(point)
    dn = derivative(num, name).evaluate(point)
    dd = derivative(den, name).evaluate(point)
    return (dn * dv - nv * dd) * scalar_inverse(dv * dv)


def jacobian_determinant(funcs: Sequence[RationalFunc],
                         varnames: Sequence[str],
                         point: Mapping[str, Scalar]) -> Scalar:
    if len(funcs) != len(varnames):
        raise ValueError("need as many functions as variables")
    m = [[rational_partial(f, x, point) for x in varnames] for f in funcs]
    return det(m)


# ---------------------------------------------------------------------------
# exact Gaussian elimination

def _rref(rows: List[List[Scalar]]) -> Tuple[List[List[Scalar]], List[int]]:
    m = len(rows)
    k = len(rows[0]) if m else 0
    rows = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = scalar_inverse(rows[r][col])
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    return rows, pivots


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    if not rows:
        return 0
    _, pivots = _rref([list(r) for r in rows])
    return len(pivots)


def solve_combination(vectors: Sequence[Sequence[Scalar]],
                      target: Sequence[Scalar]) -> Optional[List[Scalar]]:
    """Coefficients c with sum(c[i] * vectors[i]) == target, or None.

    Free coefficients (if the vectors are dependent) are set to zero.
    """
    if not vectors:
        return [] if all(t == 0 for t in target) else None
    m = len(vectors[0])
    aug = [[v[i] for v in vectors] + [target[i]] for i in range(m)]
    red, pivots = _rref(aug)
    k = len(vectors)
    for row in red:
        if all(row[j] == 0 for j in range(k)) and row[k] != 0:
            return None
    # a pivot in the last column also means inconsistency
    if k in pivots:
        return None
    coeffs: List[Scalar] = [Fraction(0)] * k
    for i, col in enumerate(pivots):
        coeffs[col] = red[i][k]
    return coeffs
