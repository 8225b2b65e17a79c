"""Polytope decompositions of the junior simplex with certification.

A Decomposition stores a vertex table of rational simplex points and the
maximal cells (as sorted vertex-id tuples). Cells with n vertices are
simplices; 6-vertex cells in dimension 4 are octahedra, whose proper
faces are exactly the vertex subsets of size <= 3 containing no
antipodal pair. Faces are generated on demand and memoized.

Certificates:
  * crepancy  <=>  every vertex weight is 1 (offenders reported);
  * smoothness <=> every maximal cell is a simplex whose weighted
    vertices form a basis of N (non-simplices and bad determinants are
    reported);
  * the Euler number of the associated space is the maximal cell count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..symbolic.calculus import det
from .lattice import (DiagonalGroupLattice, SimplexPoint, mat_inverse,
                      vertex_weight)


@dataclass(frozen=True)
class Cell:
    vertex_ids: Tuple[int, ...]

    def __init__(self, vertex_ids: Sequence[int]):
        ids = tuple(sorted(int(i) for i in vertex_ids))
        if len(set(ids)) != len(ids):
            raise ValueError("repeated vertex in cell")
        object.__setattr__(self, "vertex_ids", ids)

    def __len__(self):
        return len(self.vertex_ids)

    def __iter__(self):
        return iter(self.vertex_ids)


class Decomposition:
    def __init__(self, lattice: DiagonalGroupLattice,
                 vertices: Sequence[SimplexPoint],
                 maximal_cells: Sequence[Cell],
                 den: int):
        self.lattice = lattice
        self.vertices: Tuple[SimplexPoint, ...] = tuple(vertices)
        self.maximal_cells: Tuple[Cell, ...] = tuple(maximal_cells)
        self.den = int(den)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertices in table")
        n = lattice.n
        for v in self.vertices:
            v.coords_over(self.den)  # representability over the global den
            if len(v.coords) != n:
                raise ValueError("vertex dimension mismatch")
        for c in self.maximal_cells:
            if any(i < 0 or i >= len(self.vertices) for i in c):
                raise ValueError("cell references unknown vertex")
            if len(c) != n and not (len(c) == 6 and n == 4):
                raise ValueError(f"cell with {len(c)} vertices unsupported")
        self._weights: Dict[int, int] = {}
        self._faces: Dict[int, Tuple[Tuple[int, ...], ...]] = {}
        self._basis_inverse: Optional[List[List[Fraction]]] = None
        self._index = {v: i for i, v in enumerate(self.vertices)}

    # -- vertex helpers ------------------------------------------------

    def vertex_id(self, p: SimplexPoint) -> int:
        return self._index[p]

    def weight(self, vid: int) -> int:
        w = self._weights.get(vid)
        if w is None:
            w = vertex_weight(self.vertices[vid], self.lattice)
            self._weights[vid] = w
        return w

    def scaled_vertex(self, vid: int) -> Tuple[Fraction, ...]:
        w = self.weight(vid)
        return tuple(w * x for x in self.vertices[vid].as_fractions())

    # -- cell structure --------------------------------------------------

    def is_simplex(self, cell: Cell) -> bool:
        return len(cell) == self.lattice.n

    def cell_center(self, cell: Cell) -> SimplexPoint:
        pts = [self.vertices[i].as_fractions() for i in cell]
        avg = [sum(col, Fraction(0)) / len(pts) for col in zip(*pts)]
        return SimplexPoint.from_fractions(avg)

    def octahedron_opposite_pairs(self, cell: Cell) -> List[Tuple[int, int]]:
        if len(cell) != 6:
            raise ValueError("not an octahedron cell")
        center = self.cell_center(cell).as_fractions()
        double = [2 * x for x in center]
        pairs = []
        seen = set()
        for i in cell:
            if i in seen:
                continue
            vi = self.vertices[i].as_fractions()
            partner = SimplexPoint.from_fractions(
                [d - x for d, x in zip(double, vi)])
            j = self._index.get(partner)
            if j is None or j not in cell.vertex_ids or j == i:
                raise ValueError("cell is not centrally symmetric")
            pairs.append((min(i, j), max(i, j)))
            seen.update((i, j))
        return sorted(pairs)

    def _proper_faces_of(self, cell: Cell, size: int):
        if self.is_simplex(cell):
            yield from combinations(cell.vertex_ids, size)
            return
        opposite = set(self.octahedron_opposite_pairs(cell))
        for sub in combinations(cell.vertex_ids, size):
            ok = True
            for a, b in combinations(sub, 2):
                if (min(a, b), max(a, b)) in opposite:
                    ok = False
                    break
            if ok:
                yield sub

    def faces(self, k: int) -> Tuple[Tuple[int, ...], ...]:
        """All k-dimensional faces, as sorted vertex-id tuples."""
        n = self.lattice.n
        if k < 0 or k > n - 1:
            raise ValueError("face dimension out of range")
        got = self._faces.get(k)
        if got is not None:
            return got
        if k == n - 1:
            out = tuple(sorted(c.vertex_ids for c in self.maximal_cells))
        else:
            acc = set()
            for c in self.maximal_cells:
                if self.is_simplex(c) or k + 1 <= 3:
                    acc.update(self._proper_faces_of(c, k + 1))
            out = tuple(sorted(acc))
        self._faces[k] = out
        return out

    def facets_of_cell(self, cell: Cell) -> List[Tuple[int, ...]]:
        n = self.lattice.n
        if self.is_simplex(cell):
            return list(combinations(cell.vertex_ids, n - 1))
        return list(self._proper_faces_of(cell, 3))

    def interior_walls(self) -> List[Tuple[Tuple[int, ...], Cell, Cell]]:
        """Facets shared by exactly two maximal cells."""
        owners: Dict[Tuple[int, ...], List[Cell]] = {}
        for c in self.maximal_cells:
            for f in self.facets_of_cell(c):
                owners.setdefault(f, []).append(c)
        out = []
        for f, cs in sorted(owners.items()):
            if len(cs) > 2:
                raise AssertionError("facet shared by more than two cells")
            if len(cs) == 2:
                out.append((f, cs[0], cs[1]))
        return out

    # -- certificates ---------------------------------------------------------

    @property
    def euler_number(self) -> int:
        return len(self.maximal_cells)

    def is_crepant(self) -> Tuple[bool, List[int]]:
        bad = [i for i in range(len(self.vertices)) if self.weight(i) != 1]
        return (not bad, bad)

    def _n_basis_inverse(self) -> List[List[Fraction]]:
        if self._basis_inverse is None:
            self._basis_inverse = mat_inverse(
                [list(row) for row in self.lattice.basis()])
        return self._basis_inverse

    def cell_lattice_matrix(self, cell: Cell) -> List[List[int]]:
        """Weighted vertices of a simplex cell in N-basis coordinates
        (always integral)."""
        binv = self._n_basis_inverse()
        n = self.lattice.n
        rows = []
        for vid in cell:
            s = self.scaled_vertex(vid)
            x = [sum(s[i] * binv[i][j] for i in range(n)) for j in range(n)]
            if any(e.denominator != 1 for e in x):
                raise AssertionError("weighted vertex escaped the lattice")
            rows.append([e.numerator for e in x])
        return rows

    def cell_multiplicity(self, cell: Cell) -> int:
        """|det| of the weighted-vertex matrix in N coordinates; 1 means
        the cell is a smooth chart."""
        if not self.is_simplex(cell):
            raise ValueError("multiplicity defined for simplex cells")
        return abs(det(self.cell_lattice_matrix(cell)))

    def is_smooth(self) -> Tuple[bool, List[Cell]]:
        bad = []
        for c in self.maximal_cells:
            if not self.is_simplex(c) or self.cell_multiplicity(c) != 1:
                bad.append(c)
        return (not bad, bad)

    def canonical_divisor(self) -> List[Tuple[int, int]]:
        return [(i, self.weight(i) - 1)
                for i in range(len(self.vertices)) if self.weight(i) > 1]

    def __repr__(self):
        return (f"Decomposition(n={self.lattice.n}, vertices="
                f"{len(self.vertices)}, cells={len(self.maximal_cells)})")


def normalized_volume(decomp: Decomposition) -> Fraction:
    """Sum of cell volumes in the projection dropping the last coordinate
    (all cells lie in the coordinate-sum hyperplane, so this is injective);
    used to certify that the maximal cells tile the simplex."""
    n = decomp.lattice.n

    def simplex_vol(ids: Sequence[int]) -> Fraction:
        pts = [decomp.vertices[i].as_fractions() for i in ids]
        rows = [[pts[i][j] - pts[0][j] for j in range(n - 1)]
                for i in range(1, n)]
        return abs(det(rows))

    total = Fraction(0)
    for c in decomp.maximal_cells:
        if decomp.is_simplex(c):
            total += simplex_vol(c.vertex_ids)
        else:
            pairs = decomp.octahedron_opposite_pairs(c)
            d1, d2 = pairs[0]
            square = [i for i in c if i not in (d1, d2)]
            opp = set(pairs)
            for s, t in combinations(square, 2):
                if (min(s, t), max(s, t)) in opp:
                    continue
                total += simplex_vol([d1, d2, s, t])
    return total
