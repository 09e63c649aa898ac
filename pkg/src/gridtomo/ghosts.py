"""Switching polynomials (ghosts): construction, domains, and coefficients.

A grid function corresponds to the polynomial sum f(i,j) x^i y^j.  Every
direction contributes a two-term factor; the product of all factors is the
minimal switching polynomial, and every function with vanishing line sums
is a unique coefficient combination of its grid shifts.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from .core import Direction, DirectionSet, Grid, GridImage, Value, zero_like
from .errors import InconsistentLineSumsError, PointOutOfGridError
from .projector import project

Point = Tuple[int, int]


@dataclass(frozen=True)
class GhostPolynomial:
    """Sparse integer polynomial in x (column) and y (row) exponents."""

    coeffs: Tuple[Tuple[Point, int], ...]

    @classmethod
    def from_dict(cls, d: Dict[Point, int]) -> "GhostPolynomial":
        items = tuple(sorted((pt, c) for pt, c in d.items() if c != 0))
        return cls(items)

    def as_dict(self) -> Dict[Point, int]:
        return dict(self.coeffs)

    def support(self) -> List[Point]:
        return [pt for pt, _ in self.coeffs]

    @property
    def x_degree(self) -> int:
        return max(i for (i, _), _ in self.coeffs) if self.coeffs else 0

    @property
    def y_degree(self) -> int:
        return max(j for (_, j), _ in self.coeffs) if self.coeffs else 0

    def coefficient(self, i: int, j: int) -> int:
        for pt, c in self.coeffs:
            if pt == (i, j):
                return c
        return 0

    def __mul__(self, other: "GhostPolynomial") -> "GhostPolynomial":
        acc: Dict[Point, int] = {}
        for (i1, j1), c1 in self.coeffs:
            for (i2, j2), c2 in other.coeffs:
                key = (i1 + i2, j1 + j2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return GhostPolynomial.from_dict(acc)

    def shifted(self, di: int, dj: int) -> "GhostPolynomial":
        return GhostPolynomial(tuple(((i + di, j + dj), c) for (i, j), c in self.coeffs))

    def to_image(self, grid: Grid, scale: Value = 1) -> GridImage:
        """Embed the polynomial as a grid function (exponent = coordinate)."""
        img = GridImage.filled(grid, Fraction(0) if scale == 1 else zero_like(scale))
        for (i, j), c in self.coeffs:
            if not grid.contains(i, j):
                raise PointOutOfGridError(i, j, grid)
            img.set(i, j, c * scale)
        return img


def factor_polynomial(d: Direction) -> GhostPolynomial:
    """The two-term factor of a single direction.

    (a, b) with a,b > 0 gives x^a y^b - 1; (a, b) with b < 0 gives
    x^a - y^(-b); the axes give x - 1 and y - 1.
    """
    a, b = d.a, d.b
    if (a, b) == (1, 0):
        return GhostPolynomial.from_dict({(1, 0): 1, (0, 0): -1})
    if (a, b) == (0, 1):
        return GhostPolynomial.from_dict({(0, 1): 1, (0, 0): -1})
    if b > 0:
        return GhostPolynomial.from_dict({(a, b): 1, (0, 0): -1})
    return GhostPolynomial.from_dict({(a, 0): 1, (0, -b): -1})


def primitive_ghost(ds: DirectionSet) -> GhostPolynomial:
    """Product of all direction factors: the minimal-degree ghost.

    Its support fits in an (M+1) x (N+1) box and its lexicographically
    lowest term sits at (0, N_n) where N_n sums the |b| of the
    negative-slope directions.
    """
    poly = GhostPolynomial.from_dict({(0, 0): 1})
    for d in ds.directions:
        poly = poly * factor_polynomial(d)
    assert poly.x_degree <= ds.M and poly.y_degree <= ds.N
    return poly


def negative_row_span(ds: DirectionSet) -> int:
    """N_n: total |b| over negative-slope directions (the free-block row offset)."""
    return sum(b for _, b in ds.diag_neg)


@dataclass
class SwitchingDomainMap:
    """Union of all shifted primitive-ghost supports, plus the free block."""

    grid: Grid
    mask: List[bool]
    free_cols: int
    free_rows: int
    q_offset: int

    def contains(self, p: int, q: int) -> bool:
        return self.mask[self.grid.index(p, q)]

    def in_free_block(self, p: int, q: int) -> bool:
        return 0 <= p < self.free_cols and self.q_offset <= q < self.q_offset + self.free_rows

    def free_points(self) -> Iterator[Point]:
        for p in range(self.free_cols):
            for q in range(self.q_offset, self.q_offset + self.free_rows):
                yield p, q

    @property
    def free_count(self) -> int:
        return self.free_cols * self.free_rows


def switching_domain_map(grid: Grid, ds: DirectionSet) -> SwitchingDomainMap:
    """Mark every point lying in some switching domain.

    In the nonvalid case the solution is unique, so the mask is all false
    and the free block is empty.
    """
    mask = [False] * grid.area
    if ds.M >= grid.m or ds.N >= grid.n:
        return SwitchingDomainMap(grid, mask, 0, 0, 0)
    ghost = primitive_ghost(ds)
    shifts_x = grid.m - ds.M
    shifts_y = grid.n - ds.N
    for (i, j), _ in ghost.coeffs:
        for di in range(shifts_x):
            p = i + di
            for dj in range(shifts_y):
                mask[(j + dj) * grid.m + p] = True
    q_offset = negative_row_span(ds)
    smap = SwitchingDomainMap(grid, mask, shifts_x, shifts_y, q_offset)
    for p, q in smap.free_points():
        assert smap.contains(p, q), "free block must lie inside the switching domains"
    return smap


def recover_coefficients(
    g: GridImage, f_ref: GridImage, ds: DirectionSet
) -> Dict[Point, Value]:
    """Coefficients c[i,j] with g = f_ref + sum c[i,j] * shifted ghost (i,j).

    Requires g and f_ref to share every line sum.  Sweeps the free block in
    lexicographic point order; at each free point exactly one new
    coefficient contributes, through the ghost's lowest term (+-1), so each
    step is a single subtraction.
    """
    if g.grid != f_ref.grid:
        raise ValueError("grid mismatch")
    diff = g - f_ref
    if not project(diff, ds).all_zero():
        raise InconsistentLineSumsError("images differ in some line sum")
    grid = g.grid
    coeffs: Dict[Point, Value] = {}
    if ds.M >= grid.m or ds.N >= grid.n:
        return coeffs
    ghost = primitive_ghost(ds)
    q_offset = negative_row_span(ds)
    gamma = ghost.coefficient(0, q_offset)
    assert gamma in (1, -1), "lowest ghost term must be a unit"
    work = diff.copy()
    for i in range(grid.m - ds.M):
        for j in range(grid.n - ds.N):
            v = work.get(i, q_offset + j)
            c = v if gamma == 1 else -v
            coeffs[(i, j)] = c
            if c != 0:
                for (gi, gj), gc in ghost.coeffs:
                    p, q = i + gi, j + gj
                    work.set(p, q, work.get(p, q) - gc * c)
    zero = zero_like(diff.values[0])
    assert all(v == zero for v in work.values), "ghost decomposition did not close"
    return coeffs
