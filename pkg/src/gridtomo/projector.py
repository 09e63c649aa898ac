"""Forward projection: dense, O(1)-indexable line-sum tables.

For a direction (a, b) the line through (p, q) has offset c = a*q - b*p.
Offsets are stored in one contiguous array per direction covering every c
for which the line a*y = b*x + c meets the grid's bounding box, so lookup
and point subtraction are constant-time.  The table is the single mutable
structure of the reconstruction pipeline.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .core import Direction, DirectionSet, Grid, GridImage, Value, zero_like
from .errors import DirectionNotInSetError, PointOutOfGridError


def offset_bounds(grid: Grid, d: Direction) -> Tuple[int, int]:
    """Extrema of c = a*q - b*p over the grid corners (inclusive)."""
    c_min = -max(d.b, 0) * (grid.m - 1)
    c_max = d.a * (grid.n - 1) + max(-d.b, 0) * (grid.m - 1)
    return c_min, c_max


@dataclass
class LineSumTable:
    """Per-direction line sums of some grid function, indexed by offset."""

    grid: Grid
    ds: DirectionSet
    zero: Value
    arrays: Dict[Direction, List[Value]]
    c_mins: Dict[Direction, int]

    @classmethod
    def zeros(cls, grid: Grid, ds: DirectionSet, zero: Value) -> "LineSumTable":
        arrays, c_mins = {}, {}
        for d in ds.directions:
            c_min, c_max = offset_bounds(grid, d)
            arrays[d] = [zero] * (c_max - c_min + 1)
            c_mins[d] = c_min
        return cls(grid, ds, zero, arrays, c_mins)

    def copy(self) -> "LineSumTable":
        return LineSumTable(
            self.grid,
            self.ds,
            self.zero,
            {d: list(a) for d, a in self.arrays.items()},
            dict(self.c_mins),
        )

    def lookup(self, d: Direction, p: int, q: int) -> Value:
        """Current sum of the line of direction d through (p, q)."""
        if d not in self.arrays:
            raise DirectionNotInSetError(d)
        if not self.grid.contains(p, q):
            raise PointOutOfGridError(p, q, self.grid)
        return self.arrays[d][d.offset(p, q) - self.c_mins[d]]

    def subtract_point(self, p: int, q: int, v: Value) -> None:
        """Subtract v from the residual of every line through (p, q)."""
        if not self.grid.contains(p, q):
            raise PointOutOfGridError(p, q, self.grid)
        for d, arr in self.arrays.items():
            i = d.a * q - d.b * p - self.c_mins[d]
            arr[i] = arr[i] - v

    def line_sums(self, d: Direction) -> List[Value]:
        """Dense sums for direction d, ascending in c from c_min."""
        if d not in self.arrays:
            raise DirectionNotInSetError(d)
        return list(self.arrays[d])

    def all_zero(self) -> bool:
        zero = self.zero
        return all(v == zero for arr in self.arrays.values() for v in arr)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LineSumTable)
            and self.grid == other.grid
            and self.c_mins == other.c_mins
            and self.arrays == other.arrays
        )

    def __add__(self, other: "LineSumTable") -> "LineSumTable":
        if self.grid != other.grid or self.c_mins != other.c_mins:
            raise ValueError("table layout mismatch")
        out = self.copy()
        for d, arr in out.arrays.items():
            o = other.arrays[d]
            out.arrays[d] = [x + y for x, y in zip(arr, o)]
        return out


def project(f: GridImage, ds: DirectionSet) -> LineSumTable:
    """All line sums of f in every direction of the set."""
    zero = zero_like(f.values[0])
    table = LineSumTable.zeros(f.grid, ds, zero)
    m, n = f.grid.m, f.grid.n
    values = f.values
    for d in ds.directions:
        arr = table.arrays[d]
        c_min = table.c_mins[d]
        a, b = d.a, d.b
        i = 0
        for q in range(n):
            base = a * q - c_min
            for p in range(m):
                j = base - b * p
                arr[j] = arr[j] + values[i]
                i += 1
    return table
