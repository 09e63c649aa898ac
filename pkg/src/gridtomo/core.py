"""Fundamental types: grid, lattice directions, images, and exact values.

Conventions (fixed across the whole package and all file formats):
x runs rightward (columns p, 0 <= p < m), y runs downward (rows q,
0 <= q < n), origin at the upper-left corner.  A direction is a coprime
integer pair (a, b), identified with (-a, -b); the lattice line through
offset c is a*y = b*x + c, so the offset of the line through (p, q) is
c = a*q - b*p.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from .errors import (
    DuplicateDirectionError,
    EmptyDirectionSetError,
    NonPrimitiveDirectionError,
    PointOutOfGridError,
    ZeroDirectionError,
)

#: Image values only need to form an abelian group under +/-.  Exact mode
#: uses Fraction (the default everywhere correctness matters); float is
#: provided for benchmarks only.
Value = Union[Fraction, int, float]


def canonical_pair(a: int, b: int) -> Tuple[int, int]:
    """Canonical representative of {(a,b), (-a,-b)}: a > 0, or (a,b) == (0,1)."""
    if a < 0 or (a == 0 and b < 0):
        return -a, -b
    return a, b


@dataclass(frozen=True)
class Grid:
    """An m x n rectangle of lattice points {(p,q) : 0 <= p < m, 0 <= q < n}."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"grid dimensions must be positive, got {self.m}x{self.n}")

    @property
    def area(self) -> int:
        return self.m * self.n

    def contains(self, p: int, q: int) -> bool:
        return 0 <= p < self.m and 0 <= q < self.n

    def index(self, p: int, q: int) -> int:
        """Row-major flat index of (p, q)."""
        if not self.contains(p, q):
            raise PointOutOfGridError(p, q, self)
        return q * self.m + p

    def points(self) -> Iterator[Tuple[int, int]]:
        """All grid points in row-major order (row q outer, column p inner)."""
        for q in range(self.n):
            for p in range(self.m):
                yield p, q


@dataclass(frozen=True)
class Direction:
    """A primitive lattice direction in canonical form."""

    a: int
    b: int

    def __post_init__(self):
        a, b = self.a, self.b
        if a == 0 and b == 0:
            raise ZeroDirectionError("(0, 0) is not a direction")
        a, b = canonical_pair(a, b)
        if gcd(abs(a), abs(b)) != 1:
            raise NonPrimitiveDirectionError((self.a, self.b))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def swapped(self) -> "Direction":
        """The direction after interchanging the two grid axes."""
        return Direction(self.b, self.a)

    def offset(self, p: int, q: int) -> int:
        """Offset c of the line a*y = b*x + c through (p, q)."""
        return self.a * q - self.b * p

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


HORIZONTAL = Direction(1, 0)
VERTICAL = Direction(0, 1)


def _slope_key(pair: Tuple[int, int]) -> Fraction:
    # b/a as an exact rational; a > 0 for every stored diagonal pair.
    a, b = pair
    return Fraction(b, a)


@dataclass(frozen=True)
class DirectionSet:
    """A validated, canonically ordered set of primitive directions.

    ``diag_neg`` holds pairs (a, b) with a, b > 0 standing for directions
    (a, -b), sorted by b/a strictly ascending; ``diag_pos`` holds pairs for
    directions (a, b), sorted by b/a strictly descending.  The axis
    directions, when present, are kept as flags.
    """

    diag_neg: Tuple[Tuple[int, int], ...]
    diag_pos: Tuple[Tuple[int, int], ...]
    has_horizontal: bool = False
    has_vertical: bool = False

    def __post_init__(self):
        for a, b in self.diag_neg + self.diag_pos:
            if a <= 0 or b <= 0:
                raise ValueError("diagonal pairs must have positive components")
        neg_keys = [_slope_key(p) for p in self.diag_neg]
        pos_keys = [_slope_key(p) for p in self.diag_pos]
        if any(x >= y for x, y in zip(neg_keys, neg_keys[1:])):
            raise ValueError("diag_neg must be strictly ascending in b/a")
        if any(x <= y for x, y in zip(pos_keys, pos_keys[1:])):
            raise ValueError("diag_pos must be strictly descending in b/a")

    @property
    def k(self) -> int:
        return len(self.diag_neg)

    @property
    def d(self) -> int:
        return len(self.diag_neg) + len(self.diag_pos)

    @property
    def M(self) -> int:
        return sum(a for a, _ in self.diag_neg + self.diag_pos) + (
            1 if self.has_horizontal else 0
        )

    @property
    def N(self) -> int:
        return sum(b for _, b in self.diag_neg + self.diag_pos) + (
            1 if self.has_vertical else 0
        )

    @property
    def directions(self) -> Tuple[Direction, ...]:
        """All directions in canonical order: diag_neg, diag_pos, axes."""
        dirs = [Direction(a, -b) for a, b in self.diag_neg]
        dirs += [Direction(a, b) for a, b in self.diag_pos]
        if self.has_horizontal:
            dirs.append(HORIZONTAL)
        if self.has_vertical:
            dirs.append(VERTICAL)
        return tuple(dirs)

    def raw_pairs(self) -> List[Tuple[int, int]]:
        """The set as plain (a, b) pairs, suitable to re-validate."""
        return [(d.a, d.b) for d in self.directions]

    def __contains__(self, direction: Direction) -> bool:
        return direction in self.directions

    def swapped(self) -> "DirectionSet":
        """The direction set of the axis-interchanged problem."""
        return validate_directions([(d.b, d.a) for d in self.directions])


def validate_directions(raw: Iterable[Sequence[int]]) -> DirectionSet:
    """Canonicalize, validate and order a collection of integer pairs.

    Rejects an empty collection, the zero vector, non-primitive pairs, and
    duplicates arising after the identification of (a, b) with (-a, -b).
    """
    raw = list(raw)
    if not raw:
        raise EmptyDirectionSetError("no directions given")
    seen = set()
    neg, pos = [], []
    has_h = has_v = False
    for entry in raw:
        a, b = int(entry[0]), int(entry[1])
        if a == 0 and b == 0:
            raise ZeroDirectionError("(0, 0) is not a direction")
        if gcd(abs(a), abs(b)) != 1:
            raise NonPrimitiveDirectionError((a, b))
        a, b = canonical_pair(a, b)
        if (a, b) in seen:
            raise DuplicateDirectionError((a, b))
        seen.add((a, b))
        if (a, b) == (1, 0):
            has_h = True
        elif (a, b) == (0, 1):
            has_v = True
        elif b < 0:
            neg.append((a, -b))
        else:
            pos.append((a, b))
    neg.sort(key=_slope_key)
    pos.sort(key=_slope_key, reverse=True)
    return DirectionSet(tuple(neg), tuple(pos), has_h, has_v)


def is_valid(grid: Grid, ds: DirectionSet) -> bool:
    """True iff nontrivial ghosts exist: M < m and N < n."""
    return ds.M < grid.m and ds.N < grid.n


def zero_like(value: Value) -> Value:
    """The additive identity of the group the value lives in."""
    return type(value)()


@dataclass
class GridImage:
    """A dense function on a grid, stored row-major."""

    grid: Grid
    values: List[Value]

    def __post_init__(self):
        if len(self.values) != self.grid.area:
            raise ValueError(
                f"expected {self.grid.area} values, got {len(self.values)}"
            )

    @classmethod
    def filled(cls, grid: Grid, value: Value) -> "GridImage":
        return cls(grid, [value] * grid.area)

    @classmethod
    def zeros(cls, grid: Grid) -> "GridImage":
        return cls.filled(grid, Fraction(0))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Value]]) -> "GridImage":
        n = len(rows)
        if n == 0:
            raise ValueError("image needs at least one row")
        m = len(rows[0])
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        grid = Grid(m, n)
        flat: List[Value] = []
        for row in rows:
            flat.extend(row)
        return cls(grid, flat)

    def get(self, p: int, q: int) -> Value:
        return self.values[self.grid.index(p, q)]

    def set(self, p: int, q: int, v: Value) -> None:
        self.values[self.grid.index(p, q)] = v

    def rows(self) -> List[List[Value]]:
        m = self.grid.m
        return [self.values[q * m : (q + 1) * m] for q in range(self.grid.n)]

    def total(self) -> Value:
        total = zero_like(self.values[0])
        for v in self.values:
            total = total + v
        return total

    def copy(self) -> "GridImage":
        return GridImage(self.grid, list(self.values))

    def transposed(self) -> "GridImage":
        """The image with the two grid axes interchanged."""
        tgrid = Grid(self.grid.n, self.grid.m)
        out = [None] * self.grid.area
        m = self.grid.m
        for q in range(self.grid.n):
            base = q * m
            for p in range(m):
                out[p * tgrid.m + q] = self.values[base + p]
        return GridImage(tgrid, out)

    def __add__(self, other: "GridImage") -> "GridImage":
        if self.grid != other.grid:
            raise ValueError("grid mismatch")
        return GridImage(self.grid, [x + y for x, y in zip(self.values, other.values)])

    def __sub__(self, other: "GridImage") -> "GridImage":
        if self.grid != other.grid:
            raise ValueError("grid mismatch")
        return GridImage(self.grid, [x - y for x, y in zip(self.values, other.values)])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GridImage)
            and self.grid == other.grid
            and self.values == other.values
        )
