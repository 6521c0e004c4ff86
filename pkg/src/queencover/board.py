"""Board geometry: cells, covering lines, spaced grids and hull boundaries.

A board has ``m`` columns and ``n`` rows.  Cells carry coordinates
``(x, y)`` with ``x`` in ``[0, m)`` increasing left to right and ``y`` in
``[0, n)`` increasing bottom to top.  Four kinds of lines cover cells:

* rows, fixed ``y``, indices ``[0, n)``;
* columns, fixed ``x``, indices ``[0, m)``;
* sum diagonals, fixed ``x + y``, indices ``[0, m + n - 2]``;
* difference diagonals, fixed ``x - y``, indices ``[-(n - 1), m - 1]``.

Difference diagonals keep their signed index so that grids recentered
around an arbitrary origin need no index shifting.

Everything in this module is immutable and purely functional.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator


class LineKind(Enum):
    """The four kinds of covering lines on a board."""

    ROW = "row"
    COL = "col"
    SUM = "sum"
    DIFF = "diff"


@dataclass(frozen=True, order=True)
class Cell:
    """A board cell in column ``x``, row ``y``."""

    x: int
    y: int


@dataclass(frozen=True)
class BoardDims:
    """Dimensions of a board with ``m`` columns and ``n`` rows."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError(f"board dimensions must be positive, got {self.m}x{self.n}")

    def contains(self, cell: Cell) -> bool:
        return 0 <= cell.x < self.m and 0 <= cell.y < self.n

    def cells(self) -> Iterator[Cell]:
        for x in range(self.m):
            for y in range(self.n):
                yield Cell(x, y)

    def index_range(self, kind: LineKind) -> tuple[int, int]:
        """Inclusive index range for lines of a given kind on this board."""
        if kind is LineKind.ROW:
            return 0, self.n - 1
        if kind is LineKind.COL:
            return 0, self.m - 1
        if kind is LineKind.SUM:
            return 0, self.m + self.n - 2
        return -(self.n - 1), self.m - 1


@dataclass(frozen=True)
class Line:
    """A covering line, identified by kind and integer index."""

    kind: LineKind
    index: int


def covers(line: Line, cell: Cell) -> bool:
    """True iff ``cell`` lies on ``line``."""
    if line.kind is LineKind.ROW:
        return cell.y == line.index
    if line.kind is LineKind.COL:
        return cell.x == line.index
    if line.kind is LineKind.SUM:
        return cell.x + cell.y == line.index
    return cell.x - cell.y == line.index


def line_cells(dims: BoardDims, line: Line) -> list[Cell]:
    """All on-board cells of ``line``, sorted by x (columns sort by y).

    Raises ``ValueError`` when the line index is out of range for ``dims``.
    """
    lo, hi = dims.index_range(line.kind)
    if not lo <= line.index <= hi:
        raise ValueError(
            f"{line.kind.value} index {line.index} out of range "
            f"[{lo}, {hi}] on a {dims.m}x{dims.n} board"
        )
    if line.kind is LineKind.ROW:
        return [Cell(x, line.index) for x in range(dims.m)]
    if line.kind is LineKind.COL:
        return [Cell(line.index, y) for y in range(dims.n)]
    if line.kind is LineKind.SUM:
        s = line.index
        lo_x = max(0, s - dims.n + 1)
        hi_x = min(dims.m - 1, s)
        return [Cell(x, s - x) for x in range(lo_x, hi_x + 1)]
    d = line.index
    lo_x = max(0, d)
    hi_x = min(dims.m - 1, d + dims.n - 1)
    return [Cell(x, x - d) for x in range(lo_x, hi_x + 1)]


def _validated_coords(name: str, coords: Iterable[int]) -> tuple[int, ...]:
    out = tuple(int(c) for c in coords)
    if not out:
        raise ValueError(f"{name} coordinates must be non-empty")
    for lo, hi in zip(out, out[1:]):
        if lo >= hi:
            raise ValueError(f"{name} coordinates must be strictly increasing, got {out}")
    return out


@dataclass(frozen=True)
class SpacedGrid:
    """The Cartesian product of a set of column and row coordinates.

    Coordinates are arbitrary integers (negative values are fine), kept
    strictly increasing.  A consecutive grid with coordinates
    ``0..m-1 x 0..n-1`` is an ordinary board.
    """

    col_coords: tuple[int, ...]
    row_coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "col_coords", _validated_coords("column", self.col_coords))
        object.__setattr__(self, "row_coords", _validated_coords("row", self.row_coords))

    @classmethod
    def board(cls, m: int, n: int) -> "SpacedGrid":
        """The consecutive grid of a full m x n board."""
        return cls(tuple(range(m)), tuple(range(n)))

    @property
    def width(self) -> int:
        return len(self.col_coords)

    @property
    def height(self) -> int:
        return len(self.row_coords)

    def cells(self) -> Iterator[Cell]:
        for cx in self.col_coords:
            for ry in self.row_coords:
                yield Cell(cx, ry)

    def sum_values(self) -> set[int]:
        """Sum-diagonal indices attained by at least one grid cell."""
        return {cx + ry for cx in self.col_coords for ry in self.row_coords}

    def diff_values(self) -> set[int]:
        """Difference-diagonal indices attained by at least one grid cell."""
        return {cx - ry for cx in self.col_coords for ry in self.row_coords}


def uncovered_grid(dims: BoardDims, rows: Iterable[int], cols: Iterable[int]) -> SpacedGrid:
    """Grid of cells left uncovered after choosing ``rows`` and ``cols``.

    Raises ``ValueError`` when an index is out of range or when every row
    (or column) was chosen, which would leave an empty grid.
    """
    row_set = set(rows)
    col_set = set(cols)
    for r in row_set:
        if not 0 <= r < dims.n:
            raise ValueError(f"row {r} out of range on a {dims.m}x{dims.n} board")
    for c in col_set:
        if not 0 <= c < dims.m:
            raise ValueError(f"column {c} out of range on a {dims.m}x{dims.n} board")
    rest_cols = tuple(x for x in range(dims.m) if x not in col_set)
    rest_rows = tuple(y for y in range(dims.n) if y not in row_set)
    if not rest_cols or not rest_rows:
        raise ValueError("choosing every row or every column leaves an empty grid")
    return SpacedGrid(rest_cols, rest_rows)


def hull_boundary(grid: SpacedGrid) -> set[Cell]:
    """Grid cells touching the boundary of the grid's convex hull.

    These are the cells in an extremal column or an extremal row.  An
    ``a x b`` grid with a, b >= 2 has exactly ``2a + 2b - 4`` of them; a
    single-row or single-column grid contributes all of its cells.  Any
    one diagonal meets this set in at most two cells, which is what makes
    the set useful for counting arguments and search pruning.
    """
    lo_c, hi_c = grid.col_coords[0], grid.col_coords[-1]
    lo_r, hi_r = grid.row_coords[0], grid.row_coords[-1]
    out: set[Cell] = set()
    for cx in grid.col_coords:
        out.add(Cell(cx, lo_r))
        out.add(Cell(cx, hi_r))
    for ry in grid.row_coords:
        out.add(Cell(lo_c, ry))
        out.add(Cell(hi_c, ry))
    return out


def _validated_lines(kind: str, values: Iterable[int], lo: int, hi: int) -> frozenset[int]:
    out = frozenset(int(v) for v in values)
    for v in out:
        if not lo <= v <= hi:
            raise ValueError(f"{kind} index {v} out of range [{lo}, {hi}]")
    return out


@dataclass(frozen=True)
class RelaxedCover:
    """Four sets of line indices meant to jointly cover an m x n board.

    The cover size is the largest of the four cardinalities: a cover of
    size p spends at most p lines of every kind.
    """

    dims: BoardDims
    rows: frozenset[int]
    cols: frozenset[int]
    sums: frozenset[int]
    diffs: frozenset[int]

    def __post_init__(self) -> None:
        d = self.dims
        object.__setattr__(self, "rows", _validated_lines("row", self.rows, 0, d.n - 1))
        object.__setattr__(self, "cols", _validated_lines("column", self.cols, 0, d.m - 1))
        object.__setattr__(self, "sums", _validated_lines("sum", self.sums, 0, d.m + d.n - 2))
        object.__setattr__(self, "diffs", _validated_lines("diff", self.diffs, -(d.n - 1), d.m - 1))

    @property
    def size(self) -> int:
        return max(len(self.rows), len(self.cols), len(self.sums), len(self.diffs))

    def covers_cell(self, x: int, y: int) -> bool:
        return y in self.rows or x in self.cols or x + y in self.sums or x - y in self.diffs


@dataclass(frozen=True)
class QueenPlacement:
    """A set of queen-occupied cells on an m x n board."""

    dims: BoardDims
    queens: frozenset[Cell]

    def __post_init__(self) -> None:
        queens = frozenset(self.queens)
        for q in queens:
            if not self.dims.contains(q):
                raise ValueError(f"queen {q} is off the {self.dims.m}x{self.dims.n} board")
        object.__setattr__(self, "queens", queens)

    def __len__(self) -> int:
        return len(self.queens)
