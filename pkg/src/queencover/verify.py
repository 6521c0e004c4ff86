"""Cover and placement verification, and the tight-solution structure report.

The coverage checks are deliberately direct: a cell is covered iff one of
its four lines was chosen.  They vectorize over the whole board so that
verifying thousands of constructed covers stays cheap; tests cross-check
the vectorized path against a per-cell scan.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .board import BoardDims, Cell, QueenPlacement, RelaxedCover, SpacedGrid
from .constructions import DiagonalCover


def _covered_board(cover: RelaxedCover) -> np.ndarray:
    m, n = cover.dims.m, cover.dims.n
    x = np.arange(m).reshape(m, 1)
    y = np.arange(n).reshape(1, n)
    covered = np.isin(y, list(cover.rows)) | np.isin(x, list(cover.cols))
    covered = covered | np.isin(x + y, list(cover.sums))
    covered = covered | np.isin(x - y, list(cover.diffs))
    return covered


def is_relaxed_cover(cover: RelaxedCover) -> bool:
    """True iff every board cell lies on at least one chosen line."""
    return bool(_covered_board(cover).all())


def first_uncovered_cell(cover: RelaxedCover) -> Cell | None:
    """The uncovered cell with smallest (x, y), or None for a valid cover."""
    covered = _covered_board(cover)
    if covered.all():
        return None
    xs, ys = np.nonzero(~covered)
    return Cell(int(xs[0]), int(ys[0]))


def _covered_grid(grid: SpacedGrid, dc: DiagonalCover) -> np.ndarray:
    cx = np.asarray(grid.col_coords).reshape(-1, 1)
    ry = np.asarray(grid.row_coords).reshape(1, -1)
    return np.isin(cx + ry, list(dc.sums)) | np.isin(cx - ry, list(dc.diffs))


def is_diagonal_cover(grid: SpacedGrid, dc: DiagonalCover) -> bool:
    """True iff every grid cell lies on a chosen sum or difference diagonal."""
    return bool(_covered_grid(grid, dc).all())


def first_uncovered_grid_cell(grid: SpacedGrid, dc: DiagonalCover) -> Cell | None:
    covered = _covered_grid(grid, dc)
    if covered.all():
        return None
    ci, ri = np.nonzero(~covered)
    return Cell(int(grid.col_coords[ci[0]]), int(grid.row_coords[ri[0]]))


def is_perfect_cover(grid: SpacedGrid, dc: DiagonalCover) -> bool:
    """True iff ``dc`` covers the grid with exactly (a + b - 2) / 2
    diagonals of each kind.  Grids with a + b odd admit no perfect cover,
    so the count can never match and the answer is False.
    """
    a, b = grid.width, grid.height
    if (a + b) % 2 != 0:
        return False
    target = (a + b - 2) // 2
    if len(dc.sums) != target or len(dc.diffs) != target:
        return False
    return is_diagonal_cover(grid, dc)


def is_dominating_placement(placement: QueenPlacement) -> bool:
    """True iff every cell is a queen or shares a row, column or diagonal
    with one."""
    rows = {q.y for q in placement.queens}
    cols = {q.x for q in placement.queens}
    sums = {q.x + q.y for q in placement.queens}
    diffs = {q.x - q.y for q in placement.queens}
    for x in range(placement.dims.m):
        for y in range(placement.dims.n):
            if y in rows or x in cols or x + y in sums or x - y in diffs:
                continue
            return False
    return True


@dataclass
class TightReport:
    """Structure report for a tight cover of a (4k+3)-square board.

    Five properties of the sub-board U bounded by the extreme unchosen
    rows and columns, each with a flag; every failed flag appends a
    human-readable entry to ``details``, so all flags hold iff ``details``
    is empty.
    """

    distinct_lines: bool
    u_is_square: bool
    edge_singly_covered: bool
    diagonals_hit_edge_twice: bool
    corner_antidiagonal_chosen_and_balanced: bool
    details: list[str] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return not self.details


def tight_analysis(cover: RelaxedCover) -> TightReport:
    """Evaluate the five structure properties of a tight cover.

    Requires an n x n board with n == 3 (mod 4) and cover size
    (n - 1) / 2; violating those raises ``ValueError``.  Coverage itself
    is not enforced: an invalid cover simply fails the exactly-once edge
    property, which is what mutation tests rely on.
    """
    m, n = cover.dims.m, cover.dims.n
    if m != n:
        raise ValueError(f"tight analysis requires a square board, got {m}x{n}")
    if n % 4 != 3:
        raise ValueError(f"tight analysis requires n == 3 (mod 4), got n={n}")
    p = (n - 1) // 2
    if cover.size != p:
        raise ValueError(f"tight analysis requires cover size {p}, got {cover.size}")
    k = (p - 1) // 2

    details: list[str] = []

    distinct = all(len(s) == p for s in (cover.rows, cover.cols, cover.sums, cover.diffs))
    if not distinct:
        counts = (len(cover.rows), len(cover.cols), len(cover.sums), len(cover.diffs))
        details.append(f"line multiplicities (rows, cols, sums, diffs) = {counts}, expected all {p}")

    open_rows = sorted(set(range(n)) - cover.rows)
    open_cols = sorted(set(range(n)) - cover.cols)
    b, t = open_rows[0], open_rows[-1]
    l, r = open_cols[0], open_cols[-1]

    square = (r - l) == (t - b)
    if not square:
        details.append(f"U spans columns [{l}, {r}] but rows [{b}, {t}]; not square")

    edge = [
        Cell(x, y)
        for x in range(l, r + 1)
        for y in range(b, t + 1)
        if x in (l, r) or y in (b, t)
    ]

    singly = True
    for c in edge:
        hits = (
            (c.y in cover.rows)
            + (c.x in cover.cols)
            + (c.x + c.y in cover.sums)
            + (c.x - c.y in cover.diffs)
        )
        if hits != 1:
            singly = False
            details.append(f"edge cell ({c.x},{c.y}) of U covered {hits} times, expected once")
            break

    twice = True
    for s in sorted(cover.sums):
        hits = sum(1 for c in edge if c.x + c.y == s)
        if hits != 2:
            twice = False
            details.append(f"sum diagonal {s} meets U's edge in {hits} cells, expected 2")
            break
    if twice:
        for d in sorted(cover.diffs):
            hits = sum(1 for c in edge if c.x - c.y == d)
            if hits != 2:
                twice = False
                details.append(f"diff diagonal {d} meets U's edge in {hits} cells, expected 2")
                break

    balanced = False
    if square:
        s_star = l + t  # sum diagonal through U's top-left and bottom-right corners
        d_star = l - b  # difference diagonal through U's bottom-left and top-right corners
        sum_above = sum(1 for s in cover.sums if s > s_star)
        sum_below = sum(1 for s in cover.sums if s < s_star)
        diff_above = sum(1 for d in cover.diffs if d > d_star)
        diff_below = sum(1 for d in cover.diffs if d < d_star)
        balanced = (
            s_star in cover.sums
            and d_star in cover.diffs
            and sum_above == sum_below == k
            and diff_above == diff_below == k
        )
        if not balanced:
            details.append(
                f"corner diagonals (sum {s_star}, diff {d_star}): chosen="
                f"({s_star in cover.sums}, {d_star in cover.diffs}), "
                f"sum split {sum_above}/{sum_below}, diff split {diff_above}/{diff_below}, "
                f"expected {k}/{k}"
            )
    else:
        details.append("corner diagonals undefined because U is not square")

    return TightReport(
        distinct_lines=distinct,
        u_is_square=square,
        edge_singly_covered=singly,
        diagonals_hit_edge_twice=twice,
        corner_antidiagonal_chosen_and_balanced=balanced,
        details=details,
    )
