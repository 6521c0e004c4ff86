"""Exhaustive desk-scale solvers: the independent oracles for every cover
number in the package.

Design notes
------------
* Cell sets are bitmasks sized to the board or grid, so the hot loop is
  integer AND/OR plus ``int.bit_count``.
* The relaxed-cover search picks row and column subsets first and then
  solves the residual diagonal-cover subproblem.  Branching inside the
  subproblem prefers uncovered hull-boundary cells: a diagonal meets the
  hull boundary of a grid in at most two cells, so whenever more than
  ``2 * budget`` boundary cells remain uncovered the branch is dead.
  That single counting prune is what keeps full refutation levels cheap.
* Every cell lies on exactly one sum and one difference diagonal, so the
  subproblem branches two ways per cell; the sibling branch bans the
  diagonal explored first, which removes duplicate work without losing
  completeness.
* Level loops start at one and climb; cheap whole-level feasibility checks
  (boundary counting again) dispose of levels far below the optimum in
  constant time.  No closed-form value from ``bounds`` seeds the relaxed
  searches, so oracle-versus-formula tests compare independent paths.
  The queen-placement search is the one exception: it starts at the
  relaxed cover number, which is a valid lower bound because dropping the
  placement constraint can only make covering easier.
* Searches are deterministic: fixed enumeration orders, fixed branching,
  node-count cutoffs rather than wall clocks.  The optional symmetry
  reduction only caches refuted row/column classes, so value, witness and
  status are identical with it on or off.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, count
from typing import Iterator, Optional, Union

from .board import BoardDims, Cell, QueenPlacement, RelaxedCover, SpacedGrid
from .bounds import gamma_lower
from .constructions import DiagonalCover


class SearchStatus(Enum):
    OPTIMAL = "optimal"
    CUTOFF_REACHED = "cutoff-reached"


Witness = Union[RelaxedCover, DiagonalCover, QueenPlacement]


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exhaustive search.

    With status OPTIMAL, ``value`` is the exact optimum and ``witness``
    attains it.  With status CUTOFF_REACHED, ``value`` is the best proven
    lower bound (every smaller objective was fully refuted) and the
    witness is None.
    """

    value: int
    witness: Optional[Witness]
    nodes: int
    status: SearchStatus


class _CutoffReached(Exception):
    pass


class _Budget:
    """Deterministic node counter with an optional hard cutoff."""

    __slots__ = ("nodes", "cutoff")

    def __init__(self, cutoff: Optional[int]):
        if cutoff is not None and cutoff < 1:
            raise ValueError(f"cutoff must be a positive node count, got {cutoff}")
        self.nodes = 0
        self.cutoff = cutoff

    def tick(self) -> None:
        self.nodes += 1
        if self.cutoff is not None and self.nodes > self.cutoff:
            raise _CutoffReached


def _grid_tables(col_coords, row_coords):
    """Bitmask tables for a spaced grid: per-diagonal cell masks, per-cell
    diagonal values, the full mask and the hull-boundary mask."""
    a, b = len(col_coords), len(row_coords)
    sum_masks: dict[int, int] = {}
    diff_masks: dict[int, int] = {}
    cell_sum: list[int] = []
    cell_diff: list[int] = []
    bit = 1
    for i, cx in enumerate(col_coords):
        for j, ry in enumerate(row_coords):
            s, d = cx + ry, cx - ry
            sum_masks[s] = sum_masks.get(s, 0) | bit
            diff_masks[d] = diff_masks.get(d, 0) | bit
            cell_sum.append(s)
            cell_diff.append(d)
            bit <<= 1
    full = (1 << (a * b)) - 1
    k_mask = 0
    for i in range(a):
        for j in range(b):
            if i in (0, a - 1) or j in (0, b - 1):
                k_mask |= 1 << (i * b + j)
    return full, k_mask, sum_masks, diff_masks, cell_sum, cell_diff, min(a, b)


def _solve_grid(col_coords, row_coords, cap_s, cap_d, budget):
    """Cover the grid with at most cap_s sums and cap_d diffs.

    Returns (sums, diffs) lists on success, None if no cover exists within
    the caps.  Complete search; deterministic branch order (sum first).
    """
    full, k_mask, sum_masks, diff_masks, cell_sum, cell_diff, min_dim = _grid_tables(
        col_coords, row_coords
    )
    chosen_s: list[int] = []
    chosen_d: list[int] = []
    banned_s: set[int] = set()
    banned_d: set[int] = set()

    def dfs(covered: int, cs: int, cd: int) -> bool:
        budget.tick()
        rem = full & ~covered
        if not rem:
            return True
        if (k_mask & rem).bit_count() > 2 * (cs + cd):
            return False
        if rem.bit_count() > (cs + cd) * min_dim:
            return False
        t = k_mask & rem
        if not t:
            t = rem
        idx = (t & -t).bit_length() - 1
        sv, dv = cell_sum[idx], cell_diff[idx]
        s_ok = cs > 0 and sv not in banned_s
        d_ok = cd > 0 and dv not in banned_d
        if s_ok:
            chosen_s.append(sv)
            if dfs(covered | sum_masks[sv], cs - 1, cd):
                return True
            chosen_s.pop()
        if d_ok:
            if s_ok:
                banned_s.add(sv)
            chosen_d.append(dv)
            ok = dfs(covered | diff_masks[dv], cs, cd - 1)
            if ok:
                return True
            chosen_d.pop()
            if s_ok:
                banned_s.remove(sv)
        return False

    if dfs(0, cap_s, cap_d):
        return chosen_s, chosen_d
    return None


def _grid_level_infeasible(a: int, b: int, p: int) -> bool:
    """Whole-level counting check for covering an a x b grid with p
    diagonals per kind, independent of the grid coordinates."""
    if min(a, b) >= 2:
        return 2 * (a + b) - 4 > 4 * p
    return a * b > 2 * p


def _min_diagonals(grid: SpacedGrid, cutoff: Optional[int]) -> SearchResult:
    budget = _Budget(cutoff)
    a, b = grid.width, grid.height
    p = 1
    try:
        for p in count(1):
            budget.tick()
            if _grid_level_infeasible(a, b, p):
                continue
            sol = _solve_grid(grid.col_coords, grid.row_coords, p, p, budget)
            if sol is not None:
                witness = DiagonalCover(frozenset(sol[0]), frozenset(sol[1]))
                return SearchResult(p, witness, budget.nodes, SearchStatus.OPTIMAL)
    except _CutoffReached:
        return SearchResult(p, None, budget.nodes, SearchStatus.CUTOFF_REACHED)
    raise AssertionError("unreachable")


def grid_min_diagonals(grid: SpacedGrid, cutoff: Optional[int] = None) -> SearchResult:
    """Least p such that p sum and p difference diagonals cover the grid."""
    return _min_diagonals(grid, cutoff)


def alpha_exact(m: int, n: int, cutoff: Optional[int] = None) -> SearchResult:
    """Exact relaxed bishop cover number of the m x n board, with witness."""
    return _min_diagonals(SpacedGrid.board(m, n), cutoff)


def _canonical_pair(rows, rows_f, cols, cols_f, square: bool):
    cands = [(rows, cols), (rows_f, cols), (rows, cols_f), (rows_f, cols_f)]
    if square:
        cands += [(cols, rows), (cols_f, rows), (cols, rows_f), (cols_f, rows_f)]
    return min(cands)


def _beta_level(m, n, p, budget, symmetry) -> Optional[RelaxedCover]:
    dims = BoardDims(m, n)
    if p >= n:
        return RelaxedCover(dims, frozenset(range(n)), frozenset(), frozenset(), frozenset())
    if p >= m:
        return RelaxedCover(dims, frozenset(), frozenset(range(m)), frozenset(), frozenset())
    a, b = m - p, n - p
    if _grid_level_infeasible(a, b, p):
        return None
    col_variants = []
    for C in combinations(range(m), p):
        chosen = set(C)
        open_cols = tuple(x for x in range(m) if x not in chosen)
        flipped = tuple(sorted(m - 1 - c for c in C))
        col_variants.append((C, open_cols, flipped))
    refuted: set = set()
    square = m == n
    for R in combinations(range(n), p):
        chosen_r = set(R)
        open_rows = tuple(y for y in range(n) if y not in chosen_r)
        r_flipped = tuple(sorted(n - 1 - r for r in R))
        for C, open_cols, c_flipped in col_variants:
            budget.tick()
            if symmetry:
                key = _canonical_pair(R, r_flipped, C, c_flipped, square)
                if key in refuted:
                    continue
            sol = _solve_grid(open_cols, open_rows, p, p, budget)
            if sol is not None:
                return RelaxedCover(
                    dims, frozenset(R), frozenset(C), frozenset(sol[0]), frozenset(sol[1])
                )
            if symmetry:
                refuted.add(key)
    return None


def beta_exact(
    m: int, n: int, cutoff: Optional[int] = None, symmetry: bool = True
) -> SearchResult:
    """Exact relaxed queen cover number of the m x n board, with witness.

    Climbs objective levels from one; every level below the answer is
    fully refuted.  ``symmetry`` enables caching of refuted row/column
    classes under the board's dihedral symmetries; the returned value,
    witness and status do not depend on it.
    """
    budget = _Budget(cutoff)
    p = 1
    try:
        for p in count(1):
            budget.tick()
            witness = _beta_level(m, n, p, budget, symmetry)
            if witness is not None:
                return SearchResult(p, witness, budget.nodes, SearchStatus.OPTIMAL)
    except _CutoffReached:
        return SearchResult(p, None, budget.nodes, SearchStatus.CUTOFF_REACHED)
    raise AssertionError("unreachable")


def _gamma_level(m, n, q, budget) -> Optional[QueenPlacement]:
    n_cells = m * n
    attack = []
    for x in range(m):
        for y in range(n):
            mask = 0
            for xx in range(m):
                for yy in range(n):
                    if xx == x or yy == y or xx + yy == x + y or xx - yy == x - y:
                        mask |= 1 << (xx * n + yy)
            attack.append(mask)
    full = (1 << n_cells) - 1
    cell_bit = [1 << c for c in range(n_cells)]
    max_cover = max(a.bit_count() for a in attack)
    # Branch on hard-to-dominate cells first: fewest attackers, corners up.
    order = sorted(range(n_cells), key=lambda c: (attack[c].bit_count(), c))
    placed: list[int] = []

    def dfs(covered: int, left: int, banned: int) -> bool:
        budget.tick()
        rem = full & ~covered
        if not rem:
            return True
        if left == 0:
            return False
        rem_count = rem.bit_count()
        if rem_count > left * max_cover:
            return False
        for u in order:
            if rem & cell_bit[u]:
                break
        cands = attack[u] & ~banned
        if not cands:
            return False
        ranked = []
        cm = cands
        while cm:
            c = (cm & -cm).bit_length() - 1
            ranked.append(((attack[c] & rem).bit_count(), -c))
            cm &= cm - 1
        ranked.sort(reverse=True)
        if ranked[0][0] + (left - 1) * max_cover < rem_count:
            return False
        local_ban = banned
        for cov, negc in ranked:
            c = -negc
            placed.append(c)
            if dfs(covered | attack[c], left - 1, local_ban):
                return True
            placed.pop()
            local_ban |= cell_bit[c]
        return False

    if dfs(0, q, 0):
        queens = frozenset(Cell(c // n, c % n) for c in placed)
        return QueenPlacement(BoardDims(m, n), queens)
    return None


def gamma_exact(m: int, n: int, cutoff: Optional[int] = None) -> SearchResult:
    """Exact queen domination number of the m x n board, with witness.

    Branch and bound over placements, seeded at the relaxed cover number
    (a sound lower bound: relaxing the placement constraint only helps).
    """
    budget = _Budget(cutoff)
    q = max(1, gamma_lower(m, n))
    try:
        for q in count(q):
            budget.tick()
            witness = _gamma_level(m, n, q, budget)
            if witness is not None:
                return SearchResult(q, witness, budget.nodes, SearchStatus.OPTIMAL)
    except _CutoffReached:
        return SearchResult(q, None, budget.nodes, SearchStatus.CUTOFF_REACHED)
    raise AssertionError("unreachable")


def enumerate_perfect_covers(grid: SpacedGrid) -> list[DiagonalCover]:
    """All perfect diagonal covers of the grid, in deterministic order.

    Candidate diagonals are the ones meeting at least one grid cell (a
    diagonal missing the grid could only pad the count, and padded sets
    are not covers of anything).  Grids with an odd total of rows plus
    columns admit no perfect cover and yield the empty list.
    """
    a, b = grid.width, grid.height
    if (a + b) % 2 != 0:
        return []
    target = (a + b - 2) // 2
    full, _, sum_masks, diff_masks, _, cell_diff, _ = _grid_tables(
        grid.col_coords, grid.row_coords
    )
    sum_values = sorted(sum_masks)
    diff_values = sorted(diff_masks)
    out: list[DiagonalCover] = []
    for S in combinations(sum_values, target):
        covered = 0
        for s in S:
            covered |= sum_masks[s]
        rem = full & ~covered
        required: set[int] = set()
        ok = True
        while rem:
            idx = (rem & -rem).bit_length() - 1
            d = cell_diff[idx]
            required.add(d)
            if len(required) > target:
                ok = False
                break
            rem &= ~diff_masks[d]
        if not ok:
            continue
        rest = [d for d in diff_values if d not in required]
        for extra in combinations(rest, target - len(required)):
            out.append(DiagonalCover(frozenset(S), frozenset(required) | frozenset(extra)))
    return out


def enumerate_beta_optima(m: int, n: int) -> Iterator[RelaxedCover]:
    """Every relaxed cover of optimal size, streamed without duplicates.

    Order: by row-set size then lexicographic rows, then the same for
    columns, chosen sums and chosen diffs.  Sum sets range over all board
    sum diagonals (a chosen diagonal may be redundant); difference sets
    are the uncovered remainder's forced diffs plus any padding.
    """
    p = beta_exact(m, n).value
    dims = BoardDims(m, n)
    board_sums = list(range(m + n - 1))
    board_diffs = list(range(-(n - 1), m))

    def diff_choices(required: list[int], cap: int) -> Iterator[frozenset[int]]:
        rest = [d for d in board_diffs if d not in required]
        base = frozenset(required)
        for extra_size in range(cap - len(required) + 1):
            for extra in combinations(rest, extra_size):
                yield base | frozenset(extra)

    def sum_sets() -> Iterator[tuple[frozenset[int], list[int]]]:
        for size in range(p + 1):
            for S in combinations(board_sums, size):
                yield frozenset(S), list(S)

    for r_size in range(min(p, n) + 1):
        for R in combinations(range(n), r_size):
            chosen_r = set(R)
            open_rows = tuple(y for y in range(n) if y not in chosen_r)
            for c_size in range(min(p, m) + 1):
                for C in combinations(range(m), c_size):
                    chosen_c = set(C)
                    open_cols = tuple(x for x in range(m) if x not in chosen_c)
                    if open_rows and open_cols:
                        a, b = len(open_cols), len(open_rows)
                        if _grid_level_infeasible(a, b, p):
                            continue
                        full, _, sum_masks, diff_masks, _, cell_diff, _ = _grid_tables(
                            open_cols, open_rows
                        )
                        for S, s_list in sum_sets():
                            covered = 0
                            for s in s_list:
                                covered |= sum_masks.get(s, 0)
                            rem = full & ~covered
                            required: set[int] = set()
                            ok = True
                            while rem:
                                idx = (rem & -rem).bit_length() - 1
                                d = cell_diff[idx]
                                required.add(d)
                                if len(required) > p:
                                    ok = False
                                    break
                                rem &= ~diff_masks[d]
                            if not ok:
                                continue
                            for D in diff_choices(sorted(required), p):
                                yield RelaxedCover(dims, frozenset(R), frozenset(C), S, D)
                    else:
                        for S, _ in sum_sets():
                            for D in diff_choices([], p):
                                yield RelaxedCover(dims, frozenset(R), frozenset(C), S, D)
