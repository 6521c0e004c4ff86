"""Enumeration of residue-closed grids and subsets, with conjecture checks.

Two enumeration problems over residues mod e:

* grid solutions: pairs of coordinate chains ``0 = C_0 < ... < C_p = e``
  and ``0 = R_0 < ... < R_p = e`` such that every coordinate pair admits a
  diagonal that can re-enter the chain, meaning for all i, j either
  ``C_i + R_j (mod e)`` lies in both chains or ``C_i - R_j (mod e)`` lies
  in the column chain and ``R_j - C_i (mod e)`` in the row chain;
* subset solutions: subsets S of ``{0, ..., e-1}`` closed under taking,
  for every ordered pair x, y, at least one of ``x + y (mod e)`` or
  ``x - y (mod e)``.

Membership is always tested after reduction mod e, which identifies the
endpoints 0 and e of a chain.  Enumeration orders are deterministic: grid
solutions are lexicographic in (columns, rows); subset solutions ascend by
bitmask value, which reproduces the reference listings exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Optional


@dataclass(frozen=True)
class GridSolution:
    """A pair of coordinate chains, endpoints included."""

    cols: tuple[int, ...]
    rows: tuple[int, ...]


@dataclass(frozen=True)
class SubsetSolution:
    """A residue subset solution for modulus e."""

    e: int
    s: frozenset[int]


@dataclass
class ConjectureReport:
    range_checked: str
    violations: list[str]

    @property
    def holds(self) -> bool:
        return not self.violations


def _grid_pair_ok(col_red, row_red, e, ci, rj) -> bool:
    v = (ci + rj) % e
    if v in col_red and v in row_red:
        return True
    return (ci - rj) % e in col_red and (rj - ci) % e in row_red


def q2_solutions(p: int, e: int) -> list[GridSolution]:
    """All grid solutions for chain length p + 1 and modulus e.

    Requires e >= p >= 2.  Column chains are enumerated lexicographically;
    for each, row chains are built depth first in increasing order, pruning
    a prefix as soon as some pair fails both conditions with no residue
    left that a later row element could still supply.
    """
    if p < 2:
        raise ValueError(f"chain parameter p must be at least 2, got {p}")
    if e < p:
        raise ValueError(f"modulus e must be at least p, got e={e}, p={p}")
    interior = list(range(1, e))
    out: list[GridSolution] = []
    for cols_int in combinations(interior, p - 1):
        cols = (0, *cols_int, e)
        col_red = {c % e for c in cols}

        def extend(prefix: list[int]) -> None:
            if len(prefix) == p:
                rows = (*prefix, e)
                row_red = {r % e for r in rows}
                if all(
                    _grid_pair_ok(col_red, row_red, e, ci, rj)
                    for ci in cols
                    for rj in rows
                ):
                    out.append(GridSolution(cols, rows))
                return
            frontier = prefix[-1]
            for z in range(frontier + 1, e - p + len(prefix) + 1):
                # Pairs with z are only prunable when every residue that
                # could still satisfy them exceeds the current frontier.
                partial_red = {v % e for v in prefix} | {0, z % e}
                dead = False
                for ci in cols:
                    v1 = (ci + z) % e
                    cond1_open = v1 in col_red and (v1 in partial_red or v1 > z)
                    v3 = (z - ci) % e
                    cond2_open = (ci - z) % e in col_red and (v3 in partial_red or v3 > z)
                    if not cond1_open and not cond2_open:
                        dead = True
                        break
                if not dead:
                    extend(prefix + [z])

        extend([0])
    return out


def _subset_ok(members: tuple[int, ...], mask: int, e: int) -> bool:
    for x in members:
        for y in members:
            if mask >> ((x + y) % e) & 1 or mask >> ((x - y) % e) & 1:
                continue
            return False
    return True


def q3_solutions(
    e: int, parity: Optional[Literal["odd", "even"]] = None
) -> list[SubsetSolution]:
    """All closed subsets of {0, ..., e-1}, optionally filtered by size
    parity, in ascending bitmask order."""
    if e < 1:
        raise ValueError(f"modulus e must be positive, got {e}")
    if parity not in (None, "odd", "even"):
        raise ValueError(f"parity must be 'odd', 'even' or None, got {parity!r}")
    out: list[SubsetSolution] = []
    for mask in range(1 << e):
        size = mask.bit_count()
        if parity == "odd" and size % 2 == 0:
            continue
        if parity == "even" and size % 2 == 1:
            continue
        members = tuple(v for v in range(e) if mask >> v & 1)
        if _subset_ok(members, mask, e):
            out.append(SubsetSolution(e, frozenset(members)))
    return out


def check_conjecture_q2(p_max: int, e_max: int) -> ConjectureReport:
    """Check the chain symmetry conjecture over 2 <= p <= p_max, p <= e <= e_max.

    Odd p: every solution must be symmetric both ways, with columns equal
    to rows and with ``C_i + R_{p-i} = e`` throughout.  Even p: at least
    one of the two symmetries must hold.
    """
    violations: list[str] = []
    for p in range(2, p_max + 1):
        for e in range(p, e_max + 1):
            for sol in q2_solutions(p, e):
                mirror = sol.cols == sol.rows
                rotated = all(sol.cols[i] + sol.rows[p - i] == e for i in range(p + 1))
                if p % 2 == 1:
                    ok = mirror and rotated
                else:
                    ok = mirror or rotated
                if not ok:
                    violations.append(
                        f"p={p} e={e} cols={sol.cols} rows={sol.rows} "
                        f"mirror={mirror} rotated={rotated}"
                    )
    return ConjectureReport(f"2 <= p <= {p_max}, p <= e <= {e_max}", violations)


def check_conjecture_q3(e_max: int) -> ConjectureReport:
    """Check that every odd-sized subset solution contains 0 and that its
    union with {e} is symmetric about e / 2, for 1 <= e <= e_max."""
    violations: list[str] = []
    for e in range(1, e_max + 1):
        for sol in q3_solutions(e, parity="odd"):
            with_e = set(sol.s) | {e}
            symmetric = all(e - v in with_e for v in with_e)
            if 0 not in sol.s or not symmetric:
                violations.append(
                    f"e={e} s={sorted(sol.s)} zero={0 in sol.s} symmetric={symmetric}"
                )
    return ConjectureReport(f"1 <= e <= {e_max}", violations)
