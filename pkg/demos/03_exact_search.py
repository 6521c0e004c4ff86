"""
Exhaustive oracles: searching instead of trusting formulas
==========================================================

The search module recomputes every cover number from scratch by complete
enumeration with counting prunes, so the closed forms can be checked
against an independent path.  The queen domination search also
reproduces the published values around 11-row boards, including the
failure of monotonicity at 8x11.
"""

from queencover import (
    SpacedGrid,
    alpha_exact,
    alpha_rect,
    beta_exact,
    beta_rect,
    gamma_exact,
    grid_min_diagonals,
    is_dominating_placement,
)

print("oracle vs formula on a few boards:")
for m, n in [(7, 7), (8, 8), (12, 10), (13, 9)]:
    r = beta_exact(m, n)
    print(f"  beta({m}x{n})  search {r.value}  formula {beta_rect(m, n)}  nodes {r.nodes}")
for m, n in [(6, 6), (13, 13)]:
    r = alpha_exact(m, n)
    print(f"  alpha({m}x{n}) search {r.value}  formula {alpha_rect(m, n)}  nodes {r.nodes}")

# Minimum diagonals for a spaced grid with gaps.
grid = SpacedGrid((0, 2, 5), (0, 1, 4))
r = grid_min_diagonals(grid)
print(f"\nspaced grid cols {grid.col_coords} rows {grid.row_coords}:")
print(f"  minimum diagonals per kind: {r.value}")
print(f"  witness sums {sorted(r.witness.sums)} diffs {sorted(r.witness.diffs)}")

# Queen domination around 11 rows: the number is NOT monotone in the
# board size, unlike both relaxations.
print("\nqueen domination on 11-row boards:")
for m in (8, 9, 10, 11):
    r = gamma_exact(m, 11)
    queens = sorted((q.x, q.y) for q in r.witness.queens)
    assert is_dominating_placement(r.witness)
    print(f"  gamma({m}x11) = {r.value}  queens {queens}")
print("note: 8x11 needs more queens than the wider 9x11 board")
