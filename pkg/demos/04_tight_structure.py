"""
Structure of tight covers and perfect grid covers
=================================================

On an n x n board with n = 4k+3, optimal relaxed covers use (n-1)/2
lines of each kind and are extremely rigid: all lines distinct, the
uncovered block square, its edge cells covered exactly once, every
diagonal meeting that edge twice, and the corner diagonals chosen with
the remaining ones split evenly.  This script enumerates ALL optima of
the 7x7 board and checks the five properties on each, then enumerates
the perfect covers of uniformly spaced grids, which form the Q_e family.
"""

from queencover import (
    enumerate_beta_optima,
    enumerate_perfect_covers,
    tight_analysis,
    uniform_grid,
    uniform_grid_Qe,
)

optima = list(enumerate_beta_optima(7, 7))
print(f"the 7x7 board has {len(optima)} optimal covers of size 3")

reports = [tight_analysis(c) for c in optima]
print(f"all pass the five structure properties: {all(r.all_hold for r in reports)}")

sample = optima[0]
print("\nfirst optimum in canonical order:")
print(f"  rows {sorted(sample.rows)} cols {sorted(sample.cols)}")
print(f"  sums {sorted(sample.sums)} diffs {sorted(sample.diffs)}")

# Perfect covers of uniformly spaced grids: exactly k+1 of them, each
# using the same symmetric index family for sums and diffs.
for k in (1, 2, 3):
    grid = uniform_grid(k, 2)
    covers = enumerate_perfect_covers(grid)
    print(f"\nuniform grid with {2 * k + 2} rows and columns: {len(covers)} perfect covers")
    for c in covers:
        matching_e = [e for e in range(k + 1) if uniform_grid_Qe(k, e, 2).sums == c.sums]
        print(f"  sums = diffs = {sorted(c.sums)}  (family e = {matching_e[0]})")
