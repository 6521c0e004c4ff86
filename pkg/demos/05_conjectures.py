"""
Residue-closed grids and subsets: listings and conjecture checks
================================================================

Tight covers of (4k+3)-square boards leave a spaced grid whose rows and
columns must satisfy a residue-closure condition mod e.  Enumerating the
closed configurations at small sizes shows striking symmetries: odd-size
solutions are symmetric about both diagonals, and closed subsets of odd
size are symmetric about e/2 once e is adjoined.  Neither statement is
proved; the checks below confirm them on everything small.
"""

from queencover import (
    check_conjecture_q2,
    check_conjecture_q3,
    q2_solutions,
    q3_solutions,
)

print("closed coordinate chains for p=5, e=8:")
for sol in q2_solutions(5, 8):
    print(f"  C' {sol.cols}  R' {sol.rows}")

print("\nclosed coordinate chains for p=4, e=6:")
for sol in q2_solutions(4, 6):
    mirror = sol.cols == sol.rows
    rotated = all(sol.cols[i] + sol.rows[4 - i] == 6 for i in range(5))
    print(f"  C' {sol.cols}  R' {sol.rows}  mirror={mirror} rotated={rotated}")

print("\nodd-size closed subsets for e=6 (shown with e adjoined):")
for sol in q3_solutions(6, parity="odd"):
    print(f"  {sorted(sol.s | {6})}")

report = check_conjecture_q2(5, 10)
print(f"\nchain symmetry conjecture over {report.range_checked}: holds={report.holds}")

report = check_conjecture_q3(12)
print(f"subset symmetry conjecture over {report.range_checked}: holds={report.holds}")
