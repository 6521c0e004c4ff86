"""
Closed-form cover numbers and the board classification
=======================================================

Every board has three numbers of interest: the queen domination number
(hard), the relaxed queen cover number beta (exactly solved), and the
relaxed bishop cover number alpha (exactly solved).  beta is a lower
bound for the domination number, and this script walks through the
closed forms and where they improve on the older bound.
"""

from queencover import alpha_rect, beta_rect, beta_square, classify_board, gamma_lower

# Square boards, by residue of n mod 4.
print("relaxed queen cover numbers for square boards:")
for n in range(1, 14):
    print(f"  beta({n}x{n}) = {beta_square(n)}")

# Rectangular boards: the trivial regime takes over once one side is
# nearly three times the other.
print("\nwide boards are covered by their short-direction lines alone:")
for m, n in [(10, 4), (16, 6), (31, 11)]:
    print(f"  beta({m}x{n}) = {beta_rect(m, n)} = min(m, n)")

# On non-trivial boards the value is ceil((m+n-2)/4), except on the
# "hard critical" boards where one extra line is needed.
print("\nhard critical boards carry a +1:")
for m, n in [(12, 10), (6, 8), (9, 9)]:
    base = -((m + n - 2) // -4)
    print(f"  beta({m}x{n}) = {beta_rect(m, n)} (base bound {base})")

# The classification behind the improvement grid.
print("\nclassification of a few boards:")
for m, n in [(10, 4), (12, 10), (11, 18), (9, 9), (13, 9)]:
    cls = classify_board(m, n)
    print(f"  {m:>2}x{n:<2} -> {cls.tag.value:<12} value {cls.value}")

# The bishop relaxation only needs diagonals; odd-odd boards pay +1.
print("\nrelaxed bishop cover numbers:")
for m, n in [(6, 6), (7, 7), (9, 3), (13, 13)]:
    print(f"  alpha({m}x{n}) = {alpha_rect(m, n)}")

# gamma_lower is the bound the relaxation yields for queen domination.
print("\nlower bounds for queen domination:")
for m, n in [(8, 11), (13, 9), (18, 18)]:
    print(f"  gamma({m}x{n}) >= {gamma_lower(m, n)}")
