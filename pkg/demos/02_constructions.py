"""
Optimal covers, constructed and rendered
========================================

Witness covers meeting every closed-form value.  The bishop cover of an
even board is the parity trick: odd sum diagonals plus even difference
diagonals reach every cell because x+y and x-y share a parity.  Queen
covers stack top rows and right columns over a bishop cover of the
leftover bottom-left block.
"""

from queencover import (
    BoardDims,
    SpacedGrid,
    bishop_cover,
    critical_embedding,
    is_diagonal_cover,
    is_relaxed_cover,
    rect_queen_cover,
    restrict_cover,
    square_queen_cover,
)
from queencover.cli import render_cover

# The parity cover of the 6x6 board.
dc = bishop_cover(6, 6)
print("bishop cover of 6x6:")
print(f"  sums  {sorted(dc.sums)}")
print(f"  diffs {sorted(dc.diffs)}")
print(f"  covers the board: {is_diagonal_cover(SpacedGrid.board(6, 6), dc)}")

# A square queen cover: 5 rows, 5 columns, 5+5 diagonals on an 11x11 board.
cover = square_queen_cover(11)
print(f"\nqueen cover of 11x11, size {cover.size}, valid {is_relaxed_cover(cover)}:")
print(render_cover(cover))

# The easy critical rectangle 13x9 from the rectangular solution.
cover = rect_queen_cover(13, 9)
print(f"\nqueen cover of 13x9, size {cover.size}:")
print(render_cover(cover))

# Hard critical boards are solved by embedding into a slightly larger
# easy critical board and restricting back.
m, n = 12, 10
mm, nn = critical_embedding(m, n)
big = rect_queen_cover(mm, nn)
small = restrict_cover(big, BoardDims(m, n))
print(f"\n{m}x{n} embeds into {mm}x{nn}; restricted cover size {small.size}")
print(f"restricted cover is valid: {is_relaxed_cover(small)}")
