"""Line covers for queen and bishop domination on rectangular chessboards.

The package computes three cover numbers of an m x n board:

* the relaxed queen cover number: the least p such that p rows, p columns,
  p sum diagonals and p difference diagonals jointly cover every cell;
* the relaxed bishop cover number: the same with diagonals only;
* the queen domination number: the least number of queens whose lines
  cover every cell, with the placement constraint kept.

It provides closed-form values (`bounds`), explicit optimal constructions
(`constructions`), verification and structure analysis (`verify`),
exhaustive search oracles (`search`), residue-closure enumeration
(`conjectures`) and a command-line front end (`cli`).
"""

from .board import (
    BoardDims,
    Cell,
    Line,
    LineKind,
    QueenPlacement,
    RelaxedCover,
    SpacedGrid,
    covers,
    hull_boundary,
    line_cells,
    uncovered_grid,
)
from .bounds import (
    BoardClass,
    BoardTag,
    alpha_rect,
    alpha_square,
    beta_rect,
    beta_square,
    classify_board,
    gamma_lower,
    is_easy_critical,
    is_hard_critical,
    is_trivial,
    spaced_grid_diag_lower,
)
from .constructions import (
    DiagonalCover,
    QeFamily,
    bishop_cover,
    critical_embedding,
    rect_queen_cover,
    restrict_cover,
    square_queen_cover,
    uniform_grid,
    uniform_grid_Qe,
)
from .conjectures import (
    ConjectureReport,
    GridSolution,
    SubsetSolution,
    check_conjecture_q2,
    check_conjecture_q3,
    q2_solutions,
    q3_solutions,
)
from .search import (
    SearchResult,
    SearchStatus,
    alpha_exact,
    beta_exact,
    enumerate_beta_optima,
    enumerate_perfect_covers,
    gamma_exact,
    grid_min_diagonals,
)
from .verify import (
    TightReport,
    is_diagonal_cover,
    is_dominating_placement,
    is_perfect_cover,
    is_relaxed_cover,
    tight_analysis,
)

__version__ = "0.1.0"

__all__ = [
    "BoardClass",
    "BoardDims",
    "BoardTag",
    "Cell",
    "ConjectureReport",
    "DiagonalCover",
    "GridSolution",
    "Line",
    "LineKind",
    "QeFamily",
    "QueenPlacement",
    "RelaxedCover",
    "SearchResult",
    "SearchStatus",
    "SpacedGrid",
    "SubsetSolution",
    "TightReport",
    "alpha_exact",
    "alpha_rect",
    "alpha_square",
    "beta_exact",
    "beta_rect",
    "beta_square",
    "bishop_cover",
    "check_conjecture_q2",
    "check_conjecture_q3",
    "classify_board",
    "covers",
    "critical_embedding",
    "enumerate_beta_optima",
    "enumerate_perfect_covers",
    "gamma_exact",
    "gamma_lower",
    "grid_min_diagonals",
    "hull_boundary",
    "is_diagonal_cover",
    "is_dominating_placement",
    "is_easy_critical",
    "is_hard_critical",
    "is_perfect_cover",
    "is_relaxed_cover",
    "is_trivial",
    "line_cells",
    "q2_solutions",
    "q3_solutions",
    "rect_queen_cover",
    "restrict_cover",
    "spaced_grid_diag_lower",
    "square_queen_cover",
    "tight_analysis",
    "uncovered_grid",
    "uniform_grid",
    "uniform_grid_Qe",
]
