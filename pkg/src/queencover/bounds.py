"""Closed-form cover numbers, lower bounds and the board classification.

All formulas are integer-exact; each branch is guarded by the divisibility
conditions that make it integral.

Terminology used throughout the package:

* a board is *trivial* when ``max(m, n) >= 3 * min(m, n) - 2``; there the
  short-direction lines alone are optimal;
* a non-trivial board is *critical* when ``m + n == 2 (mod 4)`` (this
  forces m and n to share a parity), and *hard critical* when additionally
  both are even with ``m + n == 6 (mod 8)`` or both odd with
  ``m + n == 2 (mod 8)``.  Hard critical boards are exactly the ones whose
  relaxed queen cover number exceeds ``ceil((m + n - 2) / 4)`` by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


def _check_positive(*dims: int) -> None:
    for d in dims:
        if d < 1:
            raise ValueError(f"dimension must be a positive integer, got {d}")


def is_trivial(m: int, n: int) -> bool:
    """True when the short-direction lines alone give an optimal cover."""
    _check_positive(m, n)
    return max(m, n) >= 3 * min(m, n) - 2


def is_critical(m: int, n: int) -> bool:
    """True when ``m + n == 2 (mod 4)`` (trivial boards excluded)."""
    return not is_trivial(m, n) and (m + n) % 4 == 2


def is_hard_critical(m: int, n: int) -> bool:
    """Critical boards whose relaxed cover number carries the extra +1."""
    if is_trivial(m, n):
        return False
    if m % 2 == 0 and n % 2 == 0:
        return (m + n) % 8 == 6
    if m % 2 == 1 and n % 2 == 1:
        return (m + n) % 8 == 2
    return False


def is_easy_critical(m: int, n: int) -> bool:
    """Critical but not hard critical."""
    return is_critical(m, n) and not is_hard_critical(m, n)


def beta_square(n: int) -> int:
    """Relaxed queen cover number of the n x n board.

    2k for n = 4k and 2k + 1 for n in {4k+1, 4k+2, 4k+3}.
    """
    _check_positive(n)
    k = n // 4
    return 2 * k if n % 4 == 0 else 2 * k + 1


def beta_rect(m: int, n: int) -> int:
    """Relaxed queen cover number of the m x n board."""
    _check_positive(m, n)
    if is_trivial(m, n):
        return min(m, n)
    if is_hard_critical(m, n):
        return (m + n - 2) // 4 + 1
    return -((m + n - 2) // -4)  # ceil((m + n - 2) / 4)


def alpha_square(n: int) -> int:
    """Relaxed bishop cover number of the n x n board: 2k - 1 if n = 2k, else 2k + 1."""
    _check_positive(n)
    return n - 1 if n % 2 == 0 else n


def alpha_rect(m: int, n: int) -> int:
    """Relaxed bishop cover number of the m x n board."""
    _check_positive(m, n)
    if m % 2 == 1 and n % 2 == 1:
        return (m + n - 2) // 2 + 1
    return -((m + n - 2) // -2)


def gamma_lower(m: int, n: int) -> int:
    """Lower bound on the queen domination number: the relaxed cover number."""
    return beta_rect(m, n)


def spaced_grid_diag_lower(a: int, b: int) -> int:
    """Lower bound on diagonals per kind needed to cover an a x b spaced grid.

    ``(a + b - 2) / 2 + 1`` when both counts are odd, else the ceiling of
    ``(a + b - 2) / 2``.  Depends only on the number of columns and rows,
    not on the coordinates.
    """
    _check_positive(a, b)
    if a % 2 == 1 and b % 2 == 1:
        return (a + b - 2) // 2 + 1
    return -((a + b - 2) // -2)


class BoardTag(Enum):
    """Classification of a board by how its lower bound is obtained."""

    TRIVIAL = "trivial"
    IMPROVED = "improved"
    MATCHED = "matched"
    SQUARE_KNOWN = "square-known"


@dataclass(frozen=True)
class BoardClass:
    tag: BoardTag
    value: int


def classify_board(m: int, n: int) -> BoardClass:
    """Classify a board for the improvement grid.

    Trivial boards get their own tag.  Non-trivial boards where the +1
    branch fires are IMPROVED, except squares, whose +1 (possible only for
    n == 1 mod 4) was already established earlier and is tagged
    SQUARE_KNOWN.  Everything else MATCHED the pre-existing bound.
    """
    value = beta_rect(m, n)
    if is_trivial(m, n):
        return BoardClass(BoardTag.TRIVIAL, value)
    if is_hard_critical(m, n):
        tag = BoardTag.SQUARE_KNOWN if m == n else BoardTag.IMPROVED
        return BoardClass(tag, value)
    return BoardClass(BoardTag.MATCHED, value)
