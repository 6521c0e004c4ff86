import pytest

from queencover.bounds import (
    BoardTag,
    alpha_rect,
    alpha_square,
    beta_rect,
    beta_square,
    classify_board,
    gamma_lower,
    is_trivial,
    spaced_grid_diag_lower,
)


@pytest.mark.parametrize("n,expected", [(4, 2), (9, 5), (11, 5), (1, 1), (12, 6), (2, 1), (3, 1)])
def test_beta_square(n, expected):
    assert beta_square(n) == expected


@pytest.mark.parametrize(
    "m,n,expected",
    [
        (13, 9, 5),
        (12, 10, 6),
        (10, 4, 4),
        (9, 9, 5),
        (8, 11, 5),
        (6, 8, 4),
        (11, 18, 7),
    ],
)
def test_beta_rect(m, n, expected):
    assert beta_rect(m, n) == expected


@pytest.mark.parametrize("n,expected", [(6, 5), (7, 7), (1, 1), (2, 1), (4, 3)])
def test_alpha_square(n, expected):
    assert alpha_square(n) == expected


@pytest.mark.parametrize("m,n,expected", [(3, 3, 3), (4, 4, 3), (2, 2, 1), (9, 3, 6)])
def test_alpha_rect(m, n, expected):
    assert alpha_rect(m, n) == expected


def test_alpha_2x2_matches_brute_force():
    # one sum plus one diff cover all four cells: sum 1 and diff 0
    cells = [(x, y) for x in range(2) for y in range(2)]
    assert all(x + y == 1 or x - y == 0 for x, y in cells)
    assert alpha_rect(2, 2) == 1


@pytest.mark.parametrize("m,n,expected", [(8, 11, 5), (13, 9, 5), (1, 1, 1)])
def test_gamma_lower(m, n, expected):
    assert gamma_lower(m, n) == expected


@pytest.mark.parametrize("a,b,expected", [(9, 3, 6), (2, 2, 1), (3, 3, 3), (1, 1, 1)])
def test_spaced_grid_diag_lower(a, b, expected):
    assert spaced_grid_diag_lower(a, b) == expected


def test_zero_dims_rejected():
    with pytest.raises(ValueError):
        beta_rect(0, 5)
    with pytest.raises(ValueError):
        beta_square(0)
    with pytest.raises(ValueError):
        spaced_grid_diag_lower(3, 0)


def test_symmetry_in_arguments():
    for m in range(1, 80):
        for n in range(1, 80):
            assert beta_rect(m, n) == beta_rect(n, m)
            assert alpha_rect(m, n) == alpha_rect(n, m)


def test_square_formulas_agree_with_rectangular():
    for n in range(1, 1001):
        assert beta_rect(n, n) == beta_square(n)
        assert alpha_rect(n, n) == alpha_square(n)


def test_monotonicity_on_non_trivial_boards():
    limit = 200
    for m in range(2, limit + 1):
        for n in range(2, limit + 1):
            if is_trivial(m, n):
                continue
            if not is_trivial(m - 1, n):
                assert beta_rect(m - 1, n) <= beta_rect(m, n)
            if not is_trivial(m, n - 1):
                assert beta_rect(m, n - 1) <= beta_rect(m, n)
            assert alpha_rect(m - 1, n) <= alpha_rect(m, n)
            assert alpha_rect(m, n - 1) <= alpha_rect(m, n)


def test_beta_excess_over_base_bound_is_zero_or_one():
    for m in range(1, 201):
        for n in range(1, 201):
            if is_trivial(m, n):
                continue
            base = -((m + n - 2) // -4)
            assert base <= beta_rect(m, n) <= base + 1


@pytest.mark.parametrize(
    "m,n,tag",
    [
        (10, 4, BoardTag.TRIVIAL),
        (12, 10, BoardTag.IMPROVED),
        (11, 18, BoardTag.MATCHED),
        (9, 9, BoardTag.SQUARE_KNOWN),
        (4, 4, BoardTag.MATCHED),
        (1, 1, BoardTag.TRIVIAL),
    ],
)
def test_classify_board(m, n, tag):
    cls = classify_board(m, n)
    assert cls.tag is tag
    assert cls.value == beta_rect(m, n)


def test_square_known_only_on_squares():
    for m in range(1, 60):
        for n in range(1, 60):
            cls = classify_board(m, n)
            if cls.tag is BoardTag.SQUARE_KNOWN:
                assert m == n and n % 4 == 1
