"""Independent brute-force oracles used to pin expected values in tests.

Everything here enumerates candidate solutions directly and checks them by
definition, without touching the package's search or verification code, so
oracle-versus-implementation tests compare genuinely separate paths.
"""

from itertools import combinations

from queencover.board import Line, LineKind, line_cells


def covered_cells_by_lines(cover):
    """Union of line_cells over all chosen lines of a relaxed cover."""
    dims = cover.dims
    cells = set()
    for r in cover.rows:
        cells.update(line_cells(dims, Line(LineKind.ROW, r)))
    for c in cover.cols:
        cells.update(line_cells(dims, Line(LineKind.COL, c)))
    for s in cover.sums:
        cells.update(line_cells(dims, Line(LineKind.SUM, s)))
    for d in cover.diffs:
        cells.update(line_cells(dims, Line(LineKind.DIFF, d)))
    return cells


def grid_covered(grid, sums, diffs):
    return all(cx + ry in sums or cx - ry in diffs
               for cx in grid.col_coords for ry in grid.row_coords)


def brute_min_diagonal_cover(grid, p_limit=8):
    """Smallest p and a witness such that p sums and p diffs cover the grid."""
    sum_values = sorted(grid.sum_values())
    diff_values = sorted(grid.diff_values())
    for p in range(p_limit + 1):
        ns, nd = min(p, len(sum_values)), min(p, len(diff_values))
        for S in combinations(sum_values, ns):
            ss = set(S)
            for D in combinations(diff_values, nd):
                if grid_covered(grid, ss, set(D)):
                    return p, ss, set(D)
    raise AssertionError(f"no diagonal cover within p <= {p_limit}")


def dominates(m, n, queens):
    rows = {y for _, y in queens}
    cols = {x for x, _ in queens}
    sums = {x + y for x, y in queens}
    diffs = {x - y for x, y in queens}
    return all(y in rows or x in cols or x + y in sums or x - y in diffs
               for x in range(m) for y in range(n))


def brute_gamma(m, n, q_limit=4):
    """Smallest dominating queen count by raw placement enumeration."""
    cells = [(x, y) for x in range(m) for y in range(n)]
    for q in range(1, q_limit + 1):
        for queens in combinations(cells, q):
            if dominates(m, n, queens):
                return q
    raise AssertionError(f"no dominating placement within q <= {q_limit}")


def brute_beta_optima(m, n, p):
    """All relaxed covers of size at most p, as sorted index tuples."""
    out = set()

    def subsets(values, cap):
        values = list(values)
        for size in range(cap + 1):
            yield from combinations(values, size)

    for R in subsets(range(n), min(p, n)):
        rs = set(R)
        for C in subsets(range(m), min(p, m)):
            cs = set(C)
            for S in subsets(range(m + n - 1), p):
                ss = set(S)
                for D in subsets(range(-(n - 1), m), p):
                    ds = set(D)
                    if all(y in rs or x in cs or x + y in ss or x - y in ds
                           for x in range(m) for y in range(n)):
                        out.add((R, C, S, D))
    return out


def naive_q2_ok(cols, rows, e):
    col_red = {c % e for c in cols}
    row_red = {r % e for r in rows}
    for ci in cols:
        for rj in rows:
            v = (ci + rj) % e
            if v in col_red and v in row_red:
                continue
            if (ci - rj) % e in col_red and (rj - ci) % e in row_red:
                continue
            return False
    return True


def naive_q2_solutions(p, e):
    interior = range(1, e)
    out = []
    for ci in combinations(interior, p - 1):
        cols = (0, *ci, e)
        for ri in combinations(interior, p - 1):
            rows = (0, *ri, e)
            if naive_q2_ok(cols, rows, e):
                out.append((cols, rows))
    return out


def naive_q3_ok(members, e):
    s = set(members)
    return all((x + y) % e in s or (x - y) % e in s for x in members for y in members)


def naive_q3_solutions(e):
    out = []
    for mask in range(1 << e):
        members = [v for v in range(e) if mask >> v & 1]
        if naive_q3_ok(members, e):
            out.append(frozenset(members))
    return out
