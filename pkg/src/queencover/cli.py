"""Command-line front end and the flat cover-document format.

Subcommands: bound, construct, verify, search, conjecture, table, figure.
Exit codes: 0 success or valid, 1 invalid or violation found, 2 usage
error, 3 search cutoff reached.

Cover documents are flat line-oriented text: one ``name: values`` field
per line, arrays sorted ascending and deduplicated, so they diff cleanly
and round-trip bit-exactly.  Kinds: ``relaxed-queen`` and ``bishop`` live
on an m x n board; ``grid-diagonal`` covers an explicit spaced grid given
by ``grid_cols`` and ``grid_rows`` coordinate arrays.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .board import BoardDims, RelaxedCover, SpacedGrid
from .bounds import (
    BoardTag,
    alpha_rect,
    beta_rect,
    beta_square,
    classify_board,
    gamma_lower,
    spaced_grid_diag_lower,
)
from .constructions import (
    DiagonalCover,
    bishop_cover,
    rect_queen_cover,
    uniform_grid,
    uniform_grid_Qe,
)
from .conjectures import check_conjecture_q2, check_conjecture_q3, q2_solutions, q3_solutions
from .search import (
    SearchStatus,
    alpha_exact,
    beta_exact,
    gamma_exact,
    grid_min_diagonals,
)
from .verify import (
    first_uncovered_cell,
    first_uncovered_grid_cell,
    is_diagonal_cover,
    is_perfect_cover,
    is_relaxed_cover,
    tight_analysis,
)

SCHEMA_VERSION = 1
KINDS = ("relaxed-queen", "bishop", "grid-diagonal")


class DocumentError(ValueError):
    """Raised for malformed cover documents, with line and field context."""


@dataclass(frozen=True)
class CoverDocument:
    """Serialized cover: a kind, a target (board dims or grid coordinates)
    and four line-index arrays."""

    kind: str
    rows: tuple[int, ...] = ()
    cols: tuple[int, ...] = ()
    sums: tuple[int, ...] = ()
    diffs: tuple[int, ...] = ()
    m: Optional[int] = None
    n: Optional[int] = None
    grid_cols: Optional[tuple[int, ...]] = None
    grid_rows: Optional[tuple[int, ...]] = None
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise DocumentError(f"unknown kind {self.kind!r}, expected one of {KINDS}")
        for name in ("rows", "cols", "sums", "diffs"):
            object.__setattr__(self, name, tuple(sorted(set(getattr(self, name)))))
        if self.kind == "grid-diagonal":
            if self.grid_cols is None or self.grid_rows is None:
                raise DocumentError("grid-diagonal documents need grid_cols and grid_rows")
            object.__setattr__(self, "grid_cols", tuple(self.grid_cols))
            object.__setattr__(self, "grid_rows", tuple(self.grid_rows))
        else:
            if self.m is None or self.n is None:
                raise DocumentError(f"{self.kind} documents need m and n")
            if self.m < 1 or self.n < 1:
                raise DocumentError(f"board dimensions must be positive, got {self.m}x{self.n}")

    @property
    def size(self) -> int:
        return max(len(self.rows), len(self.cols), len(self.sums), len(self.diffs))


def document_from_cover(cover: RelaxedCover) -> CoverDocument:
    return CoverDocument(
        kind="relaxed-queen",
        m=cover.dims.m,
        n=cover.dims.n,
        rows=tuple(cover.rows),
        cols=tuple(cover.cols),
        sums=tuple(cover.sums),
        diffs=tuple(cover.diffs),
    )


def document_from_bishop(dc: DiagonalCover, dims: BoardDims) -> CoverDocument:
    return CoverDocument(
        kind="bishop", m=dims.m, n=dims.n, sums=tuple(dc.sums), diffs=tuple(dc.diffs)
    )


def document_from_grid_cover(dc: DiagonalCover, grid: SpacedGrid) -> CoverDocument:
    return CoverDocument(
        kind="grid-diagonal",
        grid_cols=grid.col_coords,
        grid_rows=grid.row_coords,
        sums=tuple(dc.sums),
        diffs=tuple(dc.diffs),
    )


def emit_document(doc: CoverDocument) -> str:
    lines = [f"schema_version: {doc.schema_version}", f"kind: {doc.kind}"]
    if doc.kind == "grid-diagonal":
        lines.append("grid_cols: " + " ".join(str(v) for v in doc.grid_cols))
        lines.append("grid_rows: " + " ".join(str(v) for v in doc.grid_rows))
    else:
        lines.append(f"m: {doc.m}")
        lines.append(f"n: {doc.n}")
    for name in ("rows", "cols", "sums", "diffs"):
        values = getattr(doc, name)
        lines.append(f"{name}:" + ("" if not values else " " + " ".join(str(v) for v in values)))
    return "\n".join(lines) + "\n"


_INT_FIELDS = ("schema_version", "m", "n")
_ARRAY_FIELDS = ("rows", "cols", "sums", "diffs", "grid_cols", "grid_rows")


def parse_document(text: str) -> CoverDocument:
    fields: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, rest = line.partition(":")
        name = name.strip()
        if not sep:
            raise DocumentError(f"line {lineno}: expected 'field: values', got {raw!r}")
        if name in fields:
            raise DocumentError(f"line {lineno}: duplicate field {name!r}")
        rest = rest.strip()
        if name == "kind":
            fields[name] = rest
        elif name in _INT_FIELDS:
            try:
                fields[name] = int(rest)
            except ValueError:
                raise DocumentError(f"line {lineno}: field {name!r} needs an integer, got {rest!r}")
        elif name in _ARRAY_FIELDS:
            try:
                fields[name] = tuple(int(tok) for tok in rest.split())
            except ValueError:
                raise DocumentError(f"line {lineno}: field {name!r} needs integers, got {rest!r}")
        else:
            raise DocumentError(f"line {lineno}: unknown field {name!r}")
    if "kind" not in fields:
        raise DocumentError("missing field 'kind'")
    version = fields.pop("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema_version {version}")
    try:
        return CoverDocument(schema_version=version, **fields)  # type: ignore[arg-type]
    except TypeError as exc:
        raise DocumentError(str(exc))


def render_cover(cover: RelaxedCover) -> str:
    """ASCII board, one character per cell, top row printed first.

    ``#`` for cells on a chosen row or column, ``x`` for cells only on a
    chosen diagonal, ``.`` for uncovered cells.
    """
    out = []
    for y in range(cover.dims.n - 1, -1, -1):
        row = []
        for x in range(cover.dims.m):
            if y in cover.rows or x in cover.cols:
                row.append("#")
            elif x + y in cover.sums or x - y in cover.diffs:
                row.append("x")
            else:
                row.append(".")
        out.append("".join(row))
    return "\n".join(out)


_CLASS_MARKER = {
    BoardTag.TRIVIAL: "-1",
    BoardTag.IMPROVED: "+1",
    BoardTag.MATCHED: "0",
    BoardTag.SQUARE_KNOWN: "s",
}


def cmd_bound(args) -> int:
    m, n = args.m, args.n
    if args.problem == "beta":
        print(beta_rect(m, n))
    elif args.problem == "alpha":
        print(alpha_rect(m, n))
    elif args.problem == "gamma-lower":
        print(gamma_lower(m, n))
    elif args.problem == "grid-lower":
        print(spaced_grid_diag_lower(m, n))
    else:
        cls = classify_board(m, n)
        print(f"{cls.tag.value} {_CLASS_MARKER[cls.tag]}")
    return 0


def _write_output(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    if args.kind == "queen":
        cover = rect_queen_cover(args.m, args.n)
        if not is_relaxed_cover(cover) or cover.size != beta_rect(args.m, args.n):
            print("internal error: constructed queen cover failed verification", file=sys.stderr)
            return 1
        doc = document_from_cover(cover)
        if args.render:
            print(render_cover(cover))
    elif args.kind == "bishop":
        dc = bishop_cover(args.m, args.n)
        dims = BoardDims(args.m, args.n)
        if not is_diagonal_cover(SpacedGrid.board(args.m, args.n), dc) or dc.size != alpha_rect(
            args.m, args.n
        ):
            print("internal error: constructed bishop cover failed verification", file=sys.stderr)
            return 1
        doc = document_from_bishop(dc, dims)
    else:
        dc = uniform_grid_Qe(args.k, args.e, args.d)
        grid = uniform_grid(args.k, args.d)
        if not is_perfect_cover(grid, dc):
            print("internal error: constructed grid cover failed verification", file=sys.stderr)
            return 1
        doc = document_from_grid_cover(dc, grid)
    _write_output(emit_document(doc), args.out)
    return 0


def _tight_applicable(cover: RelaxedCover) -> bool:
    n = cover.dims.n
    return cover.dims.m == n and n % 4 == 3 and cover.size == (n - 1) // 2


def cmd_verify(args) -> int:
    if args.path:
        with open(args.path, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        doc = parse_document(text)
    except DocumentError as exc:
        print(f"parse error: {exc}")
        return 1
    if doc.kind == "relaxed-queen":
        cover = RelaxedCover(
            BoardDims(doc.m, doc.n),
            frozenset(doc.rows),
            frozenset(doc.cols),
            frozenset(doc.sums),
            frozenset(doc.diffs),
        )
        if args.render:
            print(render_cover(cover))
        if not is_relaxed_cover(cover):
            cell = first_uncovered_cell(cover)
            print(f"invalid, first uncovered cell ({cell.x},{cell.y})")
            return 1
        print(f"valid, size {cover.size}")
        if _tight_applicable(cover):
            report = tight_analysis(cover)
            print(
                "tight structure: "
                f"distinct_lines={report.distinct_lines} "
                f"u_is_square={report.u_is_square} "
                f"edge_singly_covered={report.edge_singly_covered} "
                f"diagonals_hit_edge_twice={report.diagonals_hit_edge_twice} "
                f"corner_antidiagonal_chosen_and_balanced="
                f"{report.corner_antidiagonal_chosen_and_balanced}"
            )
            for detail in report.details:
                print(f"  {detail}")
        return 0
    if doc.kind == "bishop":
        grid = SpacedGrid.board(doc.m, doc.n)
    else:
        grid = SpacedGrid(doc.grid_cols, doc.grid_rows)
    dc = DiagonalCover(frozenset(doc.sums), frozenset(doc.diffs))
    if not is_diagonal_cover(grid, dc):
        cell = first_uncovered_grid_cell(grid, dc)
        print(f"invalid, first uncovered cell ({cell.x},{cell.y})")
        return 1
    note = " (perfect)" if is_perfect_cover(grid, dc) else ""
    print(f"valid, size {dc.size}{note}")
    return 0


def _usage_error(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)
    raise SystemExit(2)


def _parse_coords(text: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        _usage_error(f"{flag} needs comma-separated integers, got {text!r}")


def cmd_search(args) -> int:
    if args.problem == "grid":
        grid = SpacedGrid(_parse_coords(args.cols, "--cols"), _parse_coords(args.rows, "--rows"))
        result = grid_min_diagonals(grid, cutoff=args.cutoff)
        label = f"grid({len(grid.col_coords)}x{len(grid.row_coords)})"
        witness_doc = (
            document_from_grid_cover(result.witness, grid) if result.witness else None
        )
    else:
        m, n = args.m, args.n
        if args.problem == "beta":
            result = beta_exact(m, n, cutoff=args.cutoff)
            witness_doc = document_from_cover(result.witness) if result.witness else None
        elif args.problem == "alpha":
            result = alpha_exact(m, n, cutoff=args.cutoff)
            witness_doc = (
                document_from_bishop(result.witness, BoardDims(m, n)) if result.witness else None
            )
        else:
            result = gamma_exact(m, n, cutoff=args.cutoff)
            witness_doc = None
            if result.witness:
                queens = sorted((q.x, q.y) for q in result.witness.queens)
                print("queens: " + " ".join(f"({x},{y})" for x, y in queens))
        label = f"{args.problem}({m}x{n})"
    print(f"{label} = {result.value}")
    print(f"nodes: {result.nodes}")
    print(f"status: {result.status.value}")
    if result.status is SearchStatus.CUTOFF_REACHED:
        return 3
    if witness_doc is not None:
        _write_output(emit_document(witness_doc), args.out)
    return 0


def cmd_conjecture(args) -> int:
    if args.question == "q2":
        if args.p is None:
            _usage_error("q2 needs --p")
        if args.check:
            report = check_conjecture_q2(args.p, args.e)
        else:
            for sol in q2_solutions(args.p, args.e):
                cols = " ".join(str(v) for v in sol.cols)
                rows = " ".join(str(v) for v in sol.rows)
                print(f"C':{cols}  R':{rows}")
            return 0
    else:
        if args.check:
            report = check_conjecture_q3(args.e)
        else:
            for sol in q3_solutions(args.e, parity=args.parity):
                with_e = sorted(sol.s | {args.e})
                print("S u {e}: " + " ".join(str(v) for v in with_e))
            return 0
    if report.holds:
        print(f"holds over {report.range_checked}")
        return 0
    print(f"violations over {report.range_checked}:")
    for violation in report.violations:
        print(f"  {violation}")
    return 1


def table_rows(max_n: int) -> list[tuple[int, int, int, int, int]]:
    """Per board size: the three historical lower-bound formulas for the
    queen domination number of the n x n board, then the relaxed cover
    number."""
    out = []
    for n in range(1, max_n + 1):
        k = n // 4
        first = 2 * k if n % 4 in (0, 1) else 2 * k + 1
        refined = 2 * k + 1 if n % 4 == 1 else first
        latest = 2 * k + 2 if n % 4 == 3 and n > 11 else refined
        out.append((n, first, refined, latest, beta_square(n)))
    return out


def cmd_table(args) -> int:
    rows = table_rows(args.max_n)
    if args.format == "csv":
        print("n,lower_1987,lower_1995,lower_2007,beta")
        for row in rows:
            print(",".join(str(v) for v in row))
    else:
        header = ("n", "1987", "1995", "2007", "beta")
        widths = [max(len(header[i]), *(len(str(r[i])) for r in rows)) for i in range(5)]
        print("  ".join(header[i].rjust(widths[i]) for i in range(5)))
        for row in rows:
            print("  ".join(str(row[i]).rjust(widths[i]) for i in range(5)))
    return 0


def figure_grid(max_dim: int) -> tuple[list[list[str]], float, int, int]:
    """Classification markers for all boards up to max_dim, plus the
    improved fraction among non-trivial non-square boards."""
    grid = []
    improved = 0
    eligible = 0
    for m in range(1, max_dim + 1):
        row = []
        for n in range(1, max_dim + 1):
            tag = classify_board(m, n).tag
            row.append(_CLASS_MARKER[tag])
            if tag is not BoardTag.TRIVIAL and m != n:
                eligible += 1
                if tag is BoardTag.IMPROVED:
                    improved += 1
        grid.append(row)
    fraction = improved / eligible if eligible else 0.0
    return grid, fraction, improved, eligible


_ASCII_GLYPH = {"-1": "-", "+1": "+", "0": "0", "s": "s"}


def cmd_figure(args) -> int:
    grid, fraction, improved, eligible = figure_grid(args.max_dim)
    if args.format == "csv":
        print("m/n," + ",".join(str(n) for n in range(1, args.max_dim + 1)))
        for m, row in enumerate(grid, start=1):
            print(f"{m}," + ",".join(row))
        print(f"improved_fraction,{fraction:.6f}")
    else:
        for row in grid:
            print("".join(_ASCII_GLYPH[v] for v in row))
        print(
            f"improved fraction (non-trivial, non-square): "
            f"{fraction:.4f} = {improved}/{eligible}"
        )
    return 0


def _add_dims(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=int, required=True, help="column count")
    parser.add_argument("--n", type=int, required=True, help="row count")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="queencover",
        description="Line covers and exact domination search on rectangular boards",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="closed-form values and lower bounds")
    p_bound.add_argument(
        "problem", choices=("beta", "alpha", "gamma-lower", "grid-lower", "classify")
    )
    _add_dims(p_bound)
    p_bound.set_defaults(func=cmd_bound)

    p_construct = sub.add_parser("construct", help="emit a verified cover document")
    p_construct.add_argument("kind", choices=("queen", "bishop", "qe"))
    p_construct.add_argument("--m", type=int, help="column count (queen, bishop)")
    p_construct.add_argument("--n", type=int, help="row count (queen, bishop)")
    p_construct.add_argument("--k", type=int, help="grid parameter (qe)")
    p_construct.add_argument("--e", type=int, help="family index in [0, k] (qe)")
    p_construct.add_argument("--d", type=int, default=2, help="even grid spacing (qe)")
    p_construct.add_argument("--out", help="write the document to this file")
    p_construct.add_argument("--render", action="store_true", help="print an ASCII board")
    p_construct.set_defaults(func=_construct_dispatch)

    p_verify = sub.add_parser("verify", help="validate a cover document")
    p_verify.add_argument("path", nargs="?", help="document path (stdin when omitted)")
    p_verify.add_argument("--render", action="store_true", help="print an ASCII board")
    p_verify.set_defaults(func=cmd_verify)

    p_search = sub.add_parser("search", help="exhaustive exact solvers")
    p_search.add_argument("problem", choices=("beta", "alpha", "gamma", "grid"))
    p_search.add_argument("--m", type=int, help="column count")
    p_search.add_argument("--n", type=int, help="row count")
    p_search.add_argument("--cols", help="grid column coordinates, comma separated")
    p_search.add_argument("--rows", help="grid row coordinates, comma separated")
    p_search.add_argument("--cutoff", type=int, help="node-count cutoff")
    p_search.add_argument("--out", help="write the witness document to this file")
    p_search.set_defaults(func=_search_dispatch)

    p_conj = sub.add_parser("conjecture", help="enumerate solutions or check conjectures")
    p_conj.add_argument("question", choices=("q2", "q3"))
    p_conj.add_argument("--p", type=int, help="chain parameter (q2)")
    p_conj.add_argument("--e", type=int, required=True, help="modulus")
    p_conj.add_argument("--parity", choices=("odd", "even"), help="filter by subset size (q3)")
    p_conj.add_argument("--check", action="store_true", help="check the conjecture up to bounds")
    p_conj.set_defaults(func=cmd_conjecture)

    p_table = sub.add_parser("table", help="square-board lower-bound progression")
    p_table.add_argument("--max-n", type=int, required=True, dest="max_n")
    p_table.add_argument("--format", choices=("csv", "ascii"), default="csv")
    p_table.set_defaults(func=cmd_table)

    p_figure = sub.add_parser("figure", help="board classification grid")
    p_figure.add_argument("--max-dim", type=int, required=True, dest="max_dim")
    p_figure.add_argument("--format", choices=("csv", "ascii"), default="csv")
    p_figure.set_defaults(func=cmd_figure)

    return parser


def _construct_dispatch(args) -> int:
    if args.kind in ("queen", "bishop"):
        if args.m is None or args.n is None:
            _usage_error(f"construct {args.kind} needs --m and --n")
    else:
        if args.k is None or args.e is None:
            _usage_error("construct qe needs --k and --e")
    return cmd_construct(args)


def _search_dispatch(args) -> int:
    if args.problem == "grid":
        if not args.cols or not args.rows:
            _usage_error("search grid needs --cols and --rows")
    else:
        if args.m is None or args.n is None:
            _usage_error(f"search {args.problem} needs --m and --n")
    return cmd_search(args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
