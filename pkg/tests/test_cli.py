import subprocess
import sys

import pytest

from queencover.cli import (
    CoverDocument,
    DocumentError,
    document_from_cover,
    emit_document,
    main,
    parse_document,
    render_cover,
    table_rows,
)
from queencover.constructions import rect_queen_cover


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def normalize(text):
    return [" ".join(line.split()) for line in text.splitlines() if line.strip()]


def test_bound_beta(capsys):
    code, out = run_cli(capsys, "bound", "beta", "--m", "13", "--n", "9")
    assert code == 0 and out.strip() == "5"


def test_bound_alpha(capsys):
    code, out = run_cli(capsys, "bound", "alpha", "--m", "6", "--n", "6")
    assert code == 0 and out.strip() == "5"


def test_bound_classify(capsys):
    code, out = run_cli(capsys, "bound", "classify", "--m", "12", "--n", "10")
    assert code == 0 and out.strip() == "improved +1"
    code, out = run_cli(capsys, "bound", "classify", "--m", "10", "--n", "4")
    assert out.strip() == "trivial -1"


def test_bound_grid_lower(capsys):
    code, out = run_cli(capsys, "bound", "grid-lower", "--m", "9", "--n", "3")
    assert code == 0 and out.strip() == "6"


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bound", "nonsense", "--m", "3", "--n", "3"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_missing_flag_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["search", "beta", "--m", "5"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_construct_queen_verify_roundtrip(capsys):
    code, out = run_cli(capsys, "construct", "queen", "--m", "11", "--n", "11")
    assert code == 0
    doc = parse_document(out)
    assert len(doc.rows) == len(doc.cols) == len(doc.sums) == len(doc.diffs) == 5


def test_construct_bishop(capsys):
    code, out = run_cli(capsys, "construct", "bishop", "--m", "6", "--n", "6")
    assert code == 0
    doc = parse_document(out)
    assert doc.sums == (1, 3, 5, 7, 9)


def test_construct_qe(capsys):
    code, out = run_cli(capsys, "construct", "qe", "--k", "4", "--e", "2", "--d", "2")
    assert code == 0
    doc = parse_document(out)
    assert doc.sums == doc.diffs == (-12, -8, -4, -2, 0, 2, 4, 8, 12)


def test_verify_valid_document(capsys, tmp_path):
    code, out = run_cli(capsys, "construct", "queen", "--m", "11", "--n", "11")
    path = tmp_path / "cover.txt"
    path.write_text(out)
    code, out = run_cli(capsys, "verify", str(path))
    assert code == 0
    assert "valid, size 5" in out
    assert "tight structure" in out


def test_verify_invalid_document(capsys, tmp_path):
    doc = CoverDocument(kind="relaxed-queen", m=2, n=2)
    path = tmp_path / "empty.txt"
    path.write_text(emit_document(doc))
    code, out = run_cli(capsys, "verify", str(path))
    assert code == 1
    assert "invalid" in out
    assert "(0,0)" in out


def test_verify_perturbed_document(capsys, tmp_path):
    cover = rect_queen_cover(13, 9)
    doc = document_from_cover(cover)
    broken = CoverDocument(
        kind="relaxed-queen",
        m=doc.m,
        n=doc.n,
        rows=doc.rows[:-1],
        cols=doc.cols,
        sums=doc.sums,
        diffs=doc.diffs,
    )
    path = tmp_path / "broken.txt"
    path.write_text(emit_document(broken))
    code, out = run_cli(capsys, "verify", str(path))
    assert code == 1
    assert "first uncovered cell" in out


def test_verify_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("kind: relaxed-queen\nm: 3\nn: 3\nrows: x y\n")
    code, out = run_cli(capsys, "verify", str(path))
    assert code == 1
    assert "parse error" in out and "line 4" in out


def test_document_roundtrip_bit_exact():
    cover = rect_queen_cover(12, 10)
    doc = document_from_cover(cover)
    text = emit_document(doc)
    assert parse_document(text) == doc
    assert emit_document(parse_document(text)) == text


def test_document_validation():
    with pytest.raises(DocumentError):
        CoverDocument(kind="mystery", m=3, n=3)
    with pytest.raises(DocumentError):
        CoverDocument(kind="relaxed-queen", m=3)
    with pytest.raises(DocumentError):
        CoverDocument(kind="grid-diagonal")
    with pytest.raises(DocumentError):
        parse_document("kind: relaxed-queen\nkind: bishop\nm: 2\nn: 2\n")
    with pytest.raises(DocumentError):
        parse_document("kind: relaxed-queen\nm: 2\nn: 2\nschema_version: 9\n")


def test_document_arrays_canonicalized():
    doc = CoverDocument(kind="bishop", m=4, n=4, sums=(5, 1, 3, 1), diffs=(0,))
    assert doc.sums == (1, 3, 5)


def test_search_beta_output(capsys):
    code, out = run_cli(capsys, "search", "beta", "--m", "7", "--n", "7")
    assert code == 0
    assert "beta(7x7) = 3" in out
    assert "status: optimal" in out
    doc = parse_document(out.split("status: optimal\n", 1)[1])
    assert doc.kind == "relaxed-queen"


def test_search_gamma_output(capsys):
    code, out = run_cli(capsys, "search", "gamma", "--m", "5", "--n", "5")
    assert code == 0
    assert "gamma(5x5) = 3" in out
    assert "queens:" in out


def test_search_grid_output(capsys):
    code, out = run_cli(
        capsys, "search", "grid", "--cols", "0,1,2", "--rows", "0,1,2"
    )
    assert code == 0
    assert "grid(3x3) = 3" in out


def test_search_cutoff_exit_code(capsys):
    code, out = run_cli(capsys, "search", "beta", "--m", "9", "--n", "9", "--cutoff", "40")
    assert code == 3
    assert "status: cutoff-reached" in out


def test_conjecture_q2_listing_matches_figure(capsys):
    code, out = run_cli(capsys, "conjecture", "q2", "--p", "5", "--e", "8")
    assert code == 0
    expected = """
C':0 1 2 6 7 8  R':0 1 2 6 7 8
C':0 2 3 5 6 8  R':0 2 3 5 6 8
"""
    assert normalize(out) == normalize(expected)


def test_conjecture_q3_listing_matches_figure(capsys):
    code, out = run_cli(capsys, "conjecture", "q3", "--e", "6", "--parity", "odd")
    assert code == 0
    expected = """
S u {e}: 0 6
S u {e}: 0 2 4 6
S u {e}: 0 1 5 6
S u {e}: 0 1 2 4 5 6
"""
    assert normalize(out) == normalize(expected)


def test_conjecture_check_flags(capsys):
    code, out = run_cli(capsys, "conjecture", "q3", "--e", "12", "--check")
    assert code == 0
    assert out.startswith("holds")
    code, out = run_cli(capsys, "conjecture", "q2", "--p", "4", "--e", "8", "--check")
    assert code == 0
    assert out.startswith("holds")


def test_table_values(capsys):
    code, out = run_cli(capsys, "table", "--max-n", "13")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,lower_1987,lower_1995,lower_2007,beta"
    betas = {int(row.split(",")[0]): int(row.split(",")[4]) for row in lines[1:]}
    assert betas[12] == 6 and betas[9] == 5 and betas[3] == 1
    rows = table_rows(15)
    assert rows[12] == (13, 6, 7, 7, 7)  # n = 4k+1 with k=3: the refined bound fires
    assert rows[10] == (11, 5, 5, 5, 5)  # n = 11 sits below the n > 11 threshold
    assert rows[14] == (15, 7, 7, 8, 7)  # n = 15: the 2007 bound exceeds the relaxed value


def test_table_ascii_format(capsys):
    code, out = run_cli(capsys, "table", "--max-n", "5", "--format", "ascii")
    assert code == 0
    assert out.splitlines()[0].split() == ["n", "1987", "1995", "2007", "beta"]


def test_figure_csv(capsys):
    code, out = run_cli(capsys, "figure", "--max-dim", "18")
    assert code == 0
    lines = out.strip().splitlines()
    header = lines[0].split(",")
    assert header[0] == "m/n"
    grid = {int(row.split(",")[0]): row.split(",")[1:] for row in lines[1:-1]}
    assert grid[12][10 - 1] == "+1"
    assert grid[10][4 - 1] == "-1"
    assert lines[-1].startswith("improved_fraction,")


def test_figure_small_all_trivial_or_matched(capsys):
    code, out = run_cli(capsys, "figure", "--max-dim", "3", "--format", "ascii")
    assert code == 0
    glyphs = set("".join(out.splitlines()[:3]))
    assert glyphs <= {"-", "0"}


def test_render_cover_shape():
    cover = rect_queen_cover(5, 4)
    art = render_cover(cover)
    lines = art.splitlines()
    assert len(lines) == 4 and all(len(line) == 5 for line in lines)
    assert set("".join(lines)) <= {"#", "x", "."}


def test_construct_verify_roundtrip_all_kinds_and_dims():
    # the document pipeline behind `construct | verify`, swept over sizes
    from queencover.board import BoardDims, RelaxedCover, SpacedGrid
    from queencover.bounds import alpha_rect, beta_rect
    from queencover.cli import document_from_bishop, document_from_grid_cover
    from queencover.constructions import (
        DiagonalCover,
        bishop_cover,
        uniform_grid,
        uniform_grid_Qe,
    )
    from queencover.verify import is_diagonal_cover, is_perfect_cover, is_relaxed_cover

    for m in range(1, 61):
        for n in range(1, 61):
            queen_doc = parse_document(emit_document(document_from_cover(rect_queen_cover(m, n))))
            cover = RelaxedCover(
                BoardDims(queen_doc.m, queen_doc.n),
                frozenset(queen_doc.rows),
                frozenset(queen_doc.cols),
                frozenset(queen_doc.sums),
                frozenset(queen_doc.diffs),
            )
            assert is_relaxed_cover(cover) and cover.size == beta_rect(m, n), (m, n)
            bishop_doc = parse_document(
                emit_document(document_from_bishop(bishop_cover(m, n), BoardDims(m, n)))
            )
            dc = DiagonalCover(frozenset(bishop_doc.sums), frozenset(bishop_doc.diffs))
            assert is_diagonal_cover(SpacedGrid.board(m, n), dc), (m, n)
            assert dc.size == alpha_rect(m, n), (m, n)
    for k in range(7):
        grid = uniform_grid(k, 2)
        for e in range(k + 1):
            doc = parse_document(
                emit_document(document_from_grid_cover(uniform_grid_Qe(k, e, 2), grid))
            )
            rebuilt = DiagonalCover(frozenset(doc.sums), frozenset(doc.diffs))
            assert is_perfect_cover(SpacedGrid(doc.grid_cols, doc.grid_rows), rebuilt), (k, e)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "queencover", "bound", "beta", "--m", "7", "--n", "7"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "3"
