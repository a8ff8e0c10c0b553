"""File formats: round trips, header handling, and parse failures."""

import pytest

import shlinear as sl
from shlinear import fileio, fixtures, linalg
from shlinear.errors import ParseError


def test_fixture_files_roundtrip_byte_identical(tmp_path):
    for name in fixtures.ALL_FIXTURES:
        if name.endswith(".csv"):
            continue
        src = fixtures.fixture_path(name)
        dst = tmp_path / name
        if name.endswith(".mat"):
            fileio.save_matrix(dst, fileio.load_matrix(src))
        else:
            ctx, r, vectors = fileio.load_vectors(src)
            fileio.save_vectors(dst, ctx, r, vectors)
        assert dst.read_bytes() == src.read_bytes()


def test_matrix_fixture_shape(f5_parity):
    assert (f5_parity.rows, f5_parity.cols) == (8, 12)
    assert f5_parity.ctx.q == 5


def test_set_save_load_roundtrip(tmp_path, binary_s3_set):
    path = tmp_path / "a.set"
    fileio.save_set(path, binary_s3_set)
    again = fileio.load_set(path, 3)
    assert again.elems == binary_s3_set.elems
    assert again.ctx == binary_s3_set.ctx


def test_out_of_range_code_rejected(tmp_path):
    path = tmp_path / "bad.set"
    path.write_text("q=3 r=2\n1 3\n")
    with pytest.raises(ParseError) as info:
        fileio.load_vectors(path)
    assert info.value.line == 2


def test_wrong_entry_count_rejected(tmp_path):
    path = tmp_path / "bad.set"
    path.write_text("q=3 r=3\n1 2\n")
    with pytest.raises(ParseError):
        fileio.load_vectors(path)


def test_missing_header_key_rejected(tmp_path):
    path = tmp_path / "bad.mat"
    path.write_text("q=2 rows=1\n1 0\n")
    with pytest.raises(ParseError):
        fileio.load_matrix(path)


def test_comments_and_blanks_skipped(tmp_path):
    path = tmp_path / "ok.set"
    path.write_text("# heading\n\nq=2 r=2  # trailing\n1 0\n\n0 1\n")
    ctx, r, vectors = fileio.load_vectors(path)
    assert len(vectors) == 2 and ctx.q == 2


def test_poly_header_roundtrip(tmp_path):
    # non-default modulus for F_9: x^2 + 2x + 2
    ctx = sl.make_field(3, 2, (2, 2, 1))
    path = tmp_path / "f9.set"
    fileio.save_vectors(path, ctx, 2, [linalg.FqVector(ctx, (4, 8))])
    text = path.read_text()
    assert "poly=2,2,1" in text.splitlines()[0]
    loaded_ctx, _, vectors = fileio.load_vectors(path)
    assert loaded_ctx is ctx
    assert vectors[0].coords == (4, 8)


def test_default_modulus_header_omits_poly(tmp_path):
    ctx = sl.make_field(3, 2)
    path = tmp_path / "f9.set"
    fileio.save_vectors(path, ctx, 1, [linalg.FqVector(ctx, (5,))])
    assert "poly" not in path.read_text()
    loaded_ctx, _, _ = fileio.load_vectors(path)
    assert loaded_ctx is ctx
