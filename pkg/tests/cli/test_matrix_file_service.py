from fractions import Fraction
from pathlib import Path

import pytest

from algebra.models.domain import GF, QQ, ZZ
from cli.services.matrix_file_service import MatrixFileService, get_matrix_file_service
from common.errors.exceptions import DomainMismatchError, InvalidParameterError, MatrixFileError
from matrix.models.mat import Mat


@pytest.fixture
def files() -> MatrixFileService:
    return get_matrix_file_service()


def test_parse_rational_matrix_with_comments(files: MatrixFileService) -> None:
    text = "# header comment\nFIELD Q\n\nROWS 2 COLS 2   # shape\n1/2 0\n0 -3/4\n"
    m = files.parse_matrix(text)
    assert m == Mat([[Fraction(1, 2), 0], [0, Fraction(-3, 4)]], QQ)


def test_parse_prime_field_and_integer_matrices(files: MatrixFileService) -> None:
    assert files.parse_matrix("FIELD GF 5\nROWS 1 COLS 2\n7 -1\n") == Mat([[2, 4]], GF(5))
    assert files.parse_matrix("FIELD Z\nROWS 1 COLS 1\n-12\n") == Mat([[-12]], ZZ)


def test_printed_text_is_a_fixed_point(files: MatrixFileService) -> None:
    m = files.parse_matrix("FIELD Q\nROWS 2 COLS 3\n  1/2  -4/6 0\n3 0 -7\n")
    printed = files.print_matrix(m)
    assert printed == "FIELD Q\nROWS 2 COLS 3\n1/2 -2/3 0\n3 0 -7\n"
    assert files.print_matrix(files.parse_matrix(printed)) == printed


@pytest.mark.parametrize(
    "text, message",
    [
        ("FIELD Q\nROWS 2 COLS 2\n1 2\n3\n", "line 4, column 2: expected 2 entries, found 1"),
        ("FIELD Q\nROWS 1 COLS 2\n1 −2\n", "line 3, column 3: entry '−2' uses a non-ASCII minus sign"),
        ("FIELD Q\nROWS 1 COLS 1\n1/0\n", "line 3, column 1: zero denominator in '1/0'"),
        ("FIELD GF 4\nROWS 1 COLS 1\n1\n", "line 1, column 10: modulus 4 is not prime"),
        ("FIELD Q\nROWS 2 COLS 1\n5\n", "line 4, column 1: expected 2 rows, found 1"),
        ("FIELD Q\nROWS 1 COLS 1\n5\n6\n", "line 4, column 1: unexpected content after 1 rows"),
        ("FIELD GF 3\nROWS 1 COLS 1\n1/2\n", "line 3, column 1: '1/2' is not an integer"),
        ("FIELD R\nROWS 1 COLS 1\n1\n", "line 1, column 7: field must be Q, Z or GF <p>"),
        ("FIELD Q\nROWS 0 COLS 1\n", "line 2, column 6: dimension '0' is not a positive integer"),
        ("FIELD Q\nROWS ² COLS 1\n1\n", "line 2, column 6: dimension '²' is not a positive integer"),
        ("FIELD GF ³\nROWS 1 COLS 1\n1\n", "line 1, column 10: modulus '³' is not a positive integer"),
        ("", "line 1, column 1: empty matrix file"),
    ],
)
def test_parse_errors_carry_line_and_column(files: MatrixFileService, text: str, message: str) -> None:
    with pytest.raises(MatrixFileError) as info:
        files.parse_matrix(text)
    assert str(info.value).startswith(message)
    assert info.value.exit_code == 1


def test_read_matrix_prefixes_the_path(files: MatrixFileService, tmp_path: Path) -> None:
    path = tmp_path / "broken.mat"
    path.write_text("FIELD Q\nROWS 1 COLS 2\n1\n", encoding="utf-8")
    with pytest.raises(MatrixFileError) as info:
        files.read_matrix(path)
    assert str(info.value) == f"line 3, column 2: {path}: expected 2 entries, found 1"


def test_read_missing_file(files: MatrixFileService, tmp_path: Path) -> None:
    with pytest.raises(InvalidParameterError):
        files.read_matrix(tmp_path / "absent.mat")


def test_read_matrix_returns_canonical_text(files: MatrixFileService, fixtures_dir: Path) -> None:
    m, text = files.read_matrix(fixtures_dir / "gf2_companion.mat")
    assert m.domain == GF(2)
    assert text == "FIELD GF 2\nROWS 2 COLS 2\n1 1\n1 0\n"


def test_to_integer(files: MatrixFileService) -> None:
    m = files.to_integer(Mat([[2, -4]], QQ))
    assert m.domain == ZZ and m == Mat([[2, -4]], ZZ)
    with pytest.raises(DomainMismatchError):
        files.to_integer(Mat([[Fraction(1, 2)]], QQ))
    with pytest.raises(DomainMismatchError):
        files.to_integer(Mat([[1]], GF(3)))
