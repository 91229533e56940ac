import re
from fractions import Fraction
from pathlib import Path

from algebra.enum.domain_kind import DomainKind
from algebra.models.domain import QQ, ZZ, Domain, PrimeField, ScalarField
from common.errors.exceptions import (
    DomainMismatchError,
    InvalidParameterError,
    MatrixFileError,
)
from common.log.logger import logger
from matrix.models.mat import Mat

TOKEN = re.compile(r"\S+")
RATIONAL_ENTRY = re.compile(r"-?\d+(/\d+)?")
INTEGER_ENTRY = re.compile(r"-?\d+")
NATURAL = re.compile(r"[0-9]+")
NON_ASCII_MINUS = "−‐‑–—﹣－"


class MatrixFileService:
    """Reads and writes the plain-text matrix format.

    ::

        FIELD Q            # or FIELD GF <p>, or FIELD Z
        ROWS 2 COLS 2
        1/2 0
        0 -3/4
    """

    def parse_matrix(self, text: str) -> Mat:
        lines = self._significant_lines(text)
        if not lines:
            raise MatrixFileError("empty matrix file, expected a FIELD header", line=1)
        domain = self._parse_field(*lines[0])
        if len(lines) < 2:
            raise MatrixFileError("missing ROWS/COLS header", line=lines[0][0] + 1)
        nrows, ncols = self._parse_shape(*lines[1])
        body = lines[2:]
        if len(body) < nrows:
            last = body[-1][0] if body else lines[1][0]
            raise MatrixFileError(f"expected {nrows} rows, found {len(body)}", line=last + 1)
        if len(body) > nrows:
            number, tokens = body[nrows]
            raise MatrixFileError(
                f"unexpected content after {nrows} rows", line=number, column=tokens[0][0]
            )
        rows = [self._parse_row(number, tokens, ncols, domain) for number, tokens in body]
        return Mat(rows, domain)

    def read_matrix(self, path: str | Path) -> tuple[Mat, str]:
        """The parsed matrix and its canonical printed text."""
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise InvalidParameterError(f"cannot read matrix file {path}: {e.strerror}") from e
        except UnicodeDecodeError as e:
            raise InvalidParameterError(f"matrix file {path} is not UTF-8") from e
        try:
            m = self.parse_matrix(text)
        except MatrixFileError as e:
            raise MatrixFileError(f"{path}: {e.detail}", line=e.line, column=e.column) from None
        logger.debug(f"Read {m.nrows}x{m.ncols} matrix over {m.domain} from {path}")
        return m, self.print_matrix(m)

    def read_matrices(self, *paths: str | Path) -> tuple[list[Mat], list[str]]:
        loaded = [self.read_matrix(path) for path in paths]
        return [m for m, _ in loaded], [text for _, text in loaded]

    def print_matrix(self, m: Mat) -> str:
        header = [self._field_header(m.domain), f"ROWS {m.nrows} COLS {m.ncols}"]
        body = [" ".join(str(x) for x in row) for row in m.rows()]
        return "\n".join(header + body) + "\n"

    def to_integer(self, m: Mat) -> Mat:
        """Reinterpret a matrix over Q with integral entries as a matrix over Z."""
        if m.domain.kind is DomainKind.INTEGER:
            return m
        if m.domain != QQ:
            raise DomainMismatchError(f"MatrixFileService:to_integer: {m.domain} entries are not integers")
        entries = []
        for i, row in enumerate(m.rows()):
            for j, x in enumerate(row):
                if x.value.denominator != 1:
                    raise DomainMismatchError(
                        f"MatrixFileService:to_integer: entry ({i + 1},{j + 1}) = {x} is not an integer"
                    )
            entries.append([x.value.numerator for x in row])
        return Mat(entries, ZZ)

    def _significant_lines(self, text: str) -> list[tuple[int, list[tuple[int, str]]]]:
        """(line number, [(column, token)]) for every line with content outside comments."""
        out = []
        for number, raw in enumerate(text.splitlines(), start=1):
            content = raw.split("#", 1)[0]
            tokens = [(m.start() + 1, m.group()) for m in TOKEN.finditer(content)]
            if tokens:
                out.append((number, tokens))
        return out

    def _parse_field(self, number: int, tokens: list[tuple[int, str]]) -> Domain:
        words = [t for _, t in tokens]
        if words[0] != "FIELD":
            raise MatrixFileError(f"expected FIELD, found {words[0]!r}", line=number, column=tokens[0][0])
        match words[1:]:
            case ["Q"]:
                return QQ
            case ["Z"]:
                return ZZ
            case ["GF", p]:
                column = tokens[2][0]
                if not NATURAL.fullmatch(p):
                    raise MatrixFileError(f"modulus {p!r} is not a positive integer", line=number, column=column)
                try:
                    return PrimeField(int(p))
                except InvalidParameterError:
                    raise MatrixFileError(f"modulus {p} is not prime", line=number, column=column) from None
            case _:
                column = tokens[1][0] if len(tokens) > 1 else tokens[0][0] + len(words[0])
                raise MatrixFileError("field must be Q, Z or GF <p>", line=number, column=column)

    def _parse_shape(self, number: int, tokens: list[tuple[int, str]]) -> tuple[int, int]:
        words = [t for _, t in tokens]
        if len(words) != 4 or words[0] != "ROWS" or words[2] != "COLS":
            raise MatrixFileError("expected 'ROWS <r> COLS <c>'", line=number, column=tokens[0][0])
        shape = []
        for column, word in (tokens[1], tokens[3]):
            if not NATURAL.fullmatch(word) or int(word) < 1:
                raise MatrixFileError(f"dimension {word!r} is not a positive integer", line=number, column=column)
            shape.append(int(word))
        return shape[0], shape[1]

    def _parse_row(
        self,
        number: int,
        tokens: list[tuple[int, str]],
        ncols: int,
        domain: Domain,
    ) -> list:
        if len(tokens) != ncols:
            column = tokens[ncols][0] if len(tokens) > ncols else tokens[-1][0] + len(tokens[-1][1])
            raise MatrixFileError(f"expected {ncols} entries, found {len(tokens)}", line=number, column=column)
        return [self._parse_entry(number, column, token, domain) for column, token in tokens]

    def _parse_entry(self, number: int, column: int, token: str, domain: Domain) -> object:
        if token[0] in NON_ASCII_MINUS:
            raise MatrixFileError(
                f"entry {token!r} uses a non-ASCII minus sign; write '-'", line=number, column=column
            )
        if isinstance(domain, ScalarField) and domain.kind is DomainKind.RATIONAL:
            if not RATIONAL_ENTRY.fullmatch(token):
                raise MatrixFileError(f"{token!r} is not a rational number a or a/b", line=number, column=column)
            numerator, _, denominator = token.partition("/")
            if denominator and int(denominator) == 0:
                raise MatrixFileError(f"zero denominator in {token!r}", line=number, column=column)
            return Fraction(int(numerator), int(denominator or 1))
        if not INTEGER_ENTRY.fullmatch(token):
            raise MatrixFileError(f"{token!r} is not an integer", line=number, column=column)
        return int(token)

    def _field_header(self, domain: Domain) -> str:
        match domain.kind:
            case DomainKind.RATIONAL:
                return "FIELD Q"
            case DomainKind.PRIME_FIELD:
                return f"FIELD GF {domain.characteristic}"
            case DomainKind.INTEGER:
                return "FIELD Z"
            case _:
                raise DomainMismatchError(f"MatrixFileService: matrices over {domain} have no file format")


def get_matrix_file_service() -> MatrixFileService:
    return MatrixFileService()
