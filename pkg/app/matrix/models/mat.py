from typing import Any, Callable, Iterable, Sequence

from algebra.models.domain import Domain
from common.errors.exceptions import DimensionError


class Mat:
    """Immutable dense matrix with entries in a single domain."""

    __slots__ = ("_domain", "_rows", "_shape")

    def __init__(self, rows: Sequence[Sequence[Any]], domain: Domain) -> None:
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DimensionError("Mat:__init__: a matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("Mat:__init__: rows have different lengths")
        self._domain = domain
        self._rows = tuple(tuple(domain(x) for x in r) for r in rows)
        self._shape = (len(rows), width)

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence[Any]], domain: Domain) -> "Mat":
        """Build without coercion; entries must already belong to ``domain``."""
        obj = cls.__new__(cls)
        obj._domain = domain
        obj._rows = tuple(tuple(r) for r in rows)
        obj._shape = (len(obj._rows), len(obj._rows[0]))
        return obj

    @classmethod
    def identity(cls, n: int, domain: Domain) -> "Mat":
        one, zero = domain.one, domain.zero
        return cls.from_entries([[one if i == j else zero for j in range(n)] for i in range(n)], domain)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, domain: Domain) -> "Mat":
        zero = domain.zero
        return cls.from_entries([[zero] * ncols for _ in range(nrows)], domain)

    @classmethod
    def diag(cls, values: Sequence[Any], domain: Domain) -> "Mat":
        n = len(values)
        zero = domain.zero
        return cls.from_entries(
            [[domain(values[i]) if i == j else zero for j in range(n)] for i in range(n)], domain
        )

    @classmethod
    def column(cls, values: Sequence[Any], domain: Domain) -> "Mat":
        return cls([[v] for v in values], domain)

    @classmethod
    def from_columns(cls, columns: Sequence["Mat"], domain: Domain) -> "Mat":
        if not columns:
            raise DimensionError("Mat:from_columns: no columns")
        n = columns[0].nrows
        return cls.from_entries(
            [[c[i, j] for c in columns for j in range(c.ncols)] for i in range(n)], domain
        )

    @classmethod
    def block_diag(cls, blocks: Sequence["Mat"], domain: Domain) -> "Mat":
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        rows = [[domain.zero] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    rows[r0 + i][c0 + j] = b[i, j]
            r0 += b.nrows
            c0 += b.ncols
        return cls.from_entries(rows, domain)

    @property
    def domain(self) -> Domain:
        return self._domain

    @property
    def shape(self) -> tuple[int, int]:
        return self._shape

    @property
    def nrows(self) -> int:
        return self._shape[0]

    @property
    def ncols(self) -> int:
        return self._shape[1]

    def is_square(self) -> bool:
        return self._shape[0] == self._shape[1]

    def __getitem__(self, index: tuple[int, int]) -> Any:
        i, j = index
        return self._rows[i][j]

    def rows(self) -> tuple[tuple[Any, ...], ...]:
        return self._rows

    def row(self, i: int) -> tuple[Any, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[Any, ...]:
        return tuple(r[j] for r in self._rows)

    def column_mat(self, j: int) -> "Mat":
        return Mat.from_entries([[r[j]] for r in self._rows], self._domain)

    def columns(self) -> list["Mat"]:
        return [self.column_mat(j) for j in range(self.ncols)]

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "Mat":
        cols = list(cols)
        return Mat.from_entries([[self._rows[i][j] for j in cols] for i in rows], self._domain)

    def leading(self, k: int) -> "Mat":
        return self.submatrix(range(k), range(k))

    def select_columns(self, cols: Iterable[int]) -> "Mat":
        return self.submatrix(range(self.nrows), cols)

    def transpose(self) -> "Mat":
        return Mat.from_entries(list(zip(*self._rows)), self._domain)

    @property
    def T(self) -> "Mat":
        return self.transpose()

    def map(self, fn: Callable[[Any], Any], domain: Domain | None = None) -> "Mat":
        domain = domain or self._domain
        return Mat.from_entries([[fn(x) for x in r] for r in self._rows], domain)

    def _same_shape(self, other: "Mat", op: str) -> None:
        if self._shape != other._shape:
            raise DimensionError(f"Mat:{op}: shapes {self._shape} and {other._shape} differ")

    def __add__(self, other: "Mat") -> "Mat":
        self._same_shape(other, "__add__")
        return Mat.from_entries(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], self._domain
        )

    def __sub__(self, other: "Mat") -> "Mat":
        self._same_shape(other, "__sub__")
        return Mat.from_entries(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], self._domain
        )

    def __neg__(self) -> "Mat":
        return self.map(lambda x: -x)

    def scale(self, c: Any) -> "Mat":
        c = self._domain(c)
        return self.map(lambda x: c * x)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise DimensionError(f"Mat:__matmul__: cannot multiply {self._shape} by {other._shape}")
        cols = list(zip(*other._rows))
        zero = self._domain.zero
        out = []
        for r in self._rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Mat.from_entries(out, self._domain)

    def __pow__(self, exponent: int) -> "Mat":
        result = Mat.identity(self.nrows, self._domain)
        for _ in range(exponent):
            result = result @ self
        return result

    def trace(self) -> Any:
        acc = self._domain.zero
        for i in range(min(self._shape)):
            acc = acc + self._rows[i][i]
        return acc

    def is_zero(self) -> bool:
        return not any(x for r in self._rows for x in r)

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.transpose()

    def is_diagonal(self) -> bool:
        return all(not x for i, r in enumerate(self._rows) for j, x in enumerate(r) if i != j)

    def diagonal(self) -> list[Any]:
        return [self._rows[i][i] for i in range(min(self._shape))]

    def to_lists(self) -> list[list[Any]]:
        return [list(r) for r in self._rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self._shape == other._shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def render(self) -> str:
        cells = [[str(x) for x in r] for r in self._rows]
        widths = [max(len(cells[i][j]) for i in range(self.nrows)) for j in range(self.ncols)]
        return "\n".join(
            "[ " + "  ".join(c.rjust(w) for c, w in zip(r, widths)) + " ]" for r in cells
        )

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Mat({self.to_lists()!r}, {self._domain})"
