from typing import Any

from algebra.models.binary_form import BinaryForm
from algebra.models.domain import QQ, ScalarField
from common.errors.exceptions import InvalidParameterError
from common.log.logger import logger
from matrix.models.mat import Mat
from pencil.enum.elementary_form_kind import ElementaryFormKind
from pencil.models.pencil import Pencil
from pencil.schemas.pencil_invariants import KroneckerForm
from pencil.services.pencil_service import PencilService, get_pencil_service


class KroneckerService:
    """The three elementary bilinear forms and the pencils uM + vMᵀ they generate."""

    def __init__(self, pencil_service: PencilService) -> None:
        self._pencil_service = pencil_service

    def kronecker_elementary_form(
        self,
        kind: ElementaryFormKind,
        size: int,
        a: Any = None,
        b: Any = None,
        domain: ScalarField = QQ,
    ) -> KroneckerForm:
        self._validate(kind, size, a, b, domain)
        matrix = self.coefficient_matrix(kind, size, a, b, domain)
        pencil = Pencil(matrix, matrix.transpose())
        determinant = self._pencil_service.pencil_det(pencil)
        expected = self.expected_determinant(kind, size, a, b, domain)
        if expected.is_zero():
            sign = 1 if determinant.is_zero() else None
        else:
            sign = determinant.sign_relative_to(expected)
        if sign is None:
            logger.warning(f"Form {kind.value} of size {size}: determinant {determinant} != ±{expected}")
        return KroneckerForm(
            kind=kind,
            size=size,
            matrix=matrix,
            pencil=pencil,
            determinant=determinant,
            expected=expected,
            sign=sign,
        )

    def coefficient_matrix(
        self,
        kind: ElementaryFormKind,
        size: int,
        a: Any = None,
        b: Any = None,
        domain: ScalarField = QQ,
    ) -> Mat:
        """Coefficients M of the bilinear form Σ M[i][j]·x_i·y_j."""
        rows = [[domain.zero] * size for _ in range(size)]
        n = size - 1
        for h in range(n):
            match kind:
                case ElementaryFormKind.FIRST:
                    upper, lower = domain((-1) ** n), domain((-1) ** h)
                case ElementaryFormKind.SECOND:
                    upper, lower = domain((-1) ** (size // 2)), domain((-1) ** h)
                case ElementaryFormKind.THIRD:
                    upper, lower = domain(a), domain(b)
                case _:
                    raise InvalidParameterError(f"KroneckerService: unknown form kind {kind}")
            rows[h][h + 1] = rows[h][h + 1] + upper
            rows[h + 1][h] = rows[h + 1][h] + lower
        if kind is ElementaryFormKind.FIRST:
            rows[n][n] = rows[n][n] + domain.one
        return Mat.from_entries(rows, domain)

    def expected_determinant(
        self,
        kind: ElementaryFormKind,
        size: int,
        a: Any = None,
        b: Any = None,
        domain: ScalarField = QQ,
    ) -> BinaryForm:
        match kind:
            case ElementaryFormKind.FIRST:
                return BinaryForm.linear(1, (-1) ** (size - 1), domain) ** size
            case ElementaryFormKind.SECOND:
                return BinaryForm.linear(1, (-1) ** (size // 2), domain) ** size
            case ElementaryFormKind.THIRD:
                if size % 2:
                    return BinaryForm([], domain, size)
                m = size // 2
                return BinaryForm.linear(a, b, domain) ** m * BinaryForm.linear(b, a, domain) ** m
            case _:
                raise InvalidParameterError(f"KroneckerService: unknown form kind {kind}")

    def _validate(self, kind: ElementaryFormKind, size: int, a: Any, b: Any, domain: ScalarField) -> None:
        if size < kind.minimum_size():
            raise InvalidParameterError(
                f"KroneckerService: form {kind.value} needs size ≥ {kind.minimum_size()}, got {size}"
            )
        if kind.needs_even_size() and size % 2:
            raise InvalidParameterError(f"KroneckerService: form {kind.value} needs an even size")
        if kind is ElementaryFormKind.THIRD:
            if a is None or b is None:
                raise InvalidParameterError("KroneckerService: form III needs parameters a and b")
            if domain(a) ** 2 == domain(b) ** 2:
                raise InvalidParameterError("KroneckerService: form III needs a² ≠ b²")


def get_kronecker_service() -> KroneckerService:
    return KroneckerService(pencil_service=get_pencil_service())
