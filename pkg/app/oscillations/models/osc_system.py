from pydantic import BaseModel, ConfigDict, model_validator

from algebra.enum.domain_kind import DomainKind
from common.errors.exceptions import DimensionError, DomainMismatchError, InvalidParameterError
from matrix.models.mat import Mat
from matrix.services.matrix_service import get_matrix_service


class OscSystem(BaseModel):
    """Small oscillations M·y'' + K·y = 0 with M symmetric positive definite and K symmetric."""

    mass: Mat
    stiffness: Mat

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @model_validator(mode="after")
    def check_matrices(self) -> "OscSystem":
        m, k = self.mass, self.stiffness
        if not m.is_square() or m.shape != k.shape:
            raise DimensionError(f"OscSystem: M {m.shape} and K {k.shape} must be square of equal size")
        if m.domain != k.domain or m.domain.kind is not DomainKind.RATIONAL:
            raise DomainMismatchError("OscSystem: M and K must both be rational matrices")
        if not m.is_symmetric() or not k.is_symmetric():
            raise InvalidParameterError("OscSystem: M and K must be symmetric")
        det = get_matrix_service().det
        for size in range(1, m.nrows + 1):
            if det(m.leading(size)).sign() <= 0:
                raise InvalidParameterError(
                    f"OscSystem: M is not positive definite (leading minor of order {size} is not positive)"
                )
        return self

    @property
    def size(self) -> int:
        return self.mass.nrows
