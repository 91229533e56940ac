from typing import Any

from pydantic import BaseModel, ConfigDict

from matrix.models.mat import Mat
from oscillations.enum.inertia_method import InertiaMethod


class InertiaResult(BaseModel):
    """Sylvester inertia with its certificate ``congruenceᵀ · K · congruence == diag(diagonal)``."""

    positive: int
    negative: int
    zero: int
    method: InertiaMethod
    principal_minors: list[Any]
    quotients: list[Any] | None = None
    diagonal: list[Any]
    congruence: Mat
    pivot_operations: list[str] = []

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @property
    def signature(self) -> tuple[int, int, int]:
        return (self.positive, self.negative, self.zero)
