from typing import Any

from pydantic import BaseModel, ConfigDict

from matrix.models.mat import Mat


class SmithResult(BaseModel):
    """``u @ m @ v == s`` with ``u`` and ``v`` unimodular and ``u_inverse == u⁻¹``."""

    u: Mat
    s: Mat
    v: Mat
    u_inverse: Mat

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @property
    def diagonal(self) -> list[Any]:
        return self.s.diagonal()

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)
