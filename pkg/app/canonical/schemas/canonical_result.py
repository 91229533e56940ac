from typing import Any

from pydantic import BaseModel, ConfigDict

from algebra.models.poly import Poly, render_power
from canonical.enum.form_kind import FormKind
from matrix.models.mat import Mat


class CanonicalBlock(BaseModel):
    polynomial: Poly
    exponent: int = 1
    size: int
    offset: int
    eigenvalue: Any = None
    certified: bool = True

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    def render(self) -> str:
        if self.eigenvalue is not None:
            return f"J_{self.size}({self.eigenvalue})"
        if self.exponent == 1:
            return f"H({self.polynomial})"
        return f"H({render_power(self.polynomial, self.exponent)})"


class JordanStructure(BaseModel):
    """Eigenvalue → block sizes in descending order; eigenvalues ascending by their sort key."""

    blocks: list[tuple[Any, list[int]]]

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @property
    def size(self) -> int:
        return sum(sum(sizes) for _, sizes in self.blocks)

    def sizes_for(self, eigenvalue: Any) -> list[int]:
        for value, sizes in self.blocks:
            if value == eigenvalue:
                return list(sizes)
        return []

    def render(self) -> str:
        return "; ".join(f"{value}: {sizes}" for value, sizes in self.blocks)


class CanonicalResult(BaseModel):
    """``transform⁻¹ · A · transform == matrix``; a failed check raises VerificationError instead."""

    kind: FormKind
    blocks: list[CanonicalBlock]
    matrix: Mat
    transform: Mat
    verified: bool
    jordan: JordanStructure | None = None

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


class SimilarityResult(BaseModel):
    similar: bool
    witness: Mat | None = None
    verified: bool = False
    invariants_a: list[Poly]
    invariants_b: list[Poly]

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


class MultiplicativeBlock(BaseModel):
    """c(I + N) together with the diagonal rescaling that makes it a Jordan block."""

    block: Mat
    jordan: Mat
    transform: Mat
    verified: bool

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)
