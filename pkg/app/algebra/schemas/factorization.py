from typing import Any

from pydantic import BaseModel, ConfigDict

from algebra.models.poly import Poly, render_power


class FactorBlock(BaseModel):
    factor: Poly
    exponent: int
    certified: bool = True

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    def render(self, machine: bool = False) -> str:
        return render_power(self.factor, self.exponent, machine=machine)


class Factorization(BaseModel):
    unit: Any
    blocks: list[FactorBlock]

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @property
    def unsplit(self) -> list[FactorBlock]:
        return [b for b in self.blocks if not b.certified]

    def pairs(self) -> list[tuple[Poly, int]]:
        return [(b.factor, b.exponent) for b in self.blocks]

    def expand(self, var: str = "λ") -> Poly:
        if not self.blocks:
            return Poly.constant(self.unit, self.unit.domain, var)
        first = self.blocks[0].factor
        result = Poly.constant(self.unit, first.domain, first.var)
        for block in self.blocks:
            result = result * block.factor**block.exponent
        return result

    def render(self, machine: bool = False) -> str:
        body = "·".join(b.render(machine=machine) for b in self.blocks)
        if self.unit == 1 and body:
            return body
        return f"{self.unit}·{body}" if body else str(self.unit)
