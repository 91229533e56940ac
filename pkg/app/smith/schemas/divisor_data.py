from typing import Any

from pydantic import BaseModel, ConfigDict

from algebra.models.binary_form import HomogeneousPoint
from algebra.models.poly import render_power, superscript


class ElementaryDivisor(BaseModel):
    """A prime power φ^e; ``factor`` is a monic irreducible polynomial or a prime integer."""

    factor: Any
    exponent: int
    certified: bool = True
    point: HomogeneousPoint | None = None

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    def sort_key(self) -> tuple:
        key = self.factor.divisor_key() if hasattr(self.factor, "divisor_key") else (self.factor,)
        return (key, -self.exponent)

    def expand(self) -> Any:
        return self.factor**self.exponent

    def render(self, machine: bool = False) -> str:
        if isinstance(self.factor, int):
            if self.exponent == 1:
                return str(self.factor)
            return f"{self.factor}^{self.exponent}" if machine else f"{self.factor}{superscript(self.exponent)}"
        return render_power(self.factor, self.exponent, machine=machine)


class DivisorData(BaseModel):
    domain: str
    size: int
    rank: int
    gcd_chain: list[Any]
    invariant_factors: list[Any]
    elementary_divisors: list[ElementaryDivisor]

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @property
    def unsplit(self) -> bool:
        return any(not d.certified for d in self.elementary_divisors)

    @property
    def nontrivial_invariant_factors(self) -> list[Any]:
        return [f for f in self.invariant_factors if f and not _is_one(f)]

    def render_elementary_divisors(self, machine: bool = False) -> str:
        return ", ".join(d.render(machine=machine) for d in self.elementary_divisors)


def _is_one(f: Any) -> bool:
    return f.is_one() if hasattr(f, "is_one") else f == 1
