from fractions import Fraction

from pydantic import BaseModel, ConfigDict


class RootInterval(BaseModel):
    """Isolating interval of one real root: the point ``lo == hi`` or the open interval (lo, hi)."""

    lo: Fraction
    hi: Fraction
    certificate: int = 1

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Fraction | None:
        return self.lo if self.exact else None

    def sign(self) -> int:
        if self.exact:
            return (self.lo > 0) - (self.lo < 0)
        if self.lo >= 0:
            return 1
        if self.hi <= 0:
            return -1
        raise ValueError("RootInterval:sign: interval straddles zero")

    def contains(self, x: Fraction) -> bool:
        if self.exact:
            return x == self.lo
        return self.lo < x < self.hi

    def render(self) -> str:
        if self.exact:
            return str(self.lo)
        return f"({self.lo}, {self.hi})"
