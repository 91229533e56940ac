from pydantic import BaseModel, ConfigDict

from matrix.models.mat import Mat


class Echelon(BaseModel):
    reduced: Mat
    pivots: list[int]

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @property
    def rank(self) -> int:
        return len(self.pivots)
