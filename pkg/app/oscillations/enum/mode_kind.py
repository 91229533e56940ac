from enum import Enum


class ModeKind(str, Enum):
    OSCILLATORY = "oscillatory"
    AFFINE = "affine"
    HYPERBOLIC = "hyperbolic"

    @classmethod
    def from_sign(cls, sign: int) -> "ModeKind":
        if sign > 0:
            return cls.OSCILLATORY
        if sign < 0:
            return cls.HYPERBOLIC
        return cls.AFFINE

    def term(self, index: int, frequency: str) -> str:
        if frequency == "1":
            angle = "t"
        elif frequency.startswith("√"):
            angle = f"{frequency}·t"
        else:
            angle = f"{frequency}t"
        match self:
            case ModeKind.OSCILLATORY:
                return f"a{index}·sin({angle} + β{index})·v{index}"
            case ModeKind.AFFINE:
                return f"(a{index} + b{index}·t)·v{index}"
            case ModeKind.HYPERBOLIC:
                return f"(a{index}·cosh({angle}) + b{index}·sinh({angle}))·v{index}"
            case _:
                raise ValueError("ModeKind:term: Invalid mode kind")
