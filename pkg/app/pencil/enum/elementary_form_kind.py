from enum import Enum


class ElementaryFormKind(str, Enum):
    FIRST = "I"
    SECOND = "II"
    THIRD = "III"

    def minimum_size(self) -> int:
        match self:
            case ElementaryFormKind.FIRST | ElementaryFormKind.SECOND | ElementaryFormKind.THIRD:
                return 2
            case _:
                raise ValueError("ElementaryFormKind:minimum_size: Invalid form kind")

    def needs_even_size(self) -> bool:
        match self:
            case ElementaryFormKind.SECOND:
                return True
            case ElementaryFormKind.FIRST | ElementaryFormKind.THIRD:
                return False
            case _:
                raise ValueError("ElementaryFormKind:needs_even_size: Invalid form kind")
