from enum import Enum


class FormKind(str, Enum):
    RATIONAL = "rational"
    PRIMARY = "primary"
    JORDAN = "jordan"

    def title(self) -> str:
        match self:
            case FormKind.RATIONAL:
                return "Frobenius (rational) canonical form"
            case FormKind.PRIMARY:
                return "Primary rational canonical form"
            case FormKind.JORDAN:
                return "Jordan canonical form"
            case _:
                raise ValueError("FormKind:title: Invalid form kind")
