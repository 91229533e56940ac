from enum import Enum


class DomainKind(str, Enum):
    RATIONAL = "Q"
    PRIME_FIELD = "GF"
    INTEGER = "Z"
    POLYNOMIAL = "POLY"

    def is_field(self) -> bool:
        match self:
            case DomainKind.RATIONAL | DomainKind.PRIME_FIELD:
                return True
            case DomainKind.INTEGER | DomainKind.POLYNOMIAL:
                return False
            case _:
                raise ValueError("DomainKind:is_field: Invalid domain kind")
