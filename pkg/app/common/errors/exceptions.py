from typing import Any, Sequence


class CanonformError(Exception):
    """Root of every error raised by the library; ``exit_code`` drives the CLI."""

    exit_code: int = 1


class InputError(CanonformError, ValueError):
    exit_code = 1


class MathematicalRefusal(CanonformError):
    """The question is well posed but answering it needs theory the tool does not carry."""

    exit_code = 2


class InternalError(CanonformError, ArithmeticError):
    exit_code = 3


class DomainMismatchError(InputError):
    pass


class ZeroPolynomialError(InputError):
    pass


class DimensionError(InputError):
    pass


class NotARootError(InputError):
    pass


class ChainDivisibilityError(InputError):
    pass


class NonLinearFactorError(InputError):
    pass


class OracleCapExceededError(InputError):
    pass


class InvalidParameterError(InputError):
    pass


class InconsistentInvariantsError(InputError):
    pass


class SingularMatrixError(InputError):
    def __init__(self, message: str, determinant: Any = 0) -> None:
        super().__init__(message)
        self.determinant = determinant


class MatrixFileError(InputError):
    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.detail = message
        self.line = line
        self.column = column


class SplitFieldRequiredError(MathematicalRefusal):
    def __init__(self, message: str, factors: Sequence[Any] = ()) -> None:
        super().__init__(message)
        self.factors = list(factors)


class SingularPencilError(MathematicalRefusal):
    def __init__(self, message: str, generic_rank: int | None = None) -> None:
        super().__init__(message)
        self.generic_rank = generic_rank


class WitnessUnavailableError(MathematicalRefusal):
    pass


class IrrationalSpectrumError(MathematicalRefusal):
    pass


class InexactDivisionError(InternalError):
    pass


class VerificationError(InternalError):
    pass
