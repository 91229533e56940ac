from pydantic import BaseModel, ConfigDict

from algebra.models.binary_form import BinaryForm, HomogeneousPoint
from algebra.models.poly import Poly, render_power, superscript
from matrix.models.mat import Mat
from pencil.enum.elementary_form_kind import ElementaryFormKind
from pencil.models.pencil import Pencil


class PencilDivisor(BaseModel):
    """Elementary divisor of a regular pencil: a power of an irreducible binary form."""

    form: BinaryForm
    exponent: int
    factor: Poly | None = None
    point: HomogeneousPoint | None = None
    at_infinity: bool = False
    certified: bool = True

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    def key(self) -> tuple:
        if self.at_infinity:
            return (1, (), -self.exponent)
        return (0, self.factor.divisor_key(), -self.exponent)

    def render(self, machine: bool = False) -> str:
        if self.at_infinity:
            if self.exponent == 1:
                return "v"
            return f"v^{self.exponent}" if machine else f"v{superscript(self.exponent)}"
        return render_power(self.factor, self.exponent, machine=machine)


class PencilInvariants(BaseModel):
    size: int
    regular: bool
    generic_rank: int
    determinant: BinaryForm
    invariant_factors: list[Poly]
    divisors: list[PencilDivisor]
    diagnosis: str | None = None

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @property
    def finite(self) -> list[PencilDivisor]:
        return [d for d in self.divisors if not d.at_infinity]

    @property
    def infinite(self) -> list[PencilDivisor]:
        return [d for d in self.divisors if d.at_infinity]

    def signature(self) -> list[tuple]:
        return [d.key() for d in self.divisors]


class PencilReduction(BaseModel):
    """``left · (uP + vQ) · right == canonical``, checked exactly before it is returned."""

    left: Mat
    right: Mat
    canonical: Pencil
    verified: bool

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


class PencilEquivalence(BaseModel):
    """``hᵀ(uP + vQ)k == uP′ + vQ′`` when ``verified``.

    Equivalent pencils come without a witness only when the base field has no point
    (c:1) with det(cP + Q) ≠ 0; ``note`` then says so.
    """

    equivalent: bool
    h: Mat | None = None
    k: Mat | None = None
    verified: bool = False
    note: str | None = None

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


class KroneckerForm(BaseModel):
    kind: ElementaryFormKind
    size: int
    matrix: Mat
    pencil: Pencil
    determinant: BinaryForm
    expected: BinaryForm
    sign: int | None

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @property
    def matches(self) -> bool:
        return self.sign is not None
