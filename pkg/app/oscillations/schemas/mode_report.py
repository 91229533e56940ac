from typing import Any

from pydantic import BaseModel, ConfigDict

from algebra.models.poly import Poly
from algebra.schemas.root_interval import RootInterval
from matrix.models.mat import Mat
from oscillations.enum.mode_kind import ModeKind
from oscillations.enum.stability_verdict import LagrangeVerdict, WeierstrassVerdict

SIGN_CONVENTION = (
    "roots s of det(K − sM) = 0 with s = ρ²: s > 0 oscillates as sin(ρt + β), "
    "s = 0 drifts affinely, s < 0 grows as cosh/sinh"
)


class ModeVector(BaseModel):
    """Eigenvectors of one root.

    Rational roots carry exact ``vectors``. Irrational roots carry ``polynomial_vectors``:
    columns over Q[s] read modulo the minimal polynomial of the root.
    """

    vectors: list[Mat]
    column_index: int | None = None
    polynomial_column: list[Poly] | None = None
    polynomial_vectors: list[list[Poly]] = []
    degenerate: bool = False

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @property
    def dimension(self) -> int:
        return len(self.vectors) or len(self.polynomial_vectors)


class SpectralRoot(BaseModel):
    interval: RootInterval
    multiplicity: int
    minimal_polynomial: Poly
    certified: bool = True

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @property
    def exact(self) -> bool:
        return self.interval.exact

    @property
    def sign(self) -> int:
        return self.interval.sign()


class StabilityVerdicts(BaseModel):
    lagrange: LagrangeVerdict
    weierstrass: WeierstrassVerdict
    real_rooted: bool
    roots: list[SpectralRoot]

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


class Mode(BaseModel):
    index: int
    root: SpectralRoot
    kind: ModeKind
    frequency: str
    vector: ModeVector
    term: str

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    def render_vector(self) -> str:
        if self.vector.vectors:
            return " | ".join("(" + ", ".join(str(x) for x in v.col(0)) + ")" for v in self.vector.vectors)
        columns = " | ".join(
            "(" + ", ".join(str(p) for p in column) + ")" for column in self.vector.polynomial_vectors
        )
        return f"{columns} at s = root of {self.root.minimal_polynomial} in {self.root.interval.render()}"


class ModeReport(BaseModel):
    size: int
    characteristic_polynomial: Poly
    header: str = SIGN_CONVENTION
    modes: list[Mode]
    verdicts: StabilityVerdicts
    solution: str
    notes: list[str]

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    def render(self) -> list[str]:
        lines = [
            f"det(K − sM) = {self.characteristic_polynomial}",
            f"convention: {self.header}",
        ]
        for mode in self.modes:
            root = mode.root
            where = str(root.interval.value) if root.exact else f"in {root.interval.render()}"
            lines.append(
                f"mode {mode.index}: s {where} (multiplicity {root.multiplicity}, {mode.kind.value}); "
                f"v = {mode.render_vector()}"
            )
        lines.append(f"y(t) = {self.solution}")
        lines.append(f"Lagrange (1766): {self.verdicts.lagrange.value}: {self.verdicts.lagrange.describe()}")
        lines.append(
            f"Weierstrass (1858): {self.verdicts.weierstrass.value}: {self.verdicts.weierstrass.describe()}"
        )
        lines.extend(f"note: {n}" for n in self.notes)
        return lines


class ModalCongruence(BaseModel):
    """``transformᵀ·M·transform`` and ``transformᵀ·K·transform`` are both diagonal."""

    transform: Mat
    mass_diagonal: list[Any]
    stiffness_diagonal: list[Any]
    roots: list[Any]
    verified: bool

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)
