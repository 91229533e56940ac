from algebra.models.domain import ScalarField
from common.errors.exceptions import DimensionError, DomainMismatchError
from matrix.models.mat import Mat


class Pencil:
    """The matrix pencil λP + Q, written homogeneously as uP + vQ."""

    __slots__ = ("_p", "_q")

    def __init__(self, p: Mat, q: Mat) -> None:
        if not p.is_square() or p.shape != q.shape:
            raise DimensionError(f"Pencil: P {p.shape} and Q {q.shape} must be square of equal size")
        if p.domain != q.domain:
            raise DomainMismatchError(f"Pencil: P over {p.domain} but Q over {q.domain}")
        if not isinstance(p.domain, ScalarField):
            raise DomainMismatchError(f"Pencil: {p.domain} is not a field")
        self._p = p
        self._q = q

    @property
    def p(self) -> Mat:
        return self._p

    @property
    def q(self) -> Mat:
        return self._q

    @property
    def size(self) -> int:
        return self._p.nrows

    @property
    def domain(self) -> ScalarField:
        return self._p.domain

    def transformed(self, left: Mat, right: Mat) -> "Pencil":
        """The pencil left·(uP + vQ)·right."""
        return Pencil(left @ self._p @ right, left @ self._q @ right)

    def twisted(self, h: Mat, k: Mat) -> "Pencil":
        """The pencil Hᵀ(uP + vQ)K."""
        return self.transformed(h.transpose(), k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Pencil):
            return NotImplemented
        return self._p == other._p and self._q == other._q

    def __hash__(self) -> int:
        return hash((self._p, self._q))

    def __repr__(self) -> str:
        return f"Pencil(P={self._p!r}, Q={self._q!r})"
