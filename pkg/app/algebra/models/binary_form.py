from typing import Any, Sequence

from algebra.enum.domain_kind import DomainKind
from algebra.models.domain import ScalarField
from algebra.models.poly import MINUS, Poly, superscript
from common.errors.exceptions import DomainMismatchError, InvalidParameterError


class BinaryForm:
    """Homogeneous polynomial of fixed degree d in (u, v); ``coeffs[k]`` multiplies u^k v^(d-k)."""

    __slots__ = ("_domain", "_degree", "_coeffs")

    def __init__(self, coeffs: Sequence[Any], domain: ScalarField, degree: int | None = None) -> None:
        raw = [domain.raw_of(c) for c in coeffs]
        self._init(raw, domain, len(raw) - 1 if degree is None else degree)

    def _init(self, raw: list[Any], domain: ScalarField, degree: int) -> None:
        if degree < 0:
            raise InvalidParameterError("BinaryForm: degree must be non-negative")
        if len(raw) > degree + 1 and any(c != 0 for c in raw[degree + 1 :]):
            raise InvalidParameterError(f"BinaryForm: coefficients exceed degree {degree}")
        raw = (raw + [domain.reduce(0)] * (degree + 1))[: degree + 1]
        self._domain = domain
        self._degree = degree
        self._coeffs = tuple(domain.reduce(c) for c in raw)

    @classmethod
    def _from_raw(cls, raw: list[Any], domain: ScalarField, degree: int) -> "BinaryForm":
        obj = cls.__new__(cls)
        obj._init(raw, domain, degree)
        return obj

    @classmethod
    def from_dehomogenized(cls, poly: Poly, degree: int) -> "BinaryForm":
        """Homogenize ``poly`` in λ = u/v to the given degree."""
        if poly.degree > degree:
            raise InvalidParameterError(
                f"BinaryForm:from_dehomogenized: degree {poly.degree} exceeds {degree}"
            )
        return cls._from_raw(list(poly.raw_coeffs), poly.domain, degree)

    @classmethod
    def linear(cls, a: Any, b: Any, domain: ScalarField) -> "BinaryForm":
        """The form a·u + b·v."""
        return cls._from_raw([domain.raw_of(b), domain.raw_of(a)], domain, 1)

    @classmethod
    def constant(cls, c: Any, domain: ScalarField) -> "BinaryForm":
        return cls._from_raw([domain.raw_of(c)], domain, 0)

    @property
    def domain(self) -> ScalarField:
        return self._domain

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def coeffs(self) -> tuple:
        return tuple(self._domain.wrap(c) for c in self._coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._coeffs)

    def dehomogenize(self, var: str = "λ") -> Poly:
        return Poly.from_raw(self._coeffs, self._domain, var)

    def evaluate(self, u: Any, v: Any) -> Any:
        dom = self._domain
        ru, rv = dom.raw_of(u), dom.raw_of(v)
        total: Any = 0
        for k, c in enumerate(self._coeffs):
            if c != 0:
                total += c * ru**k * rv ** (self._degree - k)
        return dom.wrap(dom.reduce(total))

    def _check(self, other: "BinaryForm") -> None:
        if self._domain != other._domain:
            raise DomainMismatchError(
                f"BinaryForm: cannot combine forms over {self._domain} and {other._domain}"
            )

    def __mul__(self, other: Any) -> "BinaryForm":
        if isinstance(other, BinaryForm):
            self._check(other)
            out: list[Any] = [0] * (self._degree + other._degree + 1)
            for i, a in enumerate(self._coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return BinaryForm._from_raw(out, self._domain, self._degree + other._degree)
        try:
            raw = self._domain.raw_of(other)
        except TypeError:
            return NotImplemented
        return BinaryForm._from_raw([c * raw for c in self._coeffs], self._domain, self._degree)

    __rmul__ = __mul__

    def __neg__(self) -> "BinaryForm":
        return self * -1

    def __pow__(self, exponent: int) -> "BinaryForm":
        if exponent < 0:
            raise InvalidParameterError("BinaryForm:__pow__: negative exponent")
        result = BinaryForm.constant(1, self._domain)
        for _ in range(exponent):
            result = result * self
        return result

    def sign_relative_to(self, other: "BinaryForm") -> int | None:
        """Return +1 or -1 when ``self == ±other``, otherwise ``None``."""
        self._check(other)
        if self._degree != other._degree:
            return None
        if self == other:
            return 1
        if self == -other:
            return -1
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return (
            self._domain == other._domain
            and self._degree == other._degree
            and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        return hash((self._domain.key(), self._degree, self._coeffs))

    def render(self, machine: bool = False) -> str:
        if self.is_zero():
            return "0"
        minus = "-" if machine else MINUS
        signed = self._domain.kind is DomainKind.RATIONAL
        parts: list[str] = []
        for k in range(self._degree, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            negative = signed and c < 0
            mag = -c if negative else c
            powers = [p for p in (_power("u", k, machine), _power("v", self._degree - k, machine)) if p]
            monomial = ("*" if machine else "").join(powers)
            if machine and monomial and mag != 1:
                body = f"{mag}*{monomial}"
            elif monomial:
                body = monomial if mag == 1 else f"{mag}{monomial}"
            else:
                body = str(mag)
            if not parts:
                parts.append(f"{minus}{body}" if negative else body)
            else:
                parts.append(f"{minus if negative else '+'}{body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"BinaryForm({self.render()}, {self._domain})"


def _power(var: str, k: int, machine: bool) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}" if machine else f"{var}{superscript(k)}"


class HomogeneousPoint:
    """Point of the projective line, normalized to (c:1) or (1:0)."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: Any, b: Any, domain: ScalarField) -> None:
        a, b = domain(a), domain(b)
        if not a and not b:
            raise InvalidParameterError("HomogeneousPoint: (0:0) is not a point")
        if b:
            self._a, self._b = a / b, domain.one
        else:
            self._a, self._b = domain.one, domain.zero

    @property
    def a(self) -> Any:
        return self._a

    @property
    def b(self) -> Any:
        return self._b

    def is_infinite(self) -> bool:
        return not self._b

    def linear_form(self) -> BinaryForm:
        """The form b·u − a·v vanishing at this point."""
        return BinaryForm.linear(self._b, -self._a, self._a.domain)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogeneousPoint):
            return NotImplemented
        return self._a == other._a and self._b == other._b

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def render(self) -> str:
        return f"({self._a}:{self._b})"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"HomogeneousPoint{self.render()}"
