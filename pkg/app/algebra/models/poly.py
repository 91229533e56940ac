import math
from fractions import Fraction
from itertools import zip_longest
from typing import Any, Iterable, Sequence

from algebra.enum.domain_kind import DomainKind
from algebra.models.domain import Domain, ScalarDomain
from common.errors.exceptions import (
    DomainMismatchError,
    InexactDivisionError,
    InvalidParameterError,
)

MINUS = "−"
_SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def superscript(n: int) -> str:
    return str(n).translate(_SUPERSCRIPTS)


class Poly:
    """Dense univariate polynomial; coefficients are raw values, lowest degree first."""

    __slots__ = ("_domain", "_coeffs", "_var")

    def __init__(self, coeffs: Iterable[Any], domain: ScalarDomain, var: str = "λ") -> None:
        raw = [domain.raw_of(c) for c in coeffs]
        self._domain = domain
        self._coeffs = _strip([domain.reduce(c) for c in raw])
        self._var = var

    @classmethod
    def from_raw(cls, raw: Sequence[Any], domain: ScalarDomain, var: str = "λ") -> "Poly":
        obj = cls.__new__(cls)
        obj._domain = domain
        obj._coeffs = _strip(list(raw))
        obj._var = var
        return obj

    @classmethod
    def zero(cls, domain: ScalarDomain, var: str = "λ") -> "Poly":
        return cls.from_raw((), domain, var)

    @classmethod
    def one(cls, domain: ScalarDomain, var: str = "λ") -> "Poly":
        return cls.from_raw((domain.reduce(1),), domain, var)

    @classmethod
    def x(cls, domain: ScalarDomain, var: str = "λ") -> "Poly":
        return cls.from_raw((domain.reduce(0), domain.reduce(1)), domain, var)

    @classmethod
    def constant(cls, value: Any, domain: ScalarDomain, var: str = "λ") -> "Poly":
        return cls.from_raw((domain.raw_of(value),), domain, var)

    @classmethod
    def linear_root(cls, root: Any, domain: ScalarDomain, var: str = "λ") -> "Poly":
        """The monic factor ``var - root``."""
        return cls.from_raw((domain.reduce(-domain.raw_of(root)), domain.reduce(1)), domain, var)

    @classmethod
    def from_roots(cls, roots: Iterable[Any], domain: ScalarDomain, var: str = "λ") -> "Poly":
        result = cls.one(domain, var)
        for r in roots:
            result = result * cls.linear_root(r, domain, var)
        return result

    @property
    def domain(self) -> ScalarDomain:
        return self._domain

    @property
    def var(self) -> str:
        return self._var

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def raw_coeffs(self) -> tuple:
        return self._coeffs

    @property
    def coeffs(self) -> tuple:
        return tuple(self._domain.wrap(c) for c in self._coeffs)

    @property
    def lc(self) -> Any:
        if not self._coeffs:
            return self._domain.zero
        return self._domain.wrap(self._coeffs[-1])

    def coeff(self, k: int) -> Any:
        if 0 <= k < len(self._coeffs):
            return self._domain.wrap(self._coeffs[k])
        return self._domain.zero

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == 1

    def is_one(self) -> bool:
        return len(self._coeffs) == 1 and self._coeffs[0] == 1

    def lowest_degree(self) -> int:
        """Exponent of the largest power of the variable dividing this polynomial."""
        for k, c in enumerate(self._coeffs):
            if c != 0:
                return k
        return -1

    def _new(self, raw: Sequence[Any]) -> "Poly":
        return Poly.from_raw(raw, self._domain, self._var)

    def _raw_operand(self, other: Any) -> tuple | None:
        if isinstance(other, Poly):
            if other._domain != self._domain:
                raise DomainMismatchError(
                    f"Poly: cannot combine polynomials over {self._domain} and {other._domain}"
                )
            return other._coeffs
        try:
            return _strip([self._domain.raw_of(other)])
        except TypeError:
            return None

    def __add__(self, other: Any) -> "Poly":
        b = self._raw_operand(other)
        if b is None:
            return NotImplemented
        red = self._domain.reduce
        return self._new([red(x + y) for x, y in zip_longest(self._coeffs, b, fillvalue=0)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        red = self._domain.reduce
        return self._new([red(-x) for x in self._coeffs])

    def __sub__(self, other: Any) -> "Poly":
        b = self._raw_operand(other)
        if b is None:
            return NotImplemented
        red = self._domain.reduce
        return self._new([red(x - y) for x, y in zip_longest(self._coeffs, b, fillvalue=0)])

    def __rsub__(self, other: Any) -> "Poly":
        return (-self) + other

    def __mul__(self, other: Any) -> "Poly":
        b = self._raw_operand(other)
        if b is None:
            return NotImplemented
        a = self._coeffs
        if not a or not b:
            return self._new(())
        out: list[Any] = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        red = self._domain.reduce
        return self._new([red(c) for c in out])

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise InvalidParameterError("Poly:__pow__: negative exponent")
        result = Poly.one(self._domain, self._var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Long division; over Z every leading quotient must be exact."""
        d = self._raw_operand(other)
        if d is None:
            raise TypeError(f"Poly:divmod: cannot divide by {type(other).__name__}")
        if not d:
            raise ZeroDivisionError("Poly:divmod: division by the zero polynomial")
        dom = self._domain
        r = list(self._coeffs)
        nq = len(r) - len(d) + 1
        if nq <= 0:
            return self._new(()), self
        q: list[Any] = [dom.reduce(0)] * nq
        lead = d[-1]
        inv = dom.raw_inv(lead) if dom.is_field() else None
        for k in range(nq - 1, -1, -1):
            c = r[k + len(d) - 1]
            if c == 0:
                continue
            t = dom.reduce(c * inv) if inv is not None else dom.raw_exquo(c, lead)
            q[k] = t
            for i, di in enumerate(d):
                r[k + i] = dom.reduce(r[k + i] - t * di)
        return self._new(q), self._new(r[: len(d) - 1])

    def __floordiv__(self, other: Any) -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: Any) -> "Poly":
        return self.divmod(other)[1]

    def exquo(self, other: Any) -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise InexactDivisionError(f"Poly:exquo: {other} does not divide {self}")
        return q

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero()

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def monic(self) -> "Poly":
        if not self._coeffs or self._coeffs[-1] == 1:
            return self
        dom = self._domain
        inv = dom.raw_inv(self._coeffs[-1])
        return self._new([dom.reduce(c * inv) for c in self._coeffs])

    def derivative(self) -> "Poly":
        red = self._domain.reduce
        return self._new([red(k * c) for k, c in enumerate(self._coeffs) if k])

    def evaluate_raw(self, x: Any) -> Any:
        red = self._domain.reduce
        acc: Any = red(0)
        for c in reversed(self._coeffs):
            acc = red(acc * x + c)
        return acc

    def __call__(self, x: Any) -> Any:
        return self._domain.wrap(self.evaluate_raw(self._domain.raw_of(x)))

    def pow_mod(self, exponent: int, modulus: "Poly") -> "Poly":
        result = Poly.one(self._domain, self._var) % modulus
        base = self % modulus
        while exponent:
            if exponent & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            exponent >>= 1
        return result

    def invert_mod(self, modulus: "Poly") -> "Poly":
        """Inverse modulo ``modulus`` by the extended Euclidean algorithm."""
        dom = self._domain
        r0, r1 = modulus, self % modulus
        s0, s1 = Poly.zero(dom, self._var), Poly.one(dom, self._var)
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r0.degree != 0:
            raise InexactDivisionError(f"Poly:invert_mod: {self} is not invertible modulo {modulus}")
        inv = dom.raw_inv(r0.raw_coeffs[0])
        return (s0 * self._new([inv])) % modulus

    def pth_root(self) -> "Poly":
        """Inverse of the Frobenius map on a polynomial in x^p over GF(p)."""
        if self._domain.kind is not DomainKind.PRIME_FIELD:
            raise DomainMismatchError("Poly:pth_root: only defined over GF(p)")
        p = self._domain.characteristic
        if any(c != 0 for k, c in enumerate(self._coeffs) if k % p):
            raise InexactDivisionError("Poly:pth_root: polynomial is not a p-th power")
        return self._new(self._coeffs[::p])

    def primitive_part(self) -> "Poly":
        """Positive rescaling of a rational polynomial to a primitive integer polynomial."""
        if self._domain.kind is not DomainKind.RATIONAL:
            raise DomainMismatchError("Poly:primitive_part: only defined over Q")
        if not self._coeffs:
            return self
        _, ints = self.integer_coefficients()
        return self._new([Fraction(c) for c in ints])

    def integer_coefficients(self) -> tuple[Fraction, list[int]]:
        """Return ``(scale, ints)`` with ``self == scale * ints``, ``scale > 0`` and ``ints`` primitive."""
        denom = 1
        for c in self._coeffs:
            denom = denom * c.denominator // math.gcd(denom, c.denominator)
        ints = [int(c * denom) for c in self._coeffs]
        content = 0
        for c in ints:
            content = math.gcd(content, c)
        content = content or 1
        return Fraction(content, denom), [c // content for c in ints]

    def map_domain(self, domain: ScalarDomain) -> "Poly":
        return Poly.from_raw([domain.reduce(domain.raw_of(c)) for c in self._coeffs], domain, self._var)

    def with_var(self, var: str) -> "Poly":
        return Poly.from_raw(self._coeffs, self._domain, var)

    def sort_key(self) -> tuple:
        return (self.degree, tuple(self._coeffs))

    def divisor_key(self) -> tuple:
        """Ordering of irreducible factors: degree first, linear factors by root."""
        if self.degree == 1:
            root = self._domain.reduce(-self._coeffs[0] * self._domain.raw_inv(self._coeffs[1]))
            return (1, (root,))
        return self.sort_key()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._domain == other._domain and self._coeffs == other._coeffs
        try:
            raw = self._raw_operand(other)
        except DomainMismatchError:
            return False
        if raw is None:
            return NotImplemented
        return self._coeffs == raw

    def __hash__(self) -> int:
        return hash((self._domain.key(), self._coeffs))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def render(self, var: str | None = None, machine: bool = False) -> str:
        var = var or ("x" if machine else self._var)
        if not self._coeffs:
            return "0"
        minus = "-" if machine else MINUS
        signed = self._domain.kind is not DomainKind.PRIME_FIELD
        parts: list[str] = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            negative = signed and c < 0
            mag = -c if negative else c
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else (f"{var}^{k}" if machine else f"{var}{superscript(k)}")
                if mag == 1:
                    body = power
                elif machine:
                    body = f"{mag}*{power}"
                elif isinstance(mag, Fraction) and mag.denominator != 1:
                    body = f"({mag}){power}"
                else:
                    body = f"{mag}{power}"
            if not parts:
                parts.append(f"{minus}{body}" if negative else body)
            else:
                parts.append(f"{minus if negative else '+'}{body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Poly({self.render()}, {self._domain})"


def render_power(factor: Poly, exponent: int, machine: bool = False) -> str:
    """``(λ−2)³`` style rendering of a factor power."""
    body = factor.render(machine=machine)
    if len([c for c in factor.raw_coeffs if c != 0]) > 1:
        body = f"({body})"
    if exponent == 1:
        return body
    return f"{body}^{exponent}" if machine else f"{body}{superscript(exponent)}"


class PolynomialRing(Domain):
    """F[var] for a scalar field F (or Z); elements are :class:`Poly`."""

    kind = DomainKind.POLYNOMIAL

    def __init__(self, base: ScalarDomain, var: str = "λ") -> None:
        self.base = base
        self.var = var

    def key(self) -> tuple:
        return ("POLY", self.base.key())

    @property
    def zero(self) -> Poly:
        return Poly.zero(self.base, self.var)

    @property
    def one(self) -> Poly:
        return Poly.one(self.base, self.var)

    @property
    def x(self) -> Poly:
        return Poly.x(self.base, self.var)

    def __call__(self, value: Any) -> Poly:
        if isinstance(value, Poly):
            if value.domain != self.base:
                raise DomainMismatchError(
                    f"PolynomialRing: polynomial over {value.domain} used in {self}"
                )
            return value if value.var == self.var else value.with_var(self.var)
        return Poly.constant(value, self.base, self.var)

    def divmod(self, a: Poly, b: Poly) -> tuple[Poly, Poly]:
        return a.divmod(b)

    def exquo(self, a: Poly, b: Poly) -> Poly:
        return a.exquo(b)

    def euclid_size(self, a: Poly) -> int:
        return a.degree

    def unit_normal(self, a: Poly) -> tuple[Poly, Poly]:
        if a.is_zero():
            return a, self.one
        if self.base.is_field():
            unit = Poly.from_raw((self.base.raw_inv(a.raw_coeffs[-1]),), self.base, self.var)
        else:
            unit = Poly.constant(-1 if a.raw_coeffs[-1] < 0 else 1, self.base, self.var)
        return a * unit, unit

    def is_unit(self, a: Poly) -> bool:
        if a.degree != 0:
            return False
        return self.base.is_field() or a.raw_coeffs[0] in (1, -1)

    def gcd(self, a: Poly, b: Poly) -> Poly:
        if not self.base.is_field():
            raise DomainMismatchError(f"PolynomialRing:gcd: {self} is not a Euclidean domain")
        return a.gcd(b)

    def render(self, a: Poly) -> str:
        return a.render()

    def __str__(self) -> str:
        return f"{self.base}[{self.var}]"

    def __repr__(self) -> str:
        return f"PolynomialRing({self.base!r}, {self.var!r})"


def _strip(raw: list[Any]) -> tuple:
    while raw and raw[-1] == 0:
        raw.pop()
    return tuple(raw)
