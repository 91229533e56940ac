import math
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Iterator

from algebra.enum.domain_kind import DomainKind
from common.errors.exceptions import (
    DomainMismatchError,
    InexactDivisionError,
    InvalidParameterError,
)


class Domain(ABC):
    """Exact coefficient domain.

    Scalar domains keep a *raw* representation (``Fraction`` for Q, ``int``
    reduced mod p for GF(p), ``int`` for Z) that polynomials store directly;
    user-facing elements are produced by :meth:`wrap`.
    """

    kind: DomainKind

    @property
    @abstractmethod
    def zero(self) -> Any: ...

    @property
    @abstractmethod
    def one(self) -> Any: ...

    @abstractmethod
    def __call__(self, value: Any) -> Any: ...

    @abstractmethod
    def key(self) -> tuple: ...

    @abstractmethod
    def divmod(self, a: Any, b: Any) -> tuple[Any, Any]: ...

    @abstractmethod
    def euclid_size(self, a: Any) -> int: ...

    @abstractmethod
    def unit_normal(self, a: Any) -> tuple[Any, Any]:
        """Return ``(normal, unit)`` with ``normal == a * unit``."""

    @abstractmethod
    def is_unit(self, a: Any) -> bool: ...

    def is_field(self) -> bool:
        return self.kind.is_field()

    def exquo(self, a: Any, b: Any) -> Any:
        q, r = self.divmod(a, b)
        if r:
            raise InexactDivisionError(f"Domain:exquo: {b} does not divide {a} in {self}")
        return q

    def normalize(self, a: Any) -> Any:
        return self.unit_normal(a)[0]

    def gcd(self, a: Any, b: Any) -> Any:
        while b:
            a, b = b, self.divmod(a, b)[1]
        return self.normalize(a)

    def render(self, a: Any) -> str:
        return str(a)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Domain) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())


class ScalarDomain(Domain):
    @abstractmethod
    def raw_of(self, value: Any) -> Any:
        """Coerce ``value`` into the raw representation; ``TypeError`` for foreign types."""

    @abstractmethod
    def reduce(self, raw: Any) -> Any: ...

    @abstractmethod
    def wrap(self, raw: Any) -> Any: ...

    @abstractmethod
    def raw_inv(self, raw: Any) -> Any: ...

    def raw_exquo(self, a: Any, b: Any) -> Any:
        return self.reduce(a * self.raw_inv(b))

    def __call__(self, value: Any) -> Any:
        return self.wrap(self.raw_of(value))


class ScalarField(ScalarDomain):
    @property
    def zero(self) -> "FieldScalar":
        return self.wrap(self.reduce(0))

    @property
    def one(self) -> "FieldScalar":
        return self.wrap(self.reduce(1))

    def wrap(self, raw: Any) -> "FieldScalar":
        return FieldScalar.from_raw(self, raw)

    def divmod(self, a: Any, b: Any) -> tuple[Any, Any]:
        if not b:
            raise ZeroDivisionError(f"ScalarField:divmod: division by zero in {self}")
        return a / b, self.zero

    def euclid_size(self, a: Any) -> int:
        return 0

    def unit_normal(self, a: Any) -> tuple[Any, Any]:
        if not a:
            return self.zero, self.one
        return self.one, 1 / a

    def is_unit(self, a: Any) -> bool:
        return bool(a)

    def raw_of(self, value: Any) -> Any:
        if isinstance(value, FieldScalar):
            if value.domain != self:
                raise DomainMismatchError(
                    f"ScalarField:raw_of: element of {value.domain} used in {self}"
                )
            return value.value
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"ScalarField:raw_of: cannot coerce {type(value).__name__} into {self}")
        return self._raw_of_number(value)

    @abstractmethod
    def _raw_of_number(self, value: int | Fraction) -> Any: ...

    @abstractmethod
    def elements(self) -> Iterator["FieldScalar"]: ...


class RationalField(ScalarField):
    kind = DomainKind.RATIONAL

    def key(self) -> tuple:
        return ("Q",)

    def _raw_of_number(self, value: int | Fraction) -> Fraction:
        return Fraction(value)

    def reduce(self, raw: Any) -> Fraction:
        return raw if type(raw) is Fraction else Fraction(raw)

    def raw_inv(self, raw: Any) -> Fraction:
        if raw == 0:
            raise ZeroDivisionError("RationalField:raw_inv: zero has no inverse")
        return 1 / Fraction(raw)

    def parse(self, text: str) -> "FieldScalar":
        return self.wrap(Fraction(text))

    def elements(self) -> Iterator["FieldScalar"]:
        """Enumerate 0, 1, -1, 2, -2, ..."""
        yield self.zero
        k = 1
        while True:
            yield self(k)
            yield self(-k)
            k += 1

    def __str__(self) -> str:
        return "Q"

    def __repr__(self) -> str:
        return "RationalField()"


class PrimeField(ScalarField):
    kind = DomainKind.PRIME_FIELD

    def __init__(self, p: int) -> None:
        if not is_prime(p):
            raise InvalidParameterError(f"PrimeField:__init__: {p} is not a prime")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    def key(self) -> tuple:
        return ("GF", self.p)

    def _raw_of_number(self, value: int | Fraction) -> int:
        if isinstance(value, int):
            return value % self.p
        if value.denominator % self.p == 0:
            raise InvalidParameterError(
                f"PrimeField:raw_of: denominator of {value} vanishes in {self}"
            )
        return value.numerator * pow(value.denominator, -1, self.p) % self.p

    def reduce(self, raw: Any) -> int:
        return raw % self.p

    def raw_inv(self, raw: Any) -> int:
        if raw % self.p == 0:
            raise ZeroDivisionError(f"PrimeField:raw_inv: zero has no inverse in {self}")
        return pow(raw, -1, self.p)

    def parse(self, text: str) -> "FieldScalar":
        return self.wrap(int(text) % self.p)

    def elements(self) -> Iterator["FieldScalar"]:
        for k in range(self.p):
            yield self.wrap(k)

    def __str__(self) -> str:
        return f"GF({self.p})"

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class IntegerRing(ScalarDomain):
    kind = DomainKind.INTEGER

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def key(self) -> tuple:
        return ("Z",)

    def raw_of(self, value: Any) -> int:
        if isinstance(value, bool):
            raise TypeError("IntegerRing:raw_of: booleans are not integers")
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        if isinstance(value, (Fraction, FieldScalar)):
            raise DomainMismatchError(f"IntegerRing:raw_of: {value} is not an integer")
        raise TypeError(f"IntegerRing:raw_of: cannot coerce {type(value).__name__} into Z")

    def reduce(self, raw: Any) -> int:
        return raw

    def wrap(self, raw: Any) -> int:
        return raw

    def raw_inv(self, raw: Any) -> int:
        if raw in (1, -1):
            return raw
        raise InexactDivisionError(f"IntegerRing:raw_inv: {raw} is not a unit")

    def raw_exquo(self, a: Any, b: Any) -> int:
        return self.exquo(a, b)

    def divmod(self, a: int, b: int) -> tuple[int, int]:
        if b == 0:
            raise ZeroDivisionError("IntegerRing:divmod: division by zero")
        return divmod(a, b)

    def euclid_size(self, a: int) -> int:
        return abs(a)

    def unit_normal(self, a: int) -> tuple[int, int]:
        return (-a, -1) if a < 0 else (a, 1)

    def is_unit(self, a: int) -> bool:
        return a in (1, -1)

    def gcd(self, a: int, b: int) -> int:
        return math.gcd(a, b)

    def __str__(self) -> str:
        return "Z"

    def __repr__(self) -> str:
        return "IntegerRing()"


class FieldScalar:
    """Element of Q or GF(p); arithmetic across different fields is refused."""

    __slots__ = ("_domain", "_value")

    def __init__(self, domain: ScalarField, value: Any) -> None:
        self._domain = domain
        self._value = domain.raw_of(value)

    @classmethod
    def from_raw(cls, domain: ScalarField, raw: Any) -> "FieldScalar":
        obj = cls.__new__(cls)
        obj._domain = domain
        obj._value = raw
        return obj

    @property
    def domain(self) -> ScalarField:
        return self._domain

    @property
    def value(self) -> Any:
        return self._value

    def _coerce(self, other: Any) -> Any:
        if isinstance(other, FieldScalar):
            if other._domain != self._domain:
                raise DomainMismatchError(
                    f"FieldScalar: cannot combine {self._domain} with {other._domain}"
                )
            return other._value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._domain.raw_of(other)
        return NotImplemented

    def _make(self, raw: Any) -> "FieldScalar":
        return FieldScalar.from_raw(self._domain, self._domain.reduce(raw))

    def __add__(self, other: Any) -> "FieldScalar":
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return self._make(self._value + raw)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "FieldScalar":
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return self._make(self._value - raw)

    def __rsub__(self, other: Any) -> "FieldScalar":
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return self._make(raw - self._value)

    def __mul__(self, other: Any) -> "FieldScalar":
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return self._make(self._value * raw)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "FieldScalar":
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return self._make(self._value * self._domain.raw_inv(raw))

    def __rtruediv__(self, other: Any) -> "FieldScalar":
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return self._make(raw * self._domain.raw_inv(self._value))

    def __neg__(self) -> "FieldScalar":
        return self._make(-self._value)

    def __pow__(self, exponent: int) -> "FieldScalar":
        if exponent < 0:
            return self._make(self._domain.raw_inv(self._value) ** -exponent)
        return self._make(self._value**exponent)

    def inverse(self) -> "FieldScalar":
        return self._make(self._domain.raw_inv(self._value))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldScalar):
            return self._domain == other._domain and self._value == other._value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self._value == self._domain.raw_of(other)
            except InvalidParameterError:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._value)

    def __bool__(self) -> bool:
        return self._value != 0

    def _ordered(self, other: Any) -> tuple[Any, Any]:
        if self._domain.kind is not DomainKind.RATIONAL:
            raise TypeError(f"FieldScalar: {self._domain} is not ordered")
        raw = self._coerce(other)
        if raw is NotImplemented:
            raise TypeError(f"FieldScalar: cannot compare with {type(other).__name__}")
        return self._value, raw

    def __lt__(self, other: Any) -> bool:
        a, b = self._ordered(other)
        return a < b

    def __le__(self, other: Any) -> bool:
        a, b = self._ordered(other)
        return a <= b

    def __gt__(self, other: Any) -> bool:
        a, b = self._ordered(other)
        return a > b

    def __ge__(self, other: Any) -> bool:
        a, b = self._ordered(other)
        return a >= b

    def sign(self) -> int:
        if self._domain.kind is not DomainKind.RATIONAL:
            raise TypeError(f"FieldScalar:sign: {self._domain} is not ordered")
        return (self._value > 0) - (self._value < 0)

    def sort_key(self) -> Any:
        return self._value

    def __str__(self) -> str:
        return str(self._value)

    def __repr__(self) -> str:
        return f"FieldScalar({self._domain}, {self._value})"


def is_prime(p: int) -> bool:
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


QQ = RationalField()
ZZ = IntegerRing()


def GF(p: int) -> PrimeField:
    return PrimeField(p)
