from fractions import Fraction
from itertools import product

from algebra.config.algebra_config import algebra_settings
from algebra.enum.domain_kind import DomainKind
from algebra.models.domain import QQ, FieldScalar, ScalarField
from algebra.models.poly import Poly
from algebra.schemas.factorization import FactorBlock, Factorization
from common.errors.exceptions import (
    DomainMismatchError,
    InvalidParameterError,
    ZeroPolynomialError,
)
from common.log.logger import logger
from matrix.models.mat import Mat
from matrix.services.matrix_service import MatrixService, get_matrix_service


class PolyService:
    def __init__(self, matrix_service: MatrixService, degree_cap: int, point_pool: int) -> None:
        self._matrix_service = matrix_service
        self._degree_cap = degree_cap
        self._point_pool = point_pool

    def poly_gcd(self, f: Poly, g: Poly) -> Poly:
        if f.domain != g.domain:
            raise DomainMismatchError(f"PolyService:poly_gcd: {f.domain} and {g.domain} differ")
        self._require_field(f, "poly_gcd")
        return f.gcd(g)

    def squarefree_decompose(self, f: Poly) -> list[tuple[Poly, int]]:
        """Monic pairwise coprime square-free parts with multiplicities, ascending."""
        if f.is_zero():
            raise ZeroPolynomialError("PolyService:squarefree_decompose: zero polynomial")
        self._require_field(f, "squarefree_decompose")
        if f.degree == 0:
            return []
        parts = self._squarefree(f.monic())
        merged: dict[int, Poly] = {}
        for g, m in parts:
            merged[m] = merged[m] * g if m in merged else g
        return [(merged[m], m) for m in sorted(merged)]

    def _squarefree(self, f: Poly) -> list[tuple[Poly, int]]:
        dom = f.domain
        p = dom.characteristic if dom.kind is DomainKind.PRIME_FIELD else 0
        result: list[tuple[Poly, int]] = []
        df = f.derivative()
        if df.is_zero():
            return [(g, m * p) for g, m in self._squarefree(f.pth_root())]
        c = f.gcd(df)
        w = f.exquo(c)
        i = 1
        while w.degree > 0:
            y = w.gcd(c)
            fac = w.exquo(y)
            if fac.degree > 0:
                result.append((fac, i))
            w = y
            c = c.exquo(y)
            i += 1
        if c.degree > 0:
            # leftover is a p-th power in characteristic p
            result.extend((g, m * p) for g, m in self._squarefree(c.pth_root()))
        return result

    def rational_roots(self, f: Poly) -> list[tuple[FieldScalar, int]]:
        """Rational roots with multiplicity, ascending."""
        if f.is_zero():
            raise ZeroPolynomialError("PolyService:rational_roots: zero polynomial")
        if f.domain.kind is not DomainKind.RATIONAL:
            raise DomainMismatchError("PolyService:rational_roots: polynomial must be over Q")
        if f.degree <= 0:
            return []
        _, ints = f.integer_coefficients()
        roots: list[tuple[Fraction, int]] = []
        shift = next(k for k, c in enumerate(ints) if c)
        if shift:
            roots.append((Fraction(0), shift))
        ints = ints[shift:]
        g = Poly([Fraction(c) for c in ints], QQ, f.var)
        if g.degree >= 1:
            candidates = {
                Fraction(s * num, den)
                for num in self._divisors(abs(ints[0]))
                for den in self._divisors(abs(ints[-1]))
                for s in (1, -1)
            }
            for c in sorted(candidates):
                m = 0
                linear = Poly.linear_root(c, QQ, f.var)
                while g.degree >= 1 and g.evaluate_raw(c) == 0:
                    g = g.exquo(linear)
                    m += 1
                if m:
                    roots.append((c, m))
        roots.sort()
        return [(QQ.wrap(r), m) for r, m in roots]

    def factor(self, f: Poly) -> Factorization:
        if f.is_zero():
            raise ZeroPolynomialError("PolyService:factor: zero polynomial")
        dom = self._require_field(f, "factor")
        blocks: list[FactorBlock] = []
        for g, m in self.squarefree_decompose(f):
            match dom.kind:
                case DomainKind.PRIME_FIELD:
                    pieces = [(h, True) for h in self._berlekamp(g)]
                case DomainKind.RATIONAL:
                    pieces = self._factor_squarefree_rational(g)
                case _:
                    raise DomainMismatchError(f"PolyService:factor: cannot factor over {dom}")
            blocks.extend(FactorBlock(factor=h, exponent=m, certified=ok) for h, ok in pieces)
        blocks.sort(key=lambda b: (b.factor.divisor_key(), b.exponent))
        return Factorization(unit=f.lc, blocks=blocks)

    def factor_integer(self, n: int) -> list[tuple[int, int]]:
        if n == 0:
            raise InvalidParameterError("PolyService:factor_integer: zero has no factorization")
        n = abs(n)
        out: list[tuple[int, int]] = []
        d = 2
        while d * d <= n:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if e:
                out.append((d, e))
            d += 1
        if n > 1:
            out.append((n, 1))
        return out

    def is_irreducible(self, f: Poly) -> bool:
        fac = self.factor(f)
        return len(fac.blocks) == 1 and fac.blocks[0].exponent == 1 and fac.blocks[0].certified

    def _berlekamp(self, f: Poly) -> list[Poly]:
        n = f.degree
        if n <= 1:
            return [f]
        dom = f.domain
        p = dom.characteristic
        xp = Poly.x(dom, f.var).pow_mod(p, f)
        rows = []
        cur = Poly.one(dom, f.var)
        for _ in range(n):
            raw = list(cur.raw_coeffs) + [0] * (n - cur.degree - 1)
            rows.append([dom.wrap(c) for c in raw[:n]])
            cur = (cur * xp) % f
        q = Mat.from_entries(rows, dom)
        kernel = self._matrix_service.nullspace((q - Mat.identity(n, dom)).transpose())
        k = len(kernel)
        factors = [f]
        if k == 1:
            return factors
        for v in kernel:
            g = Poly([v[i, 0] for i in range(n)], dom, f.var)
            if g.degree <= 0:
                continue
            for s in range(p):
                split: list[Poly] = []
                for h in factors:
                    if h.degree <= 1:
                        split.append(h)
                        continue
                    d = h.gcd(g - s)
                    if 0 < d.degree < h.degree:
                        split.extend([d, h.exquo(d)])
                    else:
                        split.append(h)
                factors = split
                if len(factors) == k:
                    break
            if len(factors) == k:
                break
        return sorted((h.monic() for h in factors), key=lambda h: h.divisor_key())

    def _factor_squarefree_rational(self, g: Poly) -> list[tuple[Poly, bool]]:
        pieces: list[tuple[Poly, bool]] = []
        residual = g
        for root, _ in self.rational_roots(g):
            linear = Poly.linear_root(root, QQ, g.var)
            residual = residual.exquo(linear)
            pieces.append((linear, True))
        pieces.extend(self._split_residual(residual.monic()))
        return pieces

    def _split_residual(self, h: Poly) -> list[tuple[Poly, bool]]:
        """Split a monic rational polynomial without rational roots."""
        if h.degree <= 0:
            return []
        if h.degree <= 3:
            return [(h, True)]
        if h.degree > self._degree_cap:
            logger.warning(
                f"Residual factor of degree {h.degree} exceeds cap {self._degree_cap}; left unsplit"
            )
            return [(h, False)]
        g = self._kronecker_factor(h)
        if g is None:
            return [(h, True)]
        return self._split_residual(g) + self._split_residual(h.exquo(g))

    def _kronecker_factor(self, h: Poly) -> Poly | None:
        _, ints = h.integer_coefficients()
        big = Poly([Fraction(c) for c in ints], QQ, h.var)
        pool = []
        for k in range(self._point_pool):
            x = (k + 1) // 2 * (1 if k % 2 else -1)
            value = int(big.evaluate_raw(Fraction(x)))
            pool.append((len(self._divisors(abs(value))), abs(x), x, value))
        pool.sort()
        for d in range(2, h.degree // 2 + 1):
            chosen = pool[: d + 1]
            xs = [Fraction(x) for _, _, x, _ in chosen]
            basis = self._lagrange_basis(xs)
            choices = [
                self._divisors(abs(value)) if i == 0 else self._signed_divisors(abs(value))
                for i, (_, _, _, value) in enumerate(chosen)
            ]
            for ys in product(*choices):
                coeffs = [Fraction(0)] * (d + 1)
                for y, b in zip(ys, basis):
                    for i, c in enumerate(b):
                        coeffs[i] += y * c
                if coeffs[-1] == 0 or any(c.denominator != 1 for c in coeffs):
                    continue
                candidate = Poly(coeffs, QQ, h.var)
                if (big % candidate).is_zero():
                    logger.debug(f"Kronecker split of {h}: degree {d} factor {candidate.monic()}")
                    return candidate.monic()
        return None

    def _lagrange_basis(self, xs: list[Fraction]) -> list[list[Fraction]]:
        basis = []
        for i, xi in enumerate(xs):
            poly = [Fraction(1)]
            denom = Fraction(1)
            for j, xj in enumerate(xs):
                if j == i:
                    continue
                shifted = [Fraction(0)] + poly
                for k, c in enumerate(poly):
                    shifted[k] -= xj * c
                poly = shifted
                denom *= xi - xj
            basis.append([c / denom for c in poly])
        return basis

    def _divisors(self, n: int) -> list[int]:
        if n == 0:
            return [0]
        small, large = [], []
        d = 1
        while d * d <= n:
            if n % d == 0:
                small.append(d)
                if d * d != n:
                    large.append(n // d)
            d += 1
        return small + large[::-1]

    def _signed_divisors(self, n: int) -> list[int]:
        return [s * d for d in self._divisors(n) for s in (1, -1)]

    def _require_field(self, f: Poly, op: str) -> ScalarField:
        if not isinstance(f.domain, ScalarField):
            raise DomainMismatchError(f"PolyService:{op}: {f.domain} is not a field")
        return f.domain


def get_poly_service() -> PolyService:
    return PolyService(
        matrix_service=get_matrix_service(),
        degree_cap=algebra_settings.KRONECKER_DEGREE_CAP,
        point_pool=algebra_settings.KRONECKER_POINT_POOL,
    )

