from fractions import Fraction

from algebra.config.algebra_config import algebra_settings
from algebra.enum.domain_kind import DomainKind
from algebra.models.domain import QQ
from algebra.models.poly import Poly
from algebra.schemas.root_interval import RootInterval
from algebra.services.poly_service import PolyService, get_poly_service
from common.errors.exceptions import (
    DomainMismatchError,
    InternalError,
    InvalidParameterError,
    ZeroPolynomialError,
)
from common.log.logger import logger


class SturmService:
    """Real-root counting and isolation for rational polynomials."""

    def __init__(self, poly_service: PolyService, max_bisections: int) -> None:
        self._poly_service = poly_service
        self._max_bisections = max_bisections

    def sturm_chain(self, f: Poly) -> list[Poly]:
        """Sturm sequence of the square-free part, each term rescaled by a positive constant."""
        self._require_rational(f, "sturm_chain")
        g = self._squarefree_part(f)
        chain = [g.primitive_part()]
        if g.degree >= 1:
            chain.append(g.derivative().primitive_part())
        while chain[-1].degree > 0:
            r = -(chain[-2] % chain[-1])
            if r.is_zero():
                break
            chain.append(r.primitive_part())
        return chain

    def sturm_count(self, f: Poly, lo: Fraction | None = None, hi: Fraction | None = None) -> int:
        """Number of distinct real roots in (lo, hi]; ``None`` bounds mean ±∞."""
        self._require_rational(f, "sturm_count")
        if lo is not None and hi is not None and lo >= hi:
            raise InvalidParameterError(f"SturmService:sturm_count: empty interval ({lo}, {hi}]")
        chain = self.sturm_chain(f)
        return self._variations(chain, lo, -1) - self._variations(chain, hi, 1)

    def isolate_real_roots(self, f: Poly) -> list[RootInterval]:
        """Disjoint isolating intervals in ascending order; rational roots are returned as points."""
        self._require_rational(f, "isolate_real_roots")
        g = self._squarefree_part(f)
        if g.degree <= 0:
            return []
        rational = [r.value for r, _ in self._poly_service.rational_roots(g)]
        h = g
        for r in rational:
            h = h.exquo(Poly.linear_root(r, QQ, g.var))
        intervals = [RootInterval(lo=r, hi=r, certificate=self._point_certificate(g, r)) for r in rational]
        if h.degree >= 1:
            intervals.extend(self._isolate_irrational(h, rational))
        intervals.sort(key=lambda iv: (iv.lo, iv.hi))
        logger.debug(f"Isolated {len(intervals)} real roots of {f}")
        return intervals

    def refine(self, f: Poly, interval: RootInterval, width: Fraction) -> RootInterval:
        """Shrink an open isolating interval below ``width`` by bisection."""
        if interval.exact:
            return interval
        chain = self.sturm_chain(f)
        lo, hi = interval.lo, interval.hi
        steps = 0
        while hi - lo >= width:
            mid = (lo + hi) / 2
            if self._poly_value(chain[0], mid) == 0:
                return RootInterval(lo=mid, hi=mid, certificate=1)
            if self._count(chain, lo, mid) == 1:
                hi = mid
            else:
                lo = mid
            steps += 1
            self._check_budget(steps, "refine")
        return RootInterval(lo=lo, hi=hi, certificate=self._count(chain, lo, hi))

    def cauchy_bound(self, f: Poly) -> Fraction:
        """Strict bound on the absolute value of every root."""
        lead = abs(f.raw_coeffs[-1])
        return 1 + max((abs(c) / lead for c in f.raw_coeffs[:-1]), default=Fraction(0))

    def _isolate_irrational(self, h: Poly, rational: list[Fraction]) -> list[RootInterval]:
        chain = self.sturm_chain(h)
        bound = self.cauchy_bound(h)
        pending = [(-bound, Fraction(0)), (Fraction(0), bound)]
        found: list[RootInterval] = []
        steps = 0
        while pending:
            lo, hi = pending.pop()
            count = self._count(chain, lo, hi)
            if count == 0:
                continue
            if count == 1 and not any(lo < r < hi for r in rational):
                found.append(RootInterval(lo=lo, hi=hi, certificate=count))
                continue
            mid = (lo + hi) / 2
            pending.extend([(lo, mid), (mid, hi)])
            steps += 1
            self._check_budget(steps, "isolate_real_roots")
        return found

    def _point_certificate(self, g: Poly, r: Fraction) -> int:
        eps = Fraction(1)
        chain = self.sturm_chain(g)
        steps = 0
        while self._count(chain, r - eps, r) > 1:
            eps /= 2
            steps += 1
            self._check_budget(steps, "isolate_real_roots")
        return self._count(chain, r - eps, r)

    def _count(self, chain: list[Poly], lo: Fraction | None, hi: Fraction | None) -> int:
        return self._variations(chain, lo, -1) - self._variations(chain, hi, 1)

    def _variations(self, chain: list[Poly], x: Fraction | None, direction: int) -> int:
        signs = []
        for p in chain:
            if x is None:
                lead = p.raw_coeffs[-1]
                s = (lead > 0) - (lead < 0)
                if direction < 0 and p.degree % 2:
                    s = -s
            else:
                v = self._poly_value(p, x)
                s = (v > 0) - (v < 0)
            if s:
                signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def _poly_value(self, p: Poly, x: Fraction) -> Fraction:
        return p.evaluate_raw(x)

    def _squarefree_part(self, f: Poly) -> Poly:
        if f.is_zero():
            raise ZeroPolynomialError("SturmService: zero polynomial")
        if f.degree <= 0:
            return f.monic()
        return f.exquo(f.gcd(f.derivative())).monic()

    def _check_budget(self, steps: int, op: str) -> None:
        if steps > self._max_bisections:
            raise InternalError(f"SturmService:{op}: bisection budget exhausted")

    def _require_rational(self, f: Poly, op: str) -> None:
        if f.domain.kind is not DomainKind.RATIONAL:
            raise DomainMismatchError(f"SturmService:{op}: Sturm sequences need a polynomial over Q")


def get_sturm_service() -> SturmService:
    return SturmService(
        poly_service=get_poly_service(),
        max_bisections=algebra_settings.STURM_MAX_BISECTIONS,
    )
