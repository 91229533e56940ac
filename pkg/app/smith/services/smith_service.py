from typing import Any

from algebra.models.binary_form import HomogeneousPoint
from algebra.models.domain import ZZ, Domain, IntegerRing, ScalarField
from algebra.models.poly import Poly, PolynomialRing
from algebra.services.poly_service import PolyService, get_poly_service
from common.errors.exceptions import (
    ChainDivisibilityError,
    DimensionError,
    DomainMismatchError,
    InexactDivisionError,
    OracleCapExceededError,
    VerificationError,
)
from common.log.logger import logger
from matrix.models.mat import Mat
from matrix.services.matrix_service import MatrixService, get_matrix_service
from smith.config.smith_config import smith_settings
from smith.schemas.divisor_data import DivisorData, ElementaryDivisor
from smith.schemas.smith_result import SmithResult


class SmithService:
    def __init__(
        self,
        matrix_service: MatrixService,
        poly_service: PolyService,
        oracle_cap: int,
    ) -> None:
        self._matrix_service = matrix_service
        self._poly_service = poly_service
        self._oracle_cap = oracle_cap

    def smith_form(self, m: Mat) -> SmithResult:
        """Diagonalize over Z or F[λ] by unimodular row and column operations."""
        dom = m.domain
        if not isinstance(dom, (IntegerRing, PolynomialRing, ScalarField)):
            raise DomainMismatchError(f"SmithService:smith_form: {dom} is not Euclidean")
        if isinstance(dom, PolynomialRing) and not dom.base.is_field():
            raise DomainMismatchError(f"SmithService:smith_form: {dom} is not Euclidean")
        nrows, ncols = m.shape
        a = [list(r) for r in m.rows()]
        u = Mat.identity(nrows, dom).to_lists()
        u_inv = Mat.identity(nrows, dom).to_lists()
        v = Mat.identity(ncols, dom).to_lists()

        for t in range(min(nrows, ncols)):
            pivot = self._select_pivot(a, t, dom)
            if pivot is None:
                break
            while True:
                i, j = pivot
                if i != t:
                    a[i], a[t] = a[t], a[i]
                    u[i], u[t] = u[t], u[i]
                    for row in u_inv:
                        row[i], row[t] = row[t], row[i]
                if j != t:
                    for row in a:
                        row[j], row[t] = row[t], row[j]
                    for row in v:
                        row[j], row[t] = row[t], row[j]
                p = a[t][t]
                clean = True
                for i in range(t + 1, nrows):
                    if a[i][t]:
                        q, rem = dom.divmod(a[i][t], p)
                        self._add_row(a, u, u_inv, target=i, source=t, factor=-q)
                        clean = clean and not rem
                for j in range(t + 1, ncols):
                    if a[t][j]:
                        q, rem = dom.divmod(a[t][j], p)
                        self._add_col(a, v, target=j, source=t, factor=-q)
                        clean = clean and not rem
                if not clean:
                    pivot = self._select_pivot(a, t, dom)
                    continue
                bad = next(
                    (
                        i
                        for i in range(t + 1, nrows)
                        for j in range(t + 1, ncols)
                        if a[i][j] and dom.divmod(a[i][j], p)[1]
                    ),
                    None,
                )
                if bad is None:
                    break
                self._add_row(a, u, u_inv, target=t, source=bad, factor=dom.one)
                pivot = self._select_pivot(a, t, dom)
            _, unit = dom.unit_normal(a[t][t])
            if unit != dom.one:
                unit_inv = dom.exquo(dom.one, unit)
                a[t] = [unit * x for x in a[t]]
                u[t] = [unit * x for x in u[t]]
                for row in u_inv:
                    row[t] = row[t] * unit_inv

        result = SmithResult(
            u=Mat.from_entries(u, dom),
            s=Mat.from_entries(a, dom),
            v=Mat.from_entries(v, dom),
            u_inverse=Mat.from_entries(u_inv, dom),
        )
        self._verify(m, result)
        return result

    def _select_pivot(self, a: list[list[Any]], t: int, dom: Domain) -> tuple[int, int] | None:
        best = None
        for i in range(t, len(a)):
            for j in range(t, len(a[0])):
                if a[i][j]:
                    key = (dom.euclid_size(a[i][j]), i, j)
                    if best is None or key < best:
                        best = key
        return None if best is None else (best[1], best[2])

    def _add_row(
        self,
        a: list[list[Any]],
        u: list[list[Any]],
        u_inv: list[list[Any]],
        target: int,
        source: int,
        factor: Any,
    ) -> None:
        a[target] = [x + factor * y for x, y in zip(a[target], a[source])]
        u[target] = [x + factor * y for x, y in zip(u[target], u[source])]
        for row in u_inv:
            row[source] = row[source] - factor * row[target]

    def _add_col(self, a: list[list[Any]], v: list[list[Any]], target: int, source: int, factor: Any) -> None:
        for rows in (a, v):
            for row in rows:
                row[target] = row[target] + factor * row[source]

    def _verify(self, m: Mat, result: SmithResult) -> None:
        dom = m.domain
        if result.u @ m @ result.v != result.s:
            raise VerificationError("SmithService:smith_form: U·M·V differs from S")
        if result.u @ result.u_inverse != Mat.identity(m.nrows, dom):
            raise VerificationError("SmithService:smith_form: U·U⁻¹ is not the identity")
        if not result.s.is_diagonal():
            raise VerificationError("SmithService:smith_form: S is not diagonal")
        diag = result.diagonal
        for d, e in zip(diag, diag[1:]):
            if d and e and dom.divmod(e, d)[1]:
                raise VerificationError(f"SmithService:smith_form: {d} does not divide {e}")
            if not d and e:
                raise VerificationError("SmithService:smith_form: zero precedes a nonzero entry")

    def gcd_of_minors(self, m: Mat, k: int, cap: int | None = None) -> Any:
        """Monic gcd of all k×k minors; stops early once the gcd is a unit."""
        self._check_cap(m, cap)
        dom = m.domain
        g = dom.zero
        for minor in self._matrix_service.iter_minors(m, k):
            if minor.value:
                g = dom.gcd(g, minor.value)
                if dom.is_unit(g):
                    return dom.one
        return g

    def gcd_minors_chain(self, m: Mat, cap: int | None = None) -> list[Any]:
        """D_1, …, D_min(r,c) computed directly from minors."""
        self._check_cap(m, cap)
        chain = []
        for k in range(1, min(m.shape) + 1):
            chain.append(self.gcd_of_minors(m, k, cap))
        return chain

    def _check_cap(self, m: Mat, cap: int | None) -> None:
        cap = self._oracle_cap if cap is None else cap
        if max(m.shape) > cap:
            raise OracleCapExceededError(
                f"SmithService:gcd_minors_chain: {m.nrows}x{m.ncols} exceeds the minor oracle cap {cap}"
            )

    def elementary_divisors_from_chain(self, chain: list[Poly]) -> list[ElementaryDivisor]:
        """Invariant factors D_k/D_(k-1) and their prime-power decomposition."""
        invariants = self.invariant_factors_from_chain(chain)
        return self._split_invariants(invariants)

    def invariant_factors_from_chain(self, chain: list[Poly]) -> list[Poly]:
        if not chain:
            return []
        rank = next((k for k, d in enumerate(chain) if d.is_zero()), len(chain))
        chain = chain[:rank]
        for k in range(1, len(chain)):
            if not chain[k - 1].divides(chain[k]):
                raise ChainDivisibilityError(
                    f"SmithService:elementary_divisors_from_chain: D_{k} = {chain[k - 1]} "
                    f"does not divide D_{k + 1} = {chain[k]}"
                )
        invariants = []
        prev = None
        for d in chain:
            invariants.append(d.monic() if prev is None else d.exquo(prev).monic())
            prev = d
        for k in range(1, len(invariants)):
            if not invariants[k - 1].divides(invariants[k]):
                raise ChainDivisibilityError(
                    f"SmithService:elementary_divisors_from_chain: i_{k} = {invariants[k - 1]} "
                    f"does not divide i_{k + 1} = {invariants[k]}"
                )
        return invariants

    def _split_invariants(self, invariants: list[Poly]) -> list[ElementaryDivisor]:
        if not invariants or invariants[-1].degree <= 0:
            return []
        top = self._poly_service.factor(invariants[-1])
        divisors: list[ElementaryDivisor] = []
        for block in top.blocks:
            phi = block.factor
            point = None
            if phi.degree == 1:
                point = HomogeneousPoint(-phi.coeff(0), 1, phi.domain)
            for inv in invariants:
                e = self._multiplicity(phi, inv)
                if e:
                    divisors.append(
                        ElementaryDivisor(factor=phi, exponent=e, certified=block.certified, point=point)
                    )
        if top.unsplit and not self._product_matches(divisors, invariants):
            logger.warning("Unsplit factor straddles invariant factors; factoring each separately")
            divisors = []
            for inv in invariants:
                if inv.degree <= 0:
                    continue
                for block in self._poly_service.factor(inv).blocks:
                    phi = block.factor
                    point = HomogeneousPoint(-phi.coeff(0), 1, phi.domain) if phi.degree == 1 else None
                    divisors.append(
                        ElementaryDivisor(
                            factor=phi, exponent=block.exponent, certified=block.certified, point=point
                        )
                    )
        divisors.sort(key=lambda d: d.sort_key())
        return divisors

    def _multiplicity(self, phi: Poly, f: Poly) -> int:
        e = 0
        while f.degree >= phi.degree:
            q, r = f.divmod(phi)
            if not r.is_zero():
                break
            f = q
            e += 1
        return e

    def _product_matches(self, divisors: list[ElementaryDivisor], invariants: list[Poly]) -> bool:
        one = invariants[-1].monic() ** 0
        left, right = one, one
        for d in divisors:
            left = left * d.expand()
        for inv in invariants:
            right = right * inv
        return left == right

    def divisor_data(self, a: Mat) -> DivisorData:
        """Invariant data of λI − A for a square matrix over Q or GF(p)."""
        if not a.is_square():
            raise DimensionError(f"SmithService:divisor_data: matrix is {a.nrows}x{a.ncols}")
        if not isinstance(a.domain, ScalarField):
            raise DomainMismatchError(f"SmithService:divisor_data: {a.domain} is not a field")
        char = self._matrix_service.characteristic_matrix(a)
        return self.polynomial_divisor_data(char, str(a.domain))

    def polynomial_divisor_data(self, m: Mat, label: str | None = None) -> DivisorData:
        """Invariant data of an arbitrary matrix over F[λ]."""
        result = self.smith_form(m)
        invariants = result.diagonal
        rank = result.rank
        chain = []
        acc = m.domain.one
        for k, d in enumerate(invariants):
            acc = acc * d if k < rank else m.domain.zero
            chain.append(acc)
        divisors = self._split_invariants(invariants[:rank])
        data = DivisorData(
            domain=label or str(m.domain.base),
            size=m.nrows,
            rank=rank,
            gcd_chain=chain,
            invariant_factors=invariants,
            elementary_divisors=divisors,
        )
        logger.debug(
            f"Divisor data over {data.domain}: invariant factors {[str(i) for i in invariants]}"
        )
        return data

    def integer_divisor_data(self, m: Mat) -> DivisorData:
        """Smith invariants of an integer matrix with prime-power elementary divisors."""
        if not isinstance(m.domain, IntegerRing):
            raise DomainMismatchError(f"SmithService:integer_divisor_data: {m.domain} is not Z")
        result = self.smith_form(m)
        invariants = result.diagonal
        rank = result.rank
        chain = []
        acc = 1
        for k, d in enumerate(invariants):
            acc = acc * d if k < rank else 0
            chain.append(acc)
        divisors = []
        for d in invariants[:rank]:
            if d == 1:
                continue
            for prime, e in self._poly_service.factor_integer(d):
                divisors.append(ElementaryDivisor(factor=prime, exponent=e))
        divisors.sort(key=lambda d: d.sort_key())
        return DivisorData(
            domain=str(ZZ),
            size=m.nrows,
            rank=rank,
            gcd_chain=chain,
            invariant_factors=invariants,
            elementary_divisors=divisors,
        )

    def is_unimodular(self, m: Mat) -> bool:
        try:
            return m.is_square() and m.domain.is_unit(self._matrix_service.det(m))
        except InexactDivisionError:
            return False


def get_smith_service() -> SmithService:
    return SmithService(
        matrix_service=get_matrix_service(),
        poly_service=get_poly_service(),
        oracle_cap=smith_settings.ORACLE_MINOR_CAP,
    )
