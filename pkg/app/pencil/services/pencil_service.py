from itertools import islice

from algebra.enum.domain_kind import DomainKind
from algebra.models.binary_form import BinaryForm, HomogeneousPoint
from algebra.models.domain import FieldScalar
from canonical.services.canonical_service import CanonicalService, get_canonical_service
from common.errors.exceptions import (
    DimensionError,
    DomainMismatchError,
    InconsistentInvariantsError,
    SingularPencilError,
    VerificationError,
    WitnessUnavailableError,
)
from common.log.logger import logger
from matrix.models.mat import Mat
from matrix.services.matrix_service import MatrixService, get_matrix_service
from pencil.models.pencil import Pencil
from pencil.schemas.pencil_invariants import (
    PencilDivisor,
    PencilEquivalence,
    PencilInvariants,
    PencilReduction,
)
from smith.services.smith_service import SmithService, get_smith_service

SINGULAR_DIAGNOSIS = (
    "singular pencil: det(uP + vQ) vanishes identically; "
    "classification by minimal indices is not supported"
)


class PencilService:
    def __init__(
        self,
        matrix_service: MatrixService,
        smith_service: SmithService,
        canonical_service: CanonicalService,
    ) -> None:
        self._matrix_service = matrix_service
        self._smith_service = smith_service
        self._canonical_service = canonical_service

    def pencil_det(self, pencil: Pencil) -> BinaryForm:
        """det(uP + vQ) as a binary form of degree n, cross-checked from both charts."""
        n = pencil.size
        dom = pencil.domain
        lam = self._matrix_service.det(self._matrix_service.pencil_matrix(pencil.p, pencil.q, "λ"))
        mu = self._matrix_service.det(self._matrix_service.pencil_matrix(pencil.q, pencil.p, "μ"))
        form = BinaryForm.from_dehomogenized(lam, n)
        if BinaryForm([mu.coeff(n - k) for k in range(n + 1)], dom, n) != form:
            raise VerificationError("PencilService:pencil_det: the λ and μ charts disagree")
        for t in islice(dom.elements(), n + 1):
            if self._matrix_service.det(pencil.p + pencil.q.scale(t)) != form.evaluate(1, t):
                raise VerificationError(f"PencilService:pencil_det: evaluation at (1:{t}) disagrees")
        return form

    def pencil_regular(self, pencil: Pencil) -> bool:
        return not self.pencil_det(pencil).is_zero()

    def pencil_divisors(self, pencil: Pencil) -> PencilInvariants:
        n = pencil.size
        dom = pencil.domain
        form = self.pencil_det(pencil)
        lam = self._matrix_service.pencil_matrix(pencil.p, pencil.q, "λ")
        data = self._smith_service.polynomial_divisor_data(lam)
        invariants = data.invariant_factors[: data.rank]
        if form.is_zero():
            logger.info(f"Singular {n}x{n} pencil of generic rank {data.rank}")
            return PencilInvariants(
                size=n,
                regular=False,
                generic_rank=data.rank,
                determinant=form,
                invariant_factors=invariants,
                divisors=[],
                diagnosis=SINGULAR_DIAGNOSIS,
            )
        divisors = [
            PencilDivisor(
                form=BinaryForm.from_dehomogenized(d.factor, d.factor.degree),
                exponent=d.exponent,
                factor=d.factor,
                point=d.point,
                certified=d.certified,
            )
            for d in data.elementary_divisors
        ]
        mu_smith = self._smith_service.smith_form(
            self._matrix_service.pencil_matrix(pencil.q, pencil.p, "μ")
        )
        at_infinity = HomogeneousPoint(1, 0, dom)
        for d in mu_smith.diagonal:
            e = d.lowest_degree()
            if e > 0:
                divisors.append(
                    PencilDivisor(
                        form=BinaryForm.linear(0, 1, dom),
                        exponent=e,
                        point=at_infinity,
                        at_infinity=True,
                    )
                )
        divisors.sort(key=lambda d: d.key())
        finite_degree = form.dehomogenize().degree
        if sum(d.factor.degree * d.exponent for d in divisors if not d.at_infinity) != finite_degree:
            raise VerificationError("PencilService:pencil_divisors: finite degrees do not sum to deg det")
        if sum(d.exponent for d in divisors if d.at_infinity) != n - finite_degree:
            raise VerificationError("PencilService:pencil_divisors: infinite exponents do not match")
        return PencilInvariants(
            size=n,
            regular=True,
            generic_rank=n,
            determinant=form,
            invariant_factors=invariants,
            divisors=divisors,
        )

    def canonical_pencil(self, invariants: PencilInvariants) -> Pencil:
        """Block pencil with finite blocks (I, −H(φ^e)) followed by infinite blocks (N_e, I_e)."""
        if not invariants.regular:
            raise SingularPencilError(SINGULAR_DIAGNOSIS, generic_rank=invariants.generic_rank)
        total = sum(
            d.exponent if d.at_infinity else d.factor.degree * d.exponent for d in invariants.divisors
        )
        if total != invariants.size:
            raise InconsistentInvariantsError(
                f"PencilService:canonical_pencil: divisor degrees sum to {total}, not {invariants.size}"
            )
        dom = invariants.determinant.domain
        p_blocks, q_blocks = [], []
        for d in sorted(invariants.divisors, key=lambda d: d.key()):
            if d.at_infinity:
                p_blocks.append(self._canonical_service.jordan_block(dom.zero, d.exponent))
                q_blocks.append(Mat.identity(d.exponent, dom))
            else:
                size = d.factor.degree * d.exponent
                p_blocks.append(Mat.identity(size, dom))
                q_blocks.append(-self._canonical_service.hypercompanion(d.factor, d.exponent))
        result = Pencil(Mat.block_diag(p_blocks, dom), Mat.block_diag(q_blocks, dom))
        if self.pencil_divisors(result).signature() != invariants.signature():
            raise VerificationError("PencilService:canonical_pencil: self-test recovered other divisors")
        return result

    def canonical_reduction(self, pencil: Pencil) -> PencilReduction:
        """Invertible X, Y with X·(uP + vQ)·Y equal to the canonical pencil."""
        invariants = self.pencil_divisors(pencil)
        if not invariants.regular:
            raise SingularPencilError(SINGULAR_DIAGNOSIS, generic_rank=invariants.generic_rank)
        n = pencil.size
        dom = pencil.domain
        ms = self._matrix_service
        cs = self._canonical_service
        if ms.det(pencil.p):
            p_inv = ms.inverse(pencil.p)
            form = cs.primary_form(-(p_inv @ pencil.q))
            left = ms.inverse(form.transform) @ p_inv
            right = form.transform
            canonical = Pencil(Mat.identity(n, dom), -form.matrix)
        else:
            c = self._regular_point(pencil)
            r = pencil.p.scale(c) + pencil.q
            r_inv = ms.inverse(r)
            prim = cs.primary_form(r_inv @ pencil.p)
            nilpotent = [b for b in prim.blocks if b.polynomial.degree == 1 and not b.polynomial.coeff(0)]
            invertible = [b for b in prim.blocks if b not in nilpotent]
            order = [b.offset + i for b in invertible + nilpotent for i in range(b.size)]
            t = prim.transform.select_columns(order)
            left_parts, right_parts = [], []
            p_blocks, q_blocks = [], []
            if invertible:
                w1 = Mat.block_diag([cs.hypercompanion(b.polynomial, b.exponent) for b in invertible], dom)
                w1_inv = ms.inverse(w1)
                m1 = w1.nrows
                finite = cs.primary_form(Mat.identity(m1, dom).scale(c) - w1_inv)
                left_parts.append(ms.inverse(finite.transform) @ w1_inv)
                right_parts.append(finite.transform)
                p_blocks.append(Mat.identity(m1, dom))
                q_blocks.append(-finite.matrix)
            if nilpotent:
                w0 = Mat.block_diag([cs.hypercompanion(b.polynomial, b.exponent) for b in nilpotent], dom)
                m0 = w0.nrows
                e_inv = ms.inverse(Mat.identity(m0, dom) - w0.scale(c))
                infinite = cs.jordan_form(e_inv @ w0)
                left_parts.append(ms.inverse(infinite.transform) @ e_inv)
                right_parts.append(infinite.transform)
                p_blocks.append(infinite.matrix)
                q_blocks.append(Mat.identity(m0, dom))
            left = Mat.block_diag(left_parts, dom) @ ms.inverse(t) @ r_inv
            right = t @ Mat.block_diag(right_parts, dom)
            canonical = Pencil(Mat.block_diag(p_blocks, dom), Mat.block_diag(q_blocks, dom))
        expected = self.canonical_pencil(invariants)
        if pencil.transformed(left, right) != canonical or canonical != expected:
            logger.error("Pencil reduction failed its exact check")
            raise VerificationError(
                "PencilService:canonical_reduction: X·(uP + vQ)·Y differs from the canonical pencil"
            )
        return PencilReduction(left=left, right=right, canonical=canonical, verified=True)

    def _regular_point(self, pencil: Pencil) -> FieldScalar:
        dom = pencil.domain
        limit = dom.characteristic if dom.kind is DomainKind.PRIME_FIELD else pencil.size + 1
        for c in islice(dom.elements(), limit):
            if self._matrix_service.det(pencil.p.scale(c) + pencil.q):
                return c
        raise WitnessUnavailableError(
            f"PencilService:canonical_reduction: det(cP + Q) vanishes for every c in {dom}; "
            f"invariants are still available from pencil-eldiv"
        )

    def pencil_equivalent(self, first: Pencil, second: Pencil) -> PencilEquivalence:
        if first.size != second.size:
            raise DimensionError(
                f"PencilService:pencil_equivalent: sizes {first.size} and {second.size} differ"
            )
        if first.domain != second.domain:
            raise DomainMismatchError(
                f"PencilService:pencil_equivalent: pencils over {first.domain} and {second.domain}"
            )
        inv1 = self.pencil_divisors(first)
        inv2 = self.pencil_divisors(second)
        for inv in (inv1, inv2):
            if not inv.regular:
                raise SingularPencilError(SINGULAR_DIAGNOSIS, generic_rank=inv.generic_rank)
        if inv1.signature() != inv2.signature():
            return PencilEquivalence(equivalent=False)
        try:
            r1 = self.canonical_reduction(first)
            r2 = self.canonical_reduction(second)
        except WitnessUnavailableError as e:
            logger.info(f"Equivalent pencils without a witness: {e}")
            return PencilEquivalence(
                equivalent=True,
                note=f"no regular point (c:1) in {first.domain}; equivalence decided by the invariants alone",
            )
        h = (self._matrix_service.inverse(r2.left) @ r1.left).transpose()
        k = r1.right @ self._matrix_service.inverse(r2.right)
        if first.twisted(h, k) != second:
            raise VerificationError(
                "PencilService:pencil_equivalent: Hᵀ(uP + vQ)K differs from uP′ + vQ′"
            )
        return PencilEquivalence(equivalent=True, h=h, k=k, verified=True)

    def divisor_product(self, invariants: PencilInvariants) -> BinaryForm:
        """Product of the divisor forms raised to their exponents."""
        dom = invariants.determinant.domain
        result = BinaryForm.constant(1, dom)
        for d in invariants.divisors:
            result = result * d.form**d.exponent
        return result


def get_pencil_service() -> PencilService:
    return PencilService(
        matrix_service=get_matrix_service(),
        smith_service=get_smith_service(),
        canonical_service=get_canonical_service(),
    )
