from itertools import product
from typing import Any, Iterable, Iterator, Sequence

from algebra.models.binary_form import HomogeneousPoint
from algebra.models.domain import FieldScalar, ScalarField
from algebra.models.poly import Poly
from algebra.services.poly_service import PolyService, get_poly_service
from canonical.enum.form_kind import FormKind
from canonical.schemas.canonical_result import (
    CanonicalBlock,
    CanonicalResult,
    JordanStructure,
    MultiplicativeBlock,
    SimilarityResult,
)
from common.errors.exceptions import (
    DimensionError,
    DomainMismatchError,
    InvalidParameterError,
    NonLinearFactorError,
    SplitFieldRequiredError,
    VerificationError,
)
from common.log.logger import logger
from matrix.models.mat import Mat
from matrix.services.matrix_service import MatrixService, get_matrix_service
from smith.schemas.divisor_data import ElementaryDivisor
from smith.services.smith_service import SmithService, get_smith_service


class CanonicalService:
    def __init__(
        self,
        matrix_service: MatrixService,
        poly_service: PolyService,
        smith_service: SmithService,
    ) -> None:
        self._matrix_service = matrix_service
        self._poly_service = poly_service
        self._smith_service = smith_service

    def companion(self, f: Poly) -> Mat:
        """First-column companion matrix: det(λI − C(f)) = f."""
        if f.degree < 1 or not f.is_monic():
            raise InvalidParameterError(f"CanonicalService:companion: {f} must be monic of degree ≥ 1")
        dom = f.domain
        d = f.degree
        rows = [[dom.zero] * d for _ in range(d)]
        for i in range(d):
            rows[i][0] = -f.coeff(d - i - 1)
            if i + 1 < d:
                rows[i][i + 1] = dom.one
        return Mat.from_entries(rows, dom)

    def hypercompanion(self, phi: Poly, exponent: int) -> Mat:
        """e copies of C(φ) chained by ones along the superdiagonal; nonderogatory with polynomial φ^e."""
        if exponent < 1:
            raise InvalidParameterError("CanonicalService:hypercompanion: exponent must be ≥ 1")
        dom = phi.domain
        block = self.companion(phi)
        d = phi.degree
        rows = Mat.block_diag([block] * exponent, dom).to_lists()
        for k in range(exponent - 1):
            rows[k * d + d - 1][k * d + d] = dom.one
        return Mat.from_entries(rows, dom)

    def jordan_block(self, eigenvalue: Any, size: int) -> Mat:
        eigenvalue = _as_scalar(eigenvalue)
        return self.hypercompanion(Poly.linear_root(eigenvalue, eigenvalue.domain), size)

    def from_elementary_divisors(self, divisors: Iterable[tuple[Poly, int]], domain: ScalarField) -> Mat:
        blocks = [self.hypercompanion(phi, e) for phi, e in divisors]
        if not blocks:
            raise DimensionError("CanonicalService:from_elementary_divisors: empty divisor list")
        return Mat.block_diag(blocks, domain)

    def rational_canonical_form(self, a: Mat) -> CanonicalResult:
        dom = self._require_square_field(a, "rational_canonical_form")
        blocks: list[CanonicalBlock] = []
        columns: list[Mat] = []
        offset = 0
        for d, g in self._cyclic_decomposition(a):
            powers = [g]
            for _ in range(d.degree - 1):
                powers.append(a @ powers[-1])
            columns.extend(reversed(powers))
            blocks.append(CanonicalBlock(polynomial=d, size=d.degree, offset=offset))
            offset += d.degree
        matrix = Mat.block_diag([self.companion(b.polynomial) for b in blocks], dom)
        return self._finish(a, FormKind.RATIONAL, blocks, matrix, columns)

    def primary_form(self, a: Mat) -> CanonicalResult:
        return self._primary(a, FormKind.PRIMARY)

    def jordan_form(self, a: Mat) -> CanonicalResult:
        dom = self._require_square_field(a, "jordan_form")
        data = self._smith_service.divisor_data(a)
        bad = [d for d in data.elementary_divisors if d.factor.degree != 1 or not d.certified]
        if bad:
            names = sorted({str(d.factor) for d in bad})
            raise SplitFieldRequiredError(
                f"Jordan form needs a splitting field: {', '.join(names)} has no root in {dom}; "
                "run `primary` for the primary rational form instead",
                factors=[d.factor for d in bad],
            )
        return self._primary(a, FormKind.JORDAN)

    def _primary(self, a: Mat, kind: FormKind) -> CanonicalResult:
        dom = self._require_square_field(a, "primary_form")
        pieces: list[tuple[Poly, int, bool, list[Mat]]] = []
        for d, g in self._cyclic_decomposition(a):
            for block in self._poly_service.factor(d).blocks:
                phi, e = block.factor, block.exponent
                generator = self._apply_poly(a, d.exquo(phi**e), g)
                columns: list[Mat] = []
                w = generator
                chain = []
                for _ in range(e):
                    chain.append(w)
                    w = self._apply_poly(a, phi, w)
                for w_k in reversed(chain):
                    powers = [w_k]
                    for _ in range(phi.degree - 1):
                        powers.append(a @ powers[-1])
                    columns.extend(reversed(powers))
                pieces.append((phi, e, block.certified, columns))
        pieces.sort(key=lambda p: (p[0].divisor_key(), -p[1]))
        blocks: list[CanonicalBlock] = []
        columns = []
        offset = 0
        for phi, e, certified, cols in pieces:
            eigenvalue = -phi.coeff(0) if kind is FormKind.JORDAN else None
            blocks.append(
                CanonicalBlock(
                    polynomial=phi,
                    exponent=e,
                    size=phi.degree * e,
                    offset=offset,
                    eigenvalue=eigenvalue,
                    certified=certified,
                )
            )
            offset += phi.degree * e
            columns.extend(cols)
        matrix = Mat.block_diag([self.hypercompanion(b.polynomial, b.exponent) for b in blocks], dom)
        jordan = None
        if kind is FormKind.JORDAN:
            jordan = self.eldiv_to_jordan([(b.polynomial, b.exponent) for b in blocks])
        return self._finish(a, kind, blocks, matrix, columns, jordan)

    def _finish(
        self,
        a: Mat,
        kind: FormKind,
        blocks: list[CanonicalBlock],
        matrix: Mat,
        columns: list[Mat],
        jordan: JordanStructure | None = None,
    ) -> CanonicalResult:
        transform = Mat.from_columns(columns, a.domain)
        if not self._matrix_service.det(transform) or a @ transform != transform @ matrix:
            logger.error(f"{kind.title()}: transform check failed for a {a.nrows}x{a.ncols} matrix")
            raise VerificationError(f"CanonicalService:{kind.value}: A·T = T·F fails or T is singular")
        return CanonicalResult(
            kind=kind,
            blocks=blocks,
            matrix=matrix,
            transform=transform,
            verified=True,
            jordan=jordan,
        )

    def _cyclic_decomposition(self, a: Mat) -> list[tuple[Poly, Mat]]:
        """Invariant factors of λI − A paired with cyclic generators read from U⁻¹."""
        n = a.nrows
        char = self._matrix_service.characteristic_matrix(a)
        smith = self._smith_service.smith_form(char)
        out = []
        for j, d in enumerate(smith.diagonal):
            if d.degree <= 0:
                continue
            column = [smith.u_inverse[i, j] for i in range(n)]
            out.append((d, self._evaluate_poly_vector(a, column)))
        return out

    def _evaluate_poly_vector(self, a: Mat, polys: Sequence[Poly]) -> Mat:
        dom = a.domain
        top = max(p.degree for p in polys)
        v = Mat.zeros(a.nrows, 1, dom)
        for k in range(top, -1, -1):
            v = a @ v + Mat.from_entries([[p.coeff(k)] for p in polys], dom)
        return v

    def _apply_poly(self, a: Mat, f: Poly, v: Mat) -> Mat:
        w = Mat.zeros(a.nrows, 1, a.domain)
        for k in range(f.degree, -1, -1):
            w = a @ w + v.scale(f.coeff(k))
        return w

    def eldiv_to_jordan(self, divisors: Iterable[Any]) -> JordanStructure:
        grouped: dict[Any, list[int]] = {}
        for item in divisors:
            phi, e = (item.factor, item.exponent) if isinstance(item, ElementaryDivisor) else item
            if phi.degree != 1:
                raise NonLinearFactorError(
                    f"CanonicalService:eldiv_to_jordan: {phi} is not linear; no Jordan block exists"
                )
            root = -phi.coeff(0) / phi.coeff(1)
            grouped.setdefault(root, []).append(e)
        return JordanStructure(
            blocks=[
                (root, sorted(sizes, reverse=True))
                for root, sizes in sorted(grouped.items(), key=lambda kv: kv[0].sort_key())
            ]
        )

    def jordan_to_eldiv(self, structure: JordanStructure) -> list[ElementaryDivisor]:
        divisors = []
        for root, sizes in structure.blocks:
            root = _as_scalar(root)
            phi = Poly.linear_root(root, root.domain)
            point = HomogeneousPoint(root, 1, root.domain)
            divisors.extend(ElementaryDivisor(factor=phi, exponent=e, point=point) for e in sizes)
        divisors.sort(key=lambda d: d.sort_key())
        return divisors

    def similar(self, a: Mat, b: Mat) -> SimilarityResult:
        self._require_square_field(a, "similar")
        self._require_square_field(b, "similar")
        if a.shape != b.shape:
            raise DimensionError(f"CanonicalService:similar: sizes {a.nrows} and {b.nrows} differ")
        if a.domain != b.domain:
            raise DomainMismatchError(
                f"CanonicalService:similar: matrices over {a.domain} and {b.domain}"
            )
        ra = self.rational_canonical_form(a)
        rb = self.rational_canonical_form(b)
        inv_a = [blk.polynomial for blk in ra.blocks]
        inv_b = [blk.polynomial for blk in rb.blocks]
        if inv_a != inv_b:
            return SimilarityResult(similar=False, invariants_a=inv_a, invariants_b=inv_b)
        witness = ra.transform @ self._matrix_service.inverse(rb.transform)
        if not self._matrix_service.det(witness) or a @ witness != witness @ b:
            raise VerificationError("CanonicalService:similar: A·W = W·B fails for the composed witness")
        return SimilarityResult(
            similar=True,
            witness=witness,
            verified=True,
            invariants_a=inv_a,
            invariants_b=inv_b,
        )

    def multiplicative_block(self, c: Any, size: int) -> MultiplicativeBlock:
        """c(I + N) is similar to J_size(c) through D = diag(1, c⁻¹, c⁻², …)."""
        c = _as_scalar(c)
        if not c:
            raise InvalidParameterError("CanonicalService:multiplicative_block: c must be nonzero")
        if size < 1:
            raise InvalidParameterError("CanonicalService:multiplicative_block: size must be ≥ 1")
        dom = c.domain
        nilpotent = self.jordan_block(dom.zero, size)
        block = (Mat.identity(size, dom) + nilpotent).scale(c)
        transform = Mat.diag([c ** (-k) for k in range(size)], dom)
        transform_inv = Mat.diag([c**k for k in range(size)], dom)
        jordan = self.jordan_block(c, size)
        if transform_inv @ block @ transform != jordan:
            raise VerificationError(
                "CanonicalService:multiplicative_block: D⁻¹·c(I + N)·D differs from J"
            )
        return MultiplicativeBlock(block=block, jordan=jordan, transform=transform, verified=True)

    def similarity_classes(self, f: Poly) -> list[list[tuple[Poly, int]]]:
        """Every elementary-divisor list whose product is the monic polynomial ``f``."""
        if f.degree < 1 or not f.is_monic():
            raise InvalidParameterError(
                f"CanonicalService:similarity_classes: {f} must be monic of degree ≥ 1"
            )
        options = []
        for block in self._poly_service.factor(f).blocks:
            options.append(
                [[(block.factor, part) for part in partition] for partition in _partitions(block.exponent)]
            )
        classes = []
        for choice in product(*options):
            divisors = [pair for group in choice for pair in group]
            divisors.sort(key=lambda p: (p[0].divisor_key(), -p[1]))
            classes.append(divisors)
        return classes

    def _require_square_field(self, a: Mat, op: str) -> ScalarField:
        if not a.is_square():
            raise DimensionError(f"CanonicalService:{op}: matrix is {a.nrows}x{a.ncols}, not square")
        if not isinstance(a.domain, ScalarField):
            raise DomainMismatchError(f"CanonicalService:{op}: {a.domain} is not a field")
        return a.domain


def _as_scalar(value: Any) -> FieldScalar:
    if not isinstance(value, FieldScalar):
        raise DomainMismatchError(f"CanonicalService: expected a field element, got {value!r}")
    return value


def _partitions(n: int, largest: int | None = None) -> Iterator[list[int]]:
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield [first] + rest


def get_canonical_service() -> CanonicalService:
    return CanonicalService(
        matrix_service=get_matrix_service(),
        poly_service=get_poly_service(),
        smith_service=get_smith_service(),
    )
