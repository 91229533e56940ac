import math
from fractions import Fraction
from typing import Any

from pydantic import ValidationError

from algebra.models.domain import QQ
from algebra.models.poly import Poly
from algebra.services.poly_service import PolyService, get_poly_service
from algebra.services.sturm_service import SturmService, get_sturm_service
from common.errors.exceptions import (
    CanonformError,
    DimensionError,
    InvalidParameterError,
    IrrationalSpectrumError,
    NotARootError,
    VerificationError,
)
from common.log.logger import logger
from matrix.models.mat import Mat
from matrix.services.matrix_service import MatrixService, get_matrix_service
from oscillations.enum.inertia_method import InertiaMethod
from oscillations.enum.mode_kind import ModeKind
from oscillations.enum.stability_verdict import LagrangeVerdict, WeierstrassVerdict
from oscillations.models.osc_system import OscSystem
from oscillations.schemas.inertia_result import InertiaResult
from oscillations.schemas.mode_report import (
    ModalCongruence,
    Mode,
    ModeReport,
    ModeVector,
    SpectralRoot,
    StabilityVerdicts,
)

SPECTRAL_VARIABLE = "s"


class OscillationService:
    def __init__(
        self,
        matrix_service: MatrixService,
        poly_service: PolyService,
        sturm_service: SturmService,
    ) -> None:
        self._matrix_service = matrix_service
        self._poly_service = poly_service
        self._sturm_service = sturm_service

    def system(self, mass: Mat, stiffness: Mat) -> OscSystem:
        """Validated system; the library error behind a failed validation is re-raised as is."""
        try:
            return OscSystem(mass=mass, stiffness=stiffness)
        except ValidationError as e:
            cause = e.errors()[0].get("ctx", {}).get("error")
            if isinstance(cause, CanonformError):
                raise cause from None
            raise InvalidParameterError(f"OscillationService:system: {e}") from e

    def characteristic_matrix(self, system: OscSystem) -> Mat:
        """K − s·M over Q[s]."""
        return self._matrix_service.pencil_matrix(-system.mass, system.stiffness, SPECTRAL_VARIABLE)

    def char_poly(self, system: OscSystem) -> Poly:
        return self._matrix_service.det(self.characteristic_matrix(system))

    def spectrum(self, system: OscSystem) -> list[SpectralRoot]:
        """Every real root with multiplicity, its irreducible factor and an isolating interval."""
        f = self.char_poly(system)
        roots = []
        for g, m in self._poly_service.squarefree_decompose(f):
            for block in self._poly_service.factor(g).blocks:
                for interval in self._sturm_service.isolate_real_roots(block.factor):
                    roots.append(
                        SpectralRoot(
                            interval=interval,
                            multiplicity=m,
                            minimal_polynomial=block.factor,
                            certified=block.certified,
                        )
                    )
        roots.sort(key=lambda r: (r.interval.lo, r.interval.hi))
        return roots

    def real_rooted(self, system: OscSystem) -> bool:
        """Sturm count over the real line equals the number of distinct complex roots."""
        f = self.char_poly(system)
        distinct = sum(g.degree for g, _ in self._poly_service.squarefree_decompose(f))
        return self._sturm_service.sturm_count(f) == distinct

    def eigvec_adjugate(self, system: OscSystem, root: Any, adjugate: Mat | None = None) -> ModeVector:
        """A nonzero adjugate column at the root, or a nullspace basis when every column vanishes."""
        root = QQ(root)
        if self.char_poly(system)(root):
            raise NotARootError(
                f"OscillationService:eigvec_adjugate: s = {root} is not a characteristic root"
            )
        if adjugate is None:
            adjugate = self._matrix_service.adjugate(self.characteristic_matrix(system))
        evaluated = self._matrix_service.evaluate(adjugate, root)
        for j in range(evaluated.ncols):
            column = evaluated.column_mat(j)
            if not column.is_zero():
                return ModeVector(vectors=[column], column_index=j, polynomial_column=list(adjugate.col(j)))
        logger.info(f"Adjugate vanishes at s = {root}; falling back to the nullspace")
        shifted = system.stiffness - system.mass.scale(root)
        return ModeVector(vectors=self._matrix_service.nullspace(shifted), degenerate=True)

    def polynomial_eigvec(self, system: OscSystem, minimal: Poly, adjugate: Mat | None = None) -> ModeVector:
        """First adjugate column not vanishing modulo the minimal polynomial of an irrational root.

        When every column vanishes the root is repeated; the kernel of K − sM over
        Q[s]/(minimal) then gives one column per independent mode.
        """
        characteristic = self.characteristic_matrix(system)
        if adjugate is None:
            adjugate = self._matrix_service.adjugate(characteristic)
        for j in range(adjugate.ncols):
            column = [p % minimal for p in adjugate.col(j)]
            if any(not p.is_zero() for p in column):
                return ModeVector(
                    vectors=[], column_index=j, polynomial_column=column, polynomial_vectors=[column]
                )
        logger.info(f"Adjugate vanishes modulo {minimal}; solving over the residue field")
        kernel = self._matrix_service.nullspace_mod(characteristic, minimal)
        return ModeVector(
            vectors=[],
            polynomial_vectors=[list(v.col(0)) for v in kernel],
            degenerate=True,
        )

    def leading_principal_minors(self, k: Mat) -> list[Any]:
        return [self._matrix_service.det(k.leading(size)) for size in range(1, k.nrows + 1)]

    def inertia(self, k: Mat) -> InertiaResult:
        if not k.is_square():
            raise DimensionError(f"OscillationService:inertia: matrix is {k.nrows}x{k.ncols}")
        if not k.is_symmetric():
            raise InvalidParameterError("OscillationService:inertia: matrix is not symmetric")
        n = k.nrows
        minors = self.leading_principal_minors(k)
        diagonal, congruence, operations = self._congruence_diagonal(k)
        quotients = None
        method = InertiaMethod.CONGRUENCE
        if all(minors[: n - 1]):
            prev = k.domain.one
            quotients = []
            for d in minors:
                quotients.append(d / prev)
                prev = d
            method = InertiaMethod.LEADING_MINORS
            if quotients != diagonal:
                logger.error("Leading-minor quotients disagree with the congruence diagonal")
                raise VerificationError(
                    "OscillationService:inertia: Δₖ/Δₖ₋₁ differs from the congruence diagonal"
                )
        signs = [d.sign() for d in diagonal]
        return InertiaResult(
            positive=signs.count(1),
            negative=signs.count(-1),
            zero=signs.count(0),
            method=method,
            principal_minors=minors,
            quotients=quotients,
            diagonal=diagonal,
            congruence=congruence,
            pivot_operations=operations,
        )

    def _congruence_diagonal(self, k: Mat) -> tuple[list[Any], Mat, list[str]]:
        """Symmetric elimination S ← EᵀSE recording C with CᵀKC = diag."""
        n = k.nrows
        s = k.to_lists()
        c = Mat.identity(n, k.domain).to_lists()
        operations: list[str] = []

        def add_multiple(target: int, source: int, factor: Any) -> None:
            for row in s:
                row[target] = row[target] + factor * row[source]
            s[target] = [x + factor * y for x, y in zip(s[target], s[source])]
            for row in c:
                row[target] = row[target] + factor * row[source]

        def swap(i: int, j: int) -> None:
            s[i], s[j] = s[j], s[i]
            for rows in (s, c):
                for row in rows:
                    row[i], row[j] = row[j], row[i]

        for t in range(n):
            if not s[t][t]:
                j = next((j for j in range(t + 1, n) if s[j][j]), None)
                if j is not None:
                    swap(t, j)
                    operations.append(f"swap {t + 1},{j + 1}")
                else:
                    j = next((j for j in range(t + 1, n) if s[t][j]), None)
                    if j is None:
                        continue
                    add_multiple(t, j, k.domain.one)
                    operations.append(f"shear {t + 1}+={j + 1}")
            pivot = s[t][t]
            for i in range(t + 1, n):
                if s[i][t]:
                    add_multiple(i, t, -(s[i][t] / pivot))
        congruence = Mat.from_entries(c, k.domain)
        diagonal = [s[i][i] for i in range(n)]
        if congruence.transpose() @ k @ congruence != Mat.diag(diagonal, k.domain):
            logger.error("Congruence certificate failed")
            raise VerificationError("OscillationService:inertia: CᵀKC is not the recorded diagonal")
        return diagonal, congruence, operations

    def classify_stability(self, system: OscSystem) -> StabilityVerdicts:
        roots = self.spectrum(system)
        real_rooted = self.real_rooted(system)
        signs = [r.sign for r in roots]
        repeated = any(r.multiplicity > 1 for r in roots)
        if not real_rooted or -1 in signs:
            lagrange = LagrangeVerdict.UNSTABLE
        elif repeated or 0 in signs:
            lagrange = LagrangeVerdict.CONDITIONAL
        else:
            lagrange = LagrangeVerdict.STABLE
        if real_rooted and all(s > 0 for s in signs):
            weierstrass = WeierstrassVerdict.STABLE
        elif real_rooted and 0 in signs and -1 not in signs:
            weierstrass = WeierstrassVerdict.MARGINAL
        else:
            weierstrass = WeierstrassVerdict.UNSTABLE
        return StabilityVerdicts(
            lagrange=lagrange,
            weierstrass=weierstrass,
            real_rooted=real_rooted,
            roots=roots,
        )

    def mode_report(self, system: OscSystem) -> ModeReport:
        f = self.char_poly(system)
        verdicts = self.classify_stability(system)
        adjugate = self._matrix_service.adjugate(self.characteristic_matrix(system))
        modes: list[Mode] = []
        terms: list[str] = []
        notes: list[str] = []
        index = 1
        for number, root in enumerate(verdicts.roots, start=1):
            kind = ModeKind.from_sign(root.sign)
            if root.exact:
                vector = self.eigvec_adjugate(system, root.interval.value, adjugate)
                frequency = self._frequency(root.interval.value)
            else:
                vector = self.polynomial_eigvec(system, root.minimal_polynomial, adjugate)
                frequency = f"√|s{number}|"
            mode_terms = []
            for _ in range(max(vector.dimension, 1)):
                mode_terms.append(kind.term(index, frequency))
                index += 1
            terms.extend(mode_terms)
            modes.append(
                Mode(
                    index=number,
                    root=root,
                    kind=kind,
                    frequency=frequency,
                    vector=vector,
                    term=" + ".join(mode_terms),
                )
            )
            if root.multiplicity > 1 and kind is ModeKind.OSCILLATORY:
                notes.append(
                    f"s = {root.interval.render()} has multiplicity {root.multiplicity}: "
                    "repeated root, stable — t does NOT leave the sine"
                )
            if vector.degenerate:
                where = "the nullspace" if root.exact else f"the kernel modulo {root.minimal_polynomial}"
                notes.append(
                    f"mode {number}: generic formula degenerate, {vector.dimension} eigenvectors from {where}"
                )
        return ModeReport(
            size=system.size,
            characteristic_polynomial=f,
            modes=modes,
            verdicts=verdicts,
            solution=" + ".join(terms),
            notes=notes,
        )

    def modal_congruence(self, system: OscSystem) -> ModalCongruence:
        """M-orthogonal eigenbasis C with CᵀMC and CᵀKC both diagonal; rational spectra only."""
        roots = self.spectrum(system)
        if any(not r.exact for r in roots):
            raise IrrationalSpectrumError(
                "OscillationService:modal_congruence: the spectrum is not rational; "
                "a rational diagonalizing congruence does not exist in general"
            )
        m, k = system.mass, system.stiffness
        columns: list[Mat] = []
        values = []
        for root in roots:
            value = QQ(root.interval.value)
            basis: list[Mat] = []
            for v in self._matrix_service.nullspace(k - m.scale(value)):
                for u in basis:
                    v = v - u.scale((u.transpose() @ m @ v)[0, 0] / (u.transpose() @ m @ u)[0, 0])
                basis.append(v)
            columns.extend(basis)
            values.extend([value] * len(basis))
        transform = Mat.from_columns(columns, m.domain)
        mass_form = transform.transpose() @ m @ transform
        stiffness_form = transform.transpose() @ k @ transform
        mass_diagonal = mass_form.diagonal()
        stiffness_diagonal = stiffness_form.diagonal()
        if not (
            mass_form.is_diagonal()
            and stiffness_form.is_diagonal()
            and all(kd == s * md for kd, s, md in zip(stiffness_diagonal, values, mass_diagonal))
        ):
            raise VerificationError("OscillationService:modal_congruence: CᵀMC or CᵀKC is not diagonal")
        return ModalCongruence(
            transform=transform,
            mass_diagonal=mass_diagonal,
            stiffness_diagonal=stiffness_diagonal,
            roots=values,
            verified=True,
        )

    def _frequency(self, value: Fraction) -> str:
        """√|s| rendered exactly when it is rational."""
        magnitude = abs(value)
        num, den = magnitude.numerator, magnitude.denominator
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn == num and rd * rd == den:
            return str(Fraction(rn, rd))
        return f"√{magnitude}" if den == 1 else f"√({magnitude})"


def get_oscillation_service() -> OscillationService:
    return OscillationService(
        matrix_service=get_matrix_service(),
        poly_service=get_poly_service(),
        sturm_service=get_sturm_service(),
    )
