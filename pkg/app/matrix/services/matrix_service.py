from itertools import combinations
from typing import Any, Iterator

from algebra.models.domain import Domain, ScalarField
from algebra.models.poly import Poly, PolynomialRing
from common.errors.exceptions import (
    DimensionError,
    DomainMismatchError,
    SingularMatrixError,
    VerificationError,
)
from common.log.logger import logger
from matrix.models.mat import Mat
from matrix.schemas.echelon import Echelon
from matrix.schemas.minor import Minor


class MatrixService:
    """Exact determinants, minors, adjugates and linear solving over any supported domain."""

    def det(self, m: Mat) -> Any:
        """Fraction-free Bareiss elimination with row swaps."""
        self._require_square(m, "det")
        dom = m.domain
        n = m.nrows
        a = [list(r) for r in m.rows()]
        negate = False
        prev = dom.one
        for k in range(n - 1):
            if not a[k][k]:
                swap = next((i for i in range(k + 1, n) if a[i][k]), None)
                if swap is None:
                    return dom.zero
                a[k], a[swap] = a[swap], a[k]
                negate = not negate
            pivot = a[k][k]
            for i in range(k + 1, n):
                aik = a[i][k]
                for j in range(k + 1, n):
                    a[i][j] = dom.exquo(a[i][j] * pivot - aik * a[k][j], prev)
            prev = pivot
        result = a[n - 1][n - 1]
        return -result if negate else result

    def det_by_cofactors(self, m: Mat) -> Any:
        self._require_square(m, "det_by_cofactors")
        return self._laplace(m.to_lists(), m.domain)

    def _laplace(self, a: list[list[Any]], dom: Domain) -> Any:
        n = len(a)
        if n == 1:
            return a[0][0]
        total = dom.zero
        for j in range(n):
            if not a[0][j]:
                continue
            minor = [row[:j] + row[j + 1 :] for row in a[1:]]
            term = a[0][j] * self._laplace(minor, dom)
            total = total - term if j % 2 else total + term
        return total

    def adjugate(self, m: Mat) -> Mat:
        self._require_square(m, "adjugate")
        dom = m.domain
        n = m.nrows
        if n == 1:
            return Mat.from_entries([[dom.one]], dom)
        adj = [[dom.zero] * n for _ in range(n)]
        for i in range(n):
            rows = [r for r in range(n) if r != i]
            for j in range(n):
                cols = [c for c in range(n) if c != j]
                d = self.det(m.submatrix(rows, cols))
                adj[j][i] = -d if (i + j) % 2 else d
        return Mat.from_entries(adj, dom)

    def rref(self, m: Mat) -> Echelon:
        """Reduced row echelon form over a field."""
        dom = self._require_field(m, "rref")
        a = [list(r) for r in m.rows()]
        nrows, ncols = m.shape
        pivots: list[int] = []
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            p = next((i for i in range(r, nrows) if a[i][c]), None)
            if p is None:
                continue
            a[r], a[p] = a[p], a[r]
            inv = 1 / a[r][c]
            a[r] = [x * inv for x in a[r]]
            for i in range(nrows):
                if i != r and a[i][c]:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
        return Echelon(reduced=Mat.from_entries(a, dom), pivots=pivots)

    def rank(self, m: Mat) -> int:
        if m.domain.is_field():
            return self.rref(m).rank
        if isinstance(m.domain, PolynomialRing):
            return self._generic_rank(m)
        raise DomainMismatchError(f"MatrixService:rank: unsupported domain {m.domain}")

    def _generic_rank(self, m: Mat) -> int:
        """Rank over the fraction field, by fraction-free elimination."""
        dom = m.domain
        a = [list(r) for r in m.rows()]
        nrows, ncols = m.shape
        r = 0
        for c in range(ncols):
            p = next((i for i in range(r, nrows) if a[i][c]), None)
            if p is None:
                continue
            a[r], a[p] = a[p], a[r]
            for i in range(r + 1, nrows):
                if a[i][c]:
                    f, g = a[r][c], a[i][c]
                    a[i] = [f * x - g * y for x, y in zip(a[i], a[r])]
            r += 1
            if r == nrows:
                break
        logger.debug(f"Generic rank {r} over {dom}")
        return r

    def nullspace(self, m: Mat) -> list[Mat]:
        """Basis of the right kernel; each free variable is set to one in turn."""
        ech = self.rref(m)
        dom = m.domain
        ncols = m.ncols
        free = [c for c in range(ncols) if c not in ech.pivots]
        basis = []
        for f in free:
            v = [dom.zero] * ncols
            v[f] = dom.one
            for r, pc in enumerate(ech.pivots):
                v[pc] = -ech.reduced[r, f]
            basis.append(Mat.from_entries([[x] for x in v], dom))
        return basis

    def nullspace_mod(self, m: Mat, modulus: Poly) -> list[Mat]:
        """Right kernel of a polynomial matrix over F[x]/(modulus), modulus irreducible.

        Basis entries are polynomials reduced modulo ``modulus``.
        """
        ring = m.domain
        if not isinstance(ring, PolynomialRing):
            raise DomainMismatchError("MatrixService:nullspace_mod: not a polynomial matrix")
        a = [[p % modulus for p in r] for r in m.rows()]
        nrows, ncols = m.shape
        pivots: list[int] = []
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            p = next((i for i in range(r, nrows) if a[i][c]), None)
            if p is None:
                continue
            a[r], a[p] = a[p], a[r]
            inv = a[r][c].invert_mod(modulus)
            a[r] = [(x * inv) % modulus for x in a[r]]
            for i in range(nrows):
                if i != r and a[i][c]:
                    f = a[i][c]
                    a[i] = [(x - f * y) % modulus for x, y in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
        basis = []
        for f in (c for c in range(ncols) if c not in pivots):
            v = [ring.zero] * ncols
            v[f] = ring.one
            for row, pc in enumerate(pivots):
                v[pc] = -a[row][f]
            basis.append(Mat.from_entries([[x] for x in v], ring))
        logger.debug(f"Kernel of dimension {len(basis)} modulo {modulus}")
        return basis

    def column_space(self, m: Mat) -> list[Mat]:
        ech = self.rref(m)
        return [m.column_mat(c) for c in ech.pivots]

    def iter_minors(self, m: Mat, k: int) -> Iterator[Minor]:
        nrows, ncols = m.shape
        if not 1 <= k <= min(nrows, ncols):
            raise DimensionError(
                f"MatrixService:k_minors: order {k} outside 1..{min(nrows, ncols)}"
            )
        a = m.rows()
        zero = m.domain.zero
        for rows in combinations(range(nrows), k):
            if any(not any(a[i]) for i in rows):
                for cols in combinations(range(ncols), k):
                    yield Minor(rows, cols, zero)
                continue
            for cols in combinations(range(ncols), k):
                if any(not any(a[i][j] for i in rows) for j in cols):
                    yield Minor(rows, cols, zero)
                    continue
                yield Minor(rows, cols, self.det(m.submatrix(rows, cols)))

    def k_minors(self, m: Mat, k: int) -> list[Minor]:
        return list(self.iter_minors(m, k))

    def inverse(self, m: Mat) -> Mat:
        self._require_square(m, "inverse")
        dom = m.domain
        n = m.nrows
        if dom.is_field():
            aug = Mat.from_entries(
                [list(r) + list(e) for r, e in zip(m.rows(), Mat.identity(n, dom).rows())], dom
            )
            ech = self.rref(aug)
            if ech.pivots[:n] != list(range(n)):
                raise SingularMatrixError("MatrixService:inverse: matrix is singular", determinant=dom.zero)
            inv = ech.reduced.submatrix(range(n), range(n, 2 * n))
        else:
            d = self.det(m)
            if not dom.is_unit(d):
                raise SingularMatrixError(
                    f"MatrixService:inverse: determinant {d} is not a unit in {dom}", determinant=d
                )
            inv = self.adjugate(m).map(lambda x: dom.exquo(x, d))
        if m @ inv != Mat.identity(n, dom):
            raise VerificationError("MatrixService:inverse: M·M⁻¹ is not the identity")
        return inv

    def is_invertible(self, m: Mat) -> bool:
        return m.is_square() and m.domain.is_unit(self.det(m))

    def characteristic_matrix(self, a: Mat, var: str = "λ") -> Mat:
        """λI − A over F[λ]."""
        self._require_square(a, "characteristic_matrix")
        base = self._require_field(a, "characteristic_matrix")
        ring = PolynomialRing(base, var)
        rows = []
        for i, r in enumerate(a.rows()):
            rows.append(
                [Poly([-x, 1], base, var) if i == j else Poly([-x], base, var) for j, x in enumerate(r)]
            )
        return Mat.from_entries(rows, ring)

    def pencil_matrix(self, p: Mat, q: Mat, var: str = "λ") -> Mat:
        """var·P + Q over F[var]."""
        if p.shape != q.shape:
            raise DimensionError(f"MatrixService:pencil_matrix: shapes {p.shape} and {q.shape} differ")
        if p.domain != q.domain:
            raise DomainMismatchError("MatrixService:pencil_matrix: P and Q live over different fields")
        base = self._require_field(p, "pencil_matrix")
        ring = PolynomialRing(base, var)
        rows = [
            [Poly([y, x], base, var) for x, y in zip(rp, rq)] for rp, rq in zip(p.rows(), q.rows())
        ]
        return Mat.from_entries(rows, ring)

    def characteristic_polynomial(self, a: Mat, var: str = "λ") -> Poly:
        return self.det(self.characteristic_matrix(a, var))

    def evaluate(self, m: Mat, value: Any) -> Mat:
        """Substitute a scalar for the variable of a polynomial matrix."""
        ring = m.domain
        if not isinstance(ring, PolynomialRing):
            raise DomainMismatchError("MatrixService:evaluate: not a polynomial matrix")
        return m.map(lambda p: p(value), ring.base)

    def _require_square(self, m: Mat, op: str) -> None:
        if not m.is_square():
            raise DimensionError(f"MatrixService:{op}: matrix is {m.nrows}x{m.ncols}, not square")

    def _require_field(self, m: Mat, op: str) -> ScalarField:
        if not isinstance(m.domain, ScalarField):
            raise DomainMismatchError(f"MatrixService:{op}: {m.domain} is not a field")
        return m.domain


def get_matrix_service() -> MatrixService:
    return MatrixService()
