import os
import random
from fractions import Fraction
from typing import Any, Sequence

from algebra.models.domain import GF, QQ, ScalarField
from algebra.models.poly import Poly
from matrix.models.mat import Mat

FOOTNOTE_1_SPECTRUM = [1, 1, 2, 2, 2, 3]

FAST = os.getenv("HYPOTHESIS_PROFILE") == "fast"


def trials(full: int, fast: int = 20) -> int:
    """Length of a seeded randomized loop; the fast hypothesis profile shortens it."""
    return fast if FAST else full


def qmat(rows: Sequence[Sequence[Any]]) -> Mat:
    return Mat(rows, QQ)


def gfmat(rows: Sequence[Sequence[Any]], p: int) -> Mat:
    return Mat(rows, GF(p))


def lam(*coeffs: Any, domain: ScalarField = QQ, var: str = "λ") -> Poly:
    """Polynomial from coefficients written highest degree first."""
    return Poly(list(reversed(coeffs)), domain, var)


def linear(root: Any, domain: ScalarField = QQ, var: str = "λ") -> Poly:
    return Poly.linear_root(root, domain, var)


def jordan_matrix(blocks: Sequence[tuple[Any, int]], domain: ScalarField = QQ) -> Mat:
    """Block diagonal of Jordan blocks J_size(value) with ones on the superdiagonal."""
    n = sum(size for _, size in blocks)
    rows = [[0] * n for _ in range(n)]
    offset = 0
    for value, size in blocks:
        for i in range(size):
            rows[offset + i][offset + i] = value
            if i + 1 < size:
                rows[offset + i][offset + i + 1] = 1
        offset += size
    return Mat(rows, domain)


FOOTNOTE_1_BLOCKS = [
    [(1, 1), (1, 1), (2, 1), (2, 1), (2, 1), (3, 1)],
    [(1, 1), (1, 1), (2, 3), (3, 1)],
    [(1, 1), (1, 1), (2, 1), (2, 2), (3, 1)],
]

FOOTNOTE_1_DIVISORS = [
    "(λ−1), (λ−1), (λ−2), (λ−2), (λ−2), (λ−3)",
    "(λ−1), (λ−1), (λ−2)³, (λ−3)",
    "(λ−1), (λ−1), (λ−2), (λ−2)², (λ−3)",
]

FOOTNOTE_23_STIFFNESS = [[1, -1, 0], [-1, 2, 1], [0, 1, 1]]


def random_unimodular(n: int, domain: ScalarField, rng: random.Random, steps: int | None = None) -> Mat:
    """Integer shears and a row permutation: determinant ±1 in every characteristic."""
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps if steps is not None else 3 * n):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-2, 2)
        rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
    rng.shuffle(rows)
    return Mat(rows, domain)


def random_matrix(n: int, domain: ScalarField, rng: random.Random, bound: int = 3) -> Mat:
    return Mat([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)], domain)


def random_symmetric(n: int, rng: random.Random, bound: int = 4) -> Mat:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = Fraction(rng.randint(-bound, bound), rng.choice([1, 1, 2]))
    return Mat(rows, QQ)


def random_positive_definite(n: int, rng: random.Random, bound: int = 3) -> Mat:
    """BᵀB + I for a random integer B."""
    b = random_matrix(n, QQ, rng, bound)
    return b.transpose() @ b + Mat.identity(n, QQ)


def all_matrices(n: int, p: int) -> list[Mat]:
    dom = GF(p)
    out = []
    for k in range(p ** (n * n)):
        digits = []
        for _ in range(n * n):
            digits.append(k % p)
            k //= p
        out.append(Mat([digits[i * n : (i + 1) * n] for i in range(n)], dom))
    return out
