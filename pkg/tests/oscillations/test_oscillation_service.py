import random
from fractions import Fraction

import pytest

from algebra.models.domain import GF, QQ
from algebra.models.poly import Poly
from common.errors.exceptions import (
    DomainMismatchError,
    InvalidParameterError,
    IrrationalSpectrumError,
    NotARootError,
)
from matrix.models.mat import Mat
from matrix.services.matrix_service import MatrixService
from oscillations.enum.inertia_method import InertiaMethod
from oscillations.enum.mode_kind import ModeKind
from oscillations.enum.stability_verdict import LagrangeVerdict, WeierstrassVerdict
from oscillations.models.osc_system import OscSystem
from oscillations.services.oscillation_service import OscillationService, get_oscillation_service
from support import lam, qmat, random_positive_definite, random_symmetric, random_unimodular, trials

FOOTNOTE_23_MODES = {Fraction(0): [1, 1, -1], Fraction(1): [1, 0, 1], Fraction(3): [1, -2, -1]}
SQRT2_BLOCK = [[1, 1], [1, -1]]
GOLDEN_BLOCK = [[2, 1], [1, 1]]


def identity(n: int) -> Mat:
    return Mat.identity(n, QQ)


def test_footnote_23_spectrum(oscillation_service: OscillationService, footnote_23_stiffness: Mat) -> None:
    system = oscillation_service.system(identity(3), footnote_23_stiffness)
    assert oscillation_service.char_poly(system) == lam(-1, 4, -3, 0)
    assert [r.interval.value for r in oscillation_service.spectrum(system)] == [0, 1, 3]
    assert oscillation_service.real_rooted(system)


def test_footnote_23_adjugate_eigenvectors(
    oscillation_service: OscillationService, matrix_service: MatrixService, footnote_23_stiffness: Mat
) -> None:
    system = oscillation_service.system(identity(3), footnote_23_stiffness)
    for root, expected in FOOTNOTE_23_MODES.items():
        mode = oscillation_service.eigvec_adjugate(system, root)
        assert not mode.degenerate
        (v,) = mode.vectors
        assert (footnote_23_stiffness - identity(3).scale(root)) @ v == Mat.zeros(3, 1, QQ)
        pair = Mat.from_columns([v, Mat.column(expected, QQ)], QQ)
        assert matrix_service.rank(pair) == 1


def test_footnote_23_inertia(oscillation_service: OscillationService, footnote_23_stiffness: Mat) -> None:
    inertia = oscillation_service.inertia(footnote_23_stiffness)
    assert inertia.signature == (2, 0, 1)
    assert inertia.method is InertiaMethod.LEADING_MINORS
    assert inertia.principal_minors == [1, 1, 0]
    c = inertia.congruence
    assert c.transpose() @ footnote_23_stiffness @ c == Mat.diag(inertia.diagonal, QQ)


def test_footnote_23_report(oscillation_service: OscillationService, footnote_23_stiffness: Mat) -> None:
    report = oscillation_service.mode_report(oscillation_service.system(identity(3), footnote_23_stiffness))
    assert [m.kind for m in report.modes] == [ModeKind.AFFINE, ModeKind.OSCILLATORY, ModeKind.OSCILLATORY]
    assert report.verdicts.lagrange is LagrangeVerdict.CONDITIONAL
    assert report.verdicts.weierstrass is WeierstrassVerdict.MARGINAL
    assert report.solution == "(a1 + b1·t)·v1 + a2·sin(t + β2)·v2 + a3·sin(√3·t + β3)·v3"
    assert report.render()[0] == "det(K − sM) = −s³+4s²−3s"


def test_footnote_23_modal_congruence(
    oscillation_service: OscillationService, footnote_23_stiffness: Mat
) -> None:
    system = oscillation_service.system(identity(3), footnote_23_stiffness)
    modal = oscillation_service.modal_congruence(system)
    assert modal.verified
    assert modal.roots == [0, 1, 3]


def test_not_a_root(oscillation_service: OscillationService, footnote_23_stiffness: Mat) -> None:
    system = oscillation_service.system(identity(3), footnote_23_stiffness)
    with pytest.raises(NotARootError):
        oscillation_service.eigvec_adjugate(system, 2)


def test_repeated_root_is_stable_for_weierstrass(oscillation_service: OscillationService) -> None:
    system = oscillation_service.system(identity(2), identity(2))
    report = oscillation_service.mode_report(system)
    assert report.verdicts.lagrange is LagrangeVerdict.CONDITIONAL
    assert report.verdicts.weierstrass is WeierstrassVerdict.STABLE
    (mode,) = report.modes
    assert mode.root.multiplicity == 2
    assert mode.vector.degenerate
    assert len(mode.vector.vectors) == 2
    assert any("t does NOT leave the sine" in note for note in report.notes)


def test_negative_root_is_unstable(oscillation_service: OscillationService) -> None:
    verdicts = oscillation_service.classify_stability(
        oscillation_service.system(identity(2), qmat([[-1, 0], [0, 4]]))
    )
    assert verdicts.lagrange is LagrangeVerdict.UNSTABLE
    assert verdicts.weierstrass is WeierstrassVerdict.UNSTABLE


def test_irrational_spectrum(oscillation_service: OscillationService) -> None:
    system = oscillation_service.system(identity(2), qmat([[2, 1], [1, 1]]))
    report = oscillation_service.mode_report(system)
    assert report.verdicts.lagrange is LagrangeVerdict.STABLE
    assert all(not m.root.exact for m in report.modes)
    assert all(m.root.minimal_polynomial == lam(1, -3, 1) for m in report.modes)
    assert all(m.vector.polynomial_column for m in report.modes)
    with pytest.raises(IrrationalSpectrumError):
        oscillation_service.modal_congruence(system)


def test_invalid_systems(oscillation_service: OscillationService) -> None:
    with pytest.raises(InvalidParameterError):
        oscillation_service.system(qmat([[1, 2], [2, 1]]), identity(2))
    with pytest.raises(InvalidParameterError):
        oscillation_service.system(identity(2), qmat([[1, 2], [0, 1]]))
    with pytest.raises(DomainMismatchError):
        oscillation_service.system(Mat.identity(2, GF(5)), Mat.identity(2, GF(5)))


def test_inertia_without_leading_minors(oscillation_service: OscillationService) -> None:
    inertia = oscillation_service.inertia(qmat([[0, 1], [1, 0]]))
    assert inertia.signature == (1, 1, 0)
    assert inertia.method is InertiaMethod.CONGRUENCE
    assert inertia.pivot_operations


@pytest.mark.slow
def test_symmetric_systems_are_real_rooted(oscillation_service: OscillationService) -> None:
    rng = random.Random(300)
    for trial in range(300):
        n = 2 + trial % 3
        system = oscillation_service.system(random_positive_definite(n, rng), random_symmetric(n, rng))
        assert oscillation_service.real_rooted(system)


def test_inertia_is_a_congruence_invariant(oscillation_service: OscillationService) -> None:
    rng = random.Random(200)
    for trial in range(200):
        n = 2 + trial % 4
        k = random_symmetric(n, rng)
        g = random_unimodular(n, QQ, rng)
        moved = g.transpose() @ k @ g
        assert oscillation_service.inertia(moved).signature == oscillation_service.inertia(k).signature


def test_footnote_23_adjugate_entry(
    oscillation_service: OscillationService, matrix_service: MatrixService, footnote_23_stiffness: Mat
) -> None:
    system = oscillation_service.system(identity(3), footnote_23_stiffness)
    adjugate = matrix_service.adjugate(oscillation_service.characteristic_matrix(system))
    assert adjugate[0, 0] == lam(-1, 1) * lam(-1, 2) - lam(1)
    assert adjugate[0, 0] == lam(1, -3, 1)


def vanishes_modulo(characteristic: Mat, column: list[Poly], minimal: Poly) -> bool:
    for i in range(characteristic.nrows):
        total = characteristic[i, 0] * column[0]
        for j in range(1, characteristic.ncols):
            total = total + characteristic[i, j] * column[j]
        if not (total % minimal).is_zero():
            return False
    return True


def test_repeated_irrational_root_keeps_every_mode(oscillation_service: OscillationService) -> None:
    block = qmat(SQRT2_BLOCK)
    system = oscillation_service.system(identity(4), Mat.block_diag([block, block], QQ))
    report = oscillation_service.mode_report(system)
    characteristic = oscillation_service.characteristic_matrix(system)
    minimal = lam(1, 0, -2, var="s")
    assert [m.root.multiplicity for m in report.modes] == [2, 2]
    assert [m.kind for m in report.modes] == [ModeKind.HYPERBOLIC, ModeKind.OSCILLATORY]
    for mode in report.modes:
        assert mode.root.minimal_polynomial == minimal
        assert mode.vector.degenerate
        assert mode.vector.dimension == 2
        first, second = mode.vector.polynomial_vectors
        assert vanishes_modulo(characteristic, first, minimal)
        assert vanishes_modulo(characteristic, second, minimal)
        minors = [first[i] * second[j] - first[j] * second[i] for i in range(4) for j in range(i + 1, 4)]
        assert any(not (m % minimal).is_zero() for m in minors)
    assert all(f"v{i}" in report.solution for i in range(1, 5))
    assert "v5" not in report.solution
    assert sum("2 eigenvectors from the kernel modulo" in note for note in report.notes) == 2
    assert not any("from the nullspace" in note for note in report.notes)


def structured_system(n: int, rng: random.Random) -> OscSystem:
    """GᵀG and GᵀDG for unimodular G; D repeats eigenvalues, some of them irrational."""
    g = random_unimodular(n, QQ, rng)
    if n == 4 and rng.random() < 0.5:
        block = qmat(rng.choice([SQRT2_BLOCK, GOLDEN_BLOCK]))
        d = Mat.block_diag([block, block], QQ)
    else:
        values = [rng.choice([-1, 0, 1, 2, 4])]
        while len(values) < n:
            values.append(rng.choice([values[-1], values[-1], rng.randint(-2, 5)]))
        d = Mat.diag([QQ(v) for v in values], QQ)
    return get_oscillation_service().system(g.transpose() @ g, g.transpose() @ d @ g)


def small_systems(seed: int) -> list[OscSystem]:
    rng = random.Random(seed)
    systems = []
    for trial in range(trials(80, 12)):
        n = 1 + trial % 4
        if trial % 2:
            systems.append(
                get_oscillation_service().system(random_positive_definite(n, rng), random_symmetric(n, rng))
            )
        else:
            systems.append(structured_system(n, rng))
    return systems


def test_verdicts_disagree_only_on_repeated_positive_roots(oscillation_service: OscillationService) -> None:
    for system in small_systems(537):
        verdicts = oscillation_service.classify_stability(system)
        signs = [r.sign for r in verdicts.roots]
        repeated = any(r.multiplicity > 1 for r in verdicts.roots)
        if verdicts.weierstrass is WeierstrassVerdict.STABLE:
            assert verdicts.real_rooted and all(s > 0 for s in signs)
        if verdicts.lagrange is LagrangeVerdict.STABLE:
            assert verdicts.weierstrass is WeierstrassVerdict.STABLE
        disagree = verdicts.weierstrass is WeierstrassVerdict.STABLE and (
            verdicts.lagrange is not LagrangeVerdict.STABLE
        )
        assert disagree == (repeated and all(s > 0 for s in signs))


def test_adjugate_degenerates_exactly_on_multiple_eigenvalues(
    oscillation_service: OscillationService, matrix_service: MatrixService
) -> None:
    for system in small_systems(538):
        characteristic = oscillation_service.characteristic_matrix(system)
        adjugate = matrix_service.adjugate(characteristic)
        for root in oscillation_service.spectrum(system):
            if root.exact:
                value = root.interval.value
                shifted = system.stiffness - system.mass.scale(value)
                nullity = len(matrix_service.nullspace(shifted))
                vector = oscillation_service.eigvec_adjugate(system, value, adjugate)
                assert all(shifted @ v == Mat.zeros(system.size, 1, QQ) for v in vector.vectors)
            else:
                minimal = root.minimal_polynomial
                nullity = len(matrix_service.nullspace_mod(characteristic, minimal))
                vector = oscillation_service.polynomial_eigvec(system, minimal, adjugate)
                assert all(vanishes_modulo(characteristic, v, minimal) for v in vector.polynomial_vectors)
            assert nullity == root.multiplicity
            assert vector.degenerate == (nullity >= 2)
            assert vector.dimension == nullity
