import random

import pytest

from algebra.models.domain import GF, QQ
from canonical.enum.form_kind import FormKind
from canonical.services.canonical_service import CanonicalService
from common.errors.exceptions import (
    CanonformError,
    InvalidParameterError,
    NonLinearFactorError,
    SplitFieldRequiredError,
    VerificationError,
)
from matrix.models.mat import Mat
from matrix.services.matrix_service import MatrixService
from smith.services.smith_service import SmithService
from support import (
    FOOTNOTE_1_BLOCKS,
    all_matrices,
    jordan_matrix,
    lam,
    linear,
    qmat,
    random_matrix,
    random_unimodular,
    trials,
)


def test_companion_has_its_polynomial(
    canonical_service: CanonicalService, matrix_service: MatrixService
) -> None:
    f = lam(1, 0, -2, 5)
    c = canonical_service.companion(f)
    assert matrix_service.characteristic_polynomial(c) == f
    with pytest.raises(InvalidParameterError):
        canonical_service.companion(lam(2, 1))


def test_rational_form_of_companion_is_itself(canonical_service: CanonicalService) -> None:
    c = canonical_service.companion(lam(1, -1, 0, 3))
    result = canonical_service.rational_canonical_form(c)
    assert result.verified
    assert result.matrix == c
    assert [b.polynomial for b in result.blocks] == [lam(1, -1, 0, 3)]


def test_rational_form_lists_invariant_factors(canonical_service: CanonicalService) -> None:
    a = jordan_matrix([(2, 2), (2, 1), (5, 1)])
    result = canonical_service.rational_canonical_form(a)
    assert result.kind is FormKind.RATIONAL
    assert result.verified
    assert [b.polynomial for b in result.blocks] == [lam(1, -2), lam(1, -2) ** 2 * lam(1, -5)]


def test_primary_form_over_rationals(canonical_service: CanonicalService) -> None:
    f = lam(1, 0, 1) ** 2 * lam(1, -1)
    result = canonical_service.primary_form(canonical_service.companion(f))
    assert result.verified
    assert [(b.polynomial, b.exponent) for b in result.blocks] == [(lam(1, -1), 1), (lam(1, 0, 1), 2)]
    assert result.matrix.nrows == 5


def test_jordan_form_recovers_scrambled_footnote_1(
    canonical_service: CanonicalService, matrix_service: MatrixService
) -> None:
    j = jordan_matrix(FOOTNOTE_1_BLOCKS[2])
    t0 = random_unimodular(6, QQ, random.Random(1), steps=12)
    a = t0 @ j @ matrix_service.inverse(t0)
    result = canonical_service.jordan_form(a)
    assert result.verified
    assert result.jordan is not None
    assert result.jordan.sizes_for(1) == [1, 1]
    assert result.jordan.sizes_for(2) == [2, 1]
    assert result.jordan.sizes_for(3) == [1]
    assert result.matrix == jordan_matrix([(1, 1), (1, 1), (2, 2), (2, 1), (3, 1)])


def test_jordan_form_is_idempotent_on_canonical_matrices(canonical_service: CanonicalService) -> None:
    j = jordan_matrix([(-1, 3), (-1, 1), (4, 2)])
    assert canonical_service.jordan_form(j).matrix == j


def test_jordan_form_refuses_without_split_field(canonical_service: CanonicalService) -> None:
    c = canonical_service.companion(lam(1, 1, 1, domain=GF(2)))
    with pytest.raises(SplitFieldRequiredError) as info:
        canonical_service.jordan_form(c)
    assert info.value.exit_code == 2
    assert "primary" in str(info.value)
    assert canonical_service.primary_form(c).verified


def test_jordan_form_over_prime_field(canonical_service: CanonicalService) -> None:
    j = jordan_matrix([(1, 2), (2, 1)], GF(3))
    result = canonical_service.jordan_form(j)
    assert result.verified
    assert result.matrix == j


def test_footnote_1_matrices_are_pairwise_not_similar(
    canonical_service: CanonicalService, footnote_1: list[Mat]
) -> None:
    for i in range(3):
        for k in range(i + 1, 3):
            result = canonical_service.similar(footnote_1[i], footnote_1[k])
            assert not result.similar
            assert result.witness is None


def test_similarity_witness(canonical_service: CanonicalService, matrix_service: MatrixService) -> None:
    rng = random.Random(8)
    a = random_matrix(4, QQ, rng)
    g = random_unimodular(4, QQ, rng)
    b = g @ a @ matrix_service.inverse(g)
    result = canonical_service.similar(a, b)
    assert result.similar and result.verified
    assert a @ result.witness == result.witness @ b


def test_gf2_two_by_two_has_six_classes(
    canonical_service: CanonicalService, matrix_service: MatrixService
) -> None:
    matrices = all_matrices(2, 2)
    conjugators = [g for g in matrices if matrix_service.det(g)]
    assert len(conjugators) == 6
    classes: dict[tuple, list[Mat]] = {}
    for m in matrices:
        key = tuple(b.polynomial for b in canonical_service.rational_canonical_form(m).blocks)
        classes.setdefault(key, []).append(m)
    assert len(classes) == 6
    for members in classes.values():
        m = members[0]
        orbit = {g @ m @ matrix_service.inverse(g) for g in conjugators}
        assert orbit == set(members)
    for members in classes.values():
        for m in members[1:]:
            assert canonical_service.similar(members[0], m).verified


@pytest.mark.slow
def test_gf3_random_conjugates_are_similar(
    canonical_service: CanonicalService, matrix_service: MatrixService
) -> None:
    rng = random.Random(2024)
    dom = GF(3)
    for _ in range(500):
        a = random_matrix(3, dom, rng, bound=1)
        g = random_unimodular(3, dom, rng)
        b = g @ a @ matrix_service.inverse(g)
        result = canonical_service.similar(a, b)
        assert result.similar and result.verified


def test_similarity_classes_with_given_characteristic_polynomial(
    canonical_service: CanonicalService,
) -> None:
    classes = canonical_service.similarity_classes(lam(1, -3) ** 3 * lam(1, -2))
    assert len(classes) == 3
    exponents = sorted([e for phi, e in c if phi == linear(3)] for c in classes)
    assert exponents == [[1, 1, 1], [2, 1], [3]]


def test_multiplicative_block(canonical_service: CanonicalService) -> None:
    result = canonical_service.multiplicative_block(QQ(3), 4)
    assert result.verified
    assert result.jordan == jordan_matrix([(3, 4)])
    with pytest.raises(InvalidParameterError):
        canonical_service.multiplicative_block(QQ(0), 2)


def test_elementary_divisors_and_jordan_structure_correspond(
    canonical_service: CanonicalService, smith_service: SmithService, footnote_1: list[Mat]
) -> None:
    for a in footnote_1:
        divisors = smith_service.divisor_data(a).elementary_divisors
        structure = canonical_service.eldiv_to_jordan(divisors)
        assert structure.size == 6
        back = canonical_service.jordan_to_eldiv(structure)
        assert [(d.factor, d.exponent) for d in back] == [(d.factor, d.exponent) for d in divisors]


def test_eldiv_to_jordan_rejects_nonlinear_factors(canonical_service: CanonicalService) -> None:
    with pytest.raises(NonLinearFactorError):
        canonical_service.eldiv_to_jordan([(lam(1, 0, 1), 1)])


def test_non_square_input_is_refused(canonical_service: CanonicalService) -> None:
    with pytest.raises(CanonformError):
        canonical_service.rational_canonical_form(qmat([[1, 2, 3], [4, 5, 6]]))


@pytest.mark.parametrize("domain", [QQ, GF(2), GF(3)])
def test_every_form_keeps_trace_determinant_and_characteristic_polynomial(
    canonical_service: CanonicalService, matrix_service: MatrixService, domain
) -> None:
    rng = random.Random(359)
    forms = [
        canonical_service.rational_canonical_form,
        canonical_service.primary_form,
        canonical_service.jordan_form,
    ]
    for trial in range(trials(60, 10)):
        n = 2 + trial % 3
        if trial % 2:
            a = random_matrix(n, domain, rng, bound=2)
        else:
            blocks = [(rng.randint(-2, 2), 1 + rng.randint(0, 1)) for _ in range(n)]
            j = jordan_matrix(blocks, domain)
            t = random_unimodular(j.nrows, domain, rng)
            a = matrix_service.inverse(t) @ j @ t
        charpoly = matrix_service.characteristic_polynomial(a)
        for form in forms:
            try:
                result = form(a)
            except SplitFieldRequiredError:
                continue
            assert result.matrix.trace() == a.trace()
            assert matrix_service.det(result.matrix) == matrix_service.det(a)
            assert matrix_service.characteristic_polynomial(result.matrix) == charpoly


def test_failed_transform_check_raises(
    canonical_service: CanonicalService, monkeypatch: pytest.MonkeyPatch
) -> None:
    monkeypatch.setattr(canonical_service._matrix_service, "det", lambda m: QQ.zero)
    with pytest.raises(VerificationError) as info:
        canonical_service.rational_canonical_form(jordan_matrix([(2, 2), (1, 1)]))
    assert info.value.exit_code == 3
