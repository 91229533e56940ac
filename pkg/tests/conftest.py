import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from algebra.services.poly_service import PolyService, get_poly_service
from algebra.services.sturm_service import SturmService, get_sturm_service
from canonical.services.canonical_service import CanonicalService, get_canonical_service
from matrix.models.mat import Mat
from matrix.services.matrix_service import MatrixService, get_matrix_service
from oscillations.services.oscillation_service import OscillationService, get_oscillation_service
from pencil.services.kronecker_service import KroneckerService, get_kronecker_service
from pencil.services.pencil_service import PencilService, get_pencil_service
from smith.services.smith_service import SmithService, get_smith_service
from support import FOOTNOTE_1_BLOCKS, FOOTNOTE_23_STIFFNESS, jordan_matrix, qmat

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("fast", max_examples=15, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def matrix_service() -> MatrixService:
    return get_matrix_service()


@pytest.fixture
def poly_service() -> PolyService:
    return get_poly_service()


@pytest.fixture
def sturm_service() -> SturmService:
    return get_sturm_service()


@pytest.fixture
def smith_service() -> SmithService:
    return get_smith_service()


@pytest.fixture
def canonical_service() -> CanonicalService:
    return get_canonical_service()


@pytest.fixture
def pencil_service() -> PencilService:
    return get_pencil_service()


@pytest.fixture
def kronecker_service() -> KroneckerService:
    return get_kronecker_service()


@pytest.fixture
def oscillation_service() -> OscillationService:
    return get_oscillation_service()


@pytest.fixture
def footnote_1() -> list[Mat]:
    return [jordan_matrix(blocks) for blocks in FOOTNOTE_1_BLOCKS]


@pytest.fixture
def footnote_23_stiffness() -> Mat:
    return qmat(FOOTNOTE_23_STIFFNESS)
