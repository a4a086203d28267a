import pytest

from eisenstein_cohomology.kostant.representatives import HighestWeight, KostantPair
from eisenstein_cohomology.oracle.models import VerificationRun
from eisenstein_cohomology.oracle.tests.factories import VerificationRunFactory
from eisenstein_cohomology.weyl.rootsys import RankContext


@pytest.fixture
def ctx_3_1() -> RankContext:
    return RankContext(3, 1)


@pytest.fixture
def ctx_3_2() -> RankContext:
    return RankContext(3, 2)


@pytest.fixture
def zero_weight_3() -> HighestWeight:
    return HighestWeight.zero(3)


@pytest.fixture
def pair_i3(ctx_3_1) -> KostantPair:
    """({3}, {}) in (n=3, k=1): the t = 1/2 representative for lambda = 0."""
    return KostantPair.of(ctx_3_1, [3], [])


@pytest.fixture
def pair_i1_j2(ctx_3_2) -> KostantPair:
    return KostantPair.of(ctx_3_2, [1], [2])


@pytest.fixture
def verification_run(db) -> VerificationRun:
    return VerificationRunFactory()
