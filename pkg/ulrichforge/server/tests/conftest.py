import pytest

from schemas.field import FieldSpec
from schemas.presentation import ScrollConfig
from services.presentation import build_presentation, sample_phi
from utils.seeding import make_rng


@pytest.fixture
def fp():
    return FieldSpec(prime=32003)


@pytest.fixture
def qq():
    return FieldSpec(prime=None)


@pytest.fixture
def rng():
    return make_rng(42)


@pytest.fixture
def make_phi():
    def _make(e, b, k, r, field=None, seed=42):
        field = field or FieldSpec(prime=32003)
        p = build_presentation(ScrollConfig(e=e, b=b, k=k, r=r))
        return sample_phi(p, field, make_rng(seed), seed=seed)
    return _make
