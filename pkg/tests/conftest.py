import shutil
from pathlib import Path

import pytest

from wainge.engine import score_input_from_weights
from wainge.store import load_session

REPO_ROOT = Path(__file__).resolve().parents[1]
FIXTURE_PATH = REPO_ROOT / "fixtures" / "ktp-2593.wainge.json"

# Weight matrix of the KTP 2593 case study, R01..R19 in taxonomy order.
KTP_WEIGHTS = [
    0.8, 0.8, 0.7, 0.8, 0.6, 0.5, 0.0, 0.0, 1.0, 0.0,
    0.5, 0.8, 1.0, 0.6, 0.9, 0.8, 0.7, 0.3, 0.8,
]
KTP_AVA = 0.4


@pytest.fixture(scope="session")
def fixture_path() -> Path:
    assert FIXTURE_PATH.exists(), "fixtures/ktp-2593.wainge.json is missing"
    return FIXTURE_PATH


@pytest.fixture
def ktp_path(tmp_path, fixture_path) -> Path:
    """A disposable copy of the shipped fixture."""
    dest = tmp_path / fixture_path.name
    shutil.copy(fixture_path, dest)
    return dest


@pytest.fixture
def ktp_session(fixture_path):
    return load_session(fixture_path)


@pytest.fixture
def ktp_input():
    """The case-study ScoreInput assembled directly, bypassing the store."""
    return score_input_from_weights(KTP_WEIGHTS, ava=KTP_AVA)
