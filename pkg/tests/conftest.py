import os
import sys

import pytest
from hypothesis import settings as hypothesis_settings

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from algebra.binary_form import BinaryForm  # noqa: E402
from settings import Settings  # noqa: E402

hypothesis_settings.register_profile("ci", max_examples=60, deadline=None)
hypothesis_settings.load_profile("ci")


@pytest.fixture
def app_settings():
    return Settings(jobs=1)


@pytest.fixture
def psi7_form():
    return BinaryForm.of(1, 1, -2, -1)


@pytest.fixture
def psi24_form():
    return BinaryForm.of(1, 0, -4, 0, 1)


@pytest.fixture
def quartic_definite():
    """x^4 + y^4."""
    return BinaryForm.of(1, 0, 0, 0, 1)
