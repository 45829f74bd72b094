import pytest

from tdcr_twin.spine import SpineParams, build_spine


@pytest.fixture
def model():
    return build_spine(SpineParams())
