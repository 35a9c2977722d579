import pytest

from regrange.hilbert import parse_hilbert_function, parse_polynomial


@pytest.fixture
def hf():
    return parse_hilbert_function


@pytest.fixture
def poly():
    return parse_polynomial
