import random

import pytest

from pqpierce.geometry.region import box


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def unit_square():
    return box("S", 0, 1, 0, 1)


@pytest.fixture
def compact_a():
    return box("A", 0, 1, 0, 1)


@pytest.fixture
def compact_b():
    return box("B", 3, 4, 0, 1)

