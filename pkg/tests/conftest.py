import random
from fractions import Fraction

import pytest

from so4 import Element, Scalar


def rand_fraction(rng: random.Random, height: int = 8) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def rand_scalar(rng: random.Random, height: int = 8, complex_prob: float = 0.5) -> Scalar:
    im = rand_fraction(rng, height) if rng.random() < complex_prob else Fraction(0)
    return Scalar(rand_fraction(rng, height), im)


def rand_element(rng: random.Random, height: int = 5) -> Element:
    return Element([rand_scalar(rng, height) for _ in range(6)])


@pytest.fixture
def rng():
    return random.Random(20240)
