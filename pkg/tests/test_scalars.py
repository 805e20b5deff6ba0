import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from so4 import Scalar, parse_scalar, render_scalar, sqrt_in_field

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=20)
scalars = st.builds(Scalar, fractions, fractions)
nonzero_scalars = scalars.filter(bool)


def test_modulus_identity():
    assert Scalar(Fraction(1, 2), 1) * Scalar(Fraction(1, 2), -1) == Scalar(Fraction(5, 4))


def test_additive_identity():
    z = Scalar(Fraction(-7, 3), Fraction(2, 5))
    assert Scalar(0) + z == z
    assert z + 0 == z


def test_rational_division():
    assert Scalar(Fraction(3, 4)) / Scalar(Fraction(-3, 2)) == Scalar(Fraction(-1, 2))


def test_division_by_zero_is_reported():
    with pytest.raises(ZeroDivisionError):
        Scalar(1) / Scalar(0)


def test_int_coercion_in_arithmetic():
    assert 2 * Scalar(0, 1) == Scalar(0, 2)
    assert Scalar(1) - 1 == Scalar(0)
    assert 1 / Scalar(0, 1) == Scalar(0, -1)


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == Scalar(0)


@given(nonzero_scalars)
def test_multiplicative_inverse(a):
    assert a * (Scalar(1) / a) == Scalar(1)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("3/2-1/2i", Scalar(Fraction(3, 2), Fraction(-1, 2))),
        ("0", Scalar(0)),
        ("i", Scalar(0, 1)),
        ("-i", Scalar(0, -1)),
        ("5", Scalar(5)),
        ("-7/3", Scalar(Fraction(-7, 3))),
        ("2i", Scalar(0, 2)),
        ("1+i", Scalar(1, 1)),
        ("-2+3/4i", Scalar(-2, Fraction(3, 4))),
        (" 3/2 - 1/2 i ", Scalar(Fraction(3, 2), Fraction(-1, 2))),
    ],
)
def test_parse_examples(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("bad", ["", "abc", "1/0", "1+", "i1", "1.5", "2/0i", "--3"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


@given(scalars)
def test_parse_render_round_trip(z):
    assert parse_scalar(render_scalar(z)) == z


def test_render_canonical_forms():
    assert render_scalar(Scalar(0)) == "0"
    assert render_scalar(Scalar(0, 1)) == "i"
    assert render_scalar(Scalar(0, -1)) == "-i"
    assert render_scalar(Scalar(Fraction(3, 2), Fraction(-1, 2))) == "3/2-1/2i"
    assert render_scalar(Scalar(1, 1)) == "1+i"


def test_sqrt_in_field_examples():
    assert sqrt_in_field(Scalar(0)) == Scalar(0)
    assert sqrt_in_field(Scalar(4)) == Scalar(2)
    assert sqrt_in_field(Scalar(-4)) == Scalar(0, 2)
    assert sqrt_in_field(Scalar(0, 2)) == Scalar(1, 1)
    assert sqrt_in_field(Scalar(Fraction(9, 4))) == Scalar(Fraction(3, 2))
    assert sqrt_in_field(Scalar(2)) is None
    assert sqrt_in_field(Scalar(0, 1)) is None  # sqrt(i) needs sqrt(1/2)


def test_sqrt_normalization_convention():
    # roots land in the upper half-plane or on the positive real axis
    rng = random.Random(7)
    for _ in range(200):
        w = Scalar(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                   Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        if not w:
            continue
        root = sqrt_in_field(w * w)
        assert root is not None
        assert root * root == w * w
        assert root.im > 0 or (root.im == 0 and root.re > 0)
