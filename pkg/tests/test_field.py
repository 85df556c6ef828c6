from fractions import Fraction

import pytest

from bmskm.field import I, ONE, ZERO, GaussianRational, as_scalar, format_rational
from bmskm.sampling import random_scalar, trial_rng


def test_i_squared_is_minus_one():
    assert I * I == -1


def test_inverse_of_seeded_scalars():
    for k in range(200):
        x = random_scalar(trial_rng(7, "field", k), nonzero=True)
        assert x * x.inverse() == ONE


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_negative_power():
    x = GaussianRational(1, 1)
    assert x ** -2 == (x * x).inverse()
    assert x ** 0 == 1


def test_equality_and_hash_agree_with_numbers():
    assert GaussianRational("3/6") == Fraction(1, 2)
    assert hash(GaussianRational(4)) == hash(4)
    assert hash(GaussianRational("1/3")) == hash(Fraction(1, 3))
    assert GaussianRational(0, 1) != 0


@pytest.mark.parametrize("value, text", [
    (GaussianRational("3/2"), "3/2"),
    (I, "i"),
    (-I, "-i"),
    (GaussianRational(1, 2), "1+2*i"),
    (GaussianRational("3/2", -1), "3/2-i"),
    (GaussianRational(0, "-1/3"), "-1/3*i"),
])
def test_str(value, text):
    assert str(value) == text


def test_format_rational():
    assert format_rational(Fraction(-4, 6)) == "-2/3"
    assert format_rational(5) == "5"


def test_as_scalar():
    assert as_scalar("1/2") == Fraction(1, 2)
    assert as_scalar(object(), strict=False) is None
    with pytest.raises(TypeError):
        as_scalar(object())


def test_conjugate():
    assert GaussianRational(2, 3).conjugate() == GaussianRational(2, -3)
