import pytest

from bmskm.algebra import AlgebraElement, I, L, M
from bmskm.errors import HNotUnivariate, LambdaZero, ParseError
from bmskm.field import GaussianRational
from bmskm.parser import (parse_element, parse_module_spec, parse_poly, parse_scalar,
                          parse_word)
from bmskm.phi import PhiParams
from bmskm.poly import BiPoly
from bmskm.sampling import random_poly, trial_rng


def test_poly_examples():
    assert dict(parse_poly("s^2*t - 3").terms) == {(2, 1): 1, (0, 0): -3}
    assert parse_poly("0").terms == {}
    with pytest.raises(ParseError):
        parse_poly("s^-1")


def test_precedence():
    assert parse_poly("-s^2") == -(BiPoly.s() ** 2)
    assert parse_poly("2*s + 3*t^2") == parse_poly("(2*s) + (3*(t^2))")
    assert parse_poly("1/2*s") == BiPoly.s().scale(GaussianRational("1/2"))


@pytest.mark.parametrize("text, offset", [
    ("s t", 2),
    ("2s", 1),
    ("s + * t", 4),
    ("(s + 1", 6),
    ("x^2", 0),
    ("1/0", 0),
    ("s^2.5", 3),
])
def test_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_poly(text)
    assert info.value.position == offset


def test_offset_counts_bytes():
    with pytest.raises(ParseError) as info:
        parse_poly("s + é")
    assert info.value.position == 4
    with pytest.raises(ParseError) as info:
        parse_poly("éé")
    assert info.value.position == 0


def test_word_examples():
    assert parse_word("L[2] M[-1]") == [L(2), M(-1)]
    assert parse_word("") == []
    with pytest.raises(ParseError):
        parse_word("K[1]")


def test_element_and_scalar():
    assert parse_element("2*L[1] - M[0]") == AlgebraElement.of(L(1), 2) - AlgebraElement.of(M(0))
    assert parse_element("(1+i)*I[3]") == AlgebraElement.of(I(3), GaussianRational(1, 1))
    assert parse_scalar("-1/2+3*i") == GaussianRational("-1/2", 3)
    for bad in ("L[1]*M[1]", "s*L[1]", "L[1] + 1", "L[1]^2"):
        with pytest.raises(ParseError):
            parse_element(bad)


def test_module_spec_examples():
    p = parse_module_spec("phi(lambda=2,alpha=1,beta=3,rho=5,h=t^2)")
    assert p == PhiParams(2, 1, 3, 5, BiPoly.t() ** 2)
    assert parse_module_spec(str(p)) == p
    with pytest.raises(LambdaZero):
        parse_module_spec("phi(lambda=0,alpha=0,beta=0,rho=0,h=0)")
    with pytest.raises(HNotUnivariate):
        parse_module_spec("phi(lambda=1,alpha=0,beta=0,rho=0,h=s)")
    for bad in ("phi(lambda=1,alpha=0,beta=0,rho=0)",
                "phi(lambda=1,lambda=1,alpha=0,beta=0,rho=0,h=0)",
                "phi(lambda=t,alpha=0,beta=0,rho=0,h=0)",
                "psi(lambda=1,alpha=0,beta=0,rho=0,h=0)"):
        with pytest.raises(ParseError):
            parse_module_spec(bad)


def test_print_parse_roundtrip():
    for k in range(200):
        f = random_poly(trial_rng(3, "parse", k), 6, 6)
        assert parse_poly(str(f)) == f
