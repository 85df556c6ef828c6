import pytest

from bmskm.errors import NotUnivariateS, NotUnivariateT
from bmskm.field import I, GaussianRational
from bmskm.parser import parse_poly as P
from bmskm.poly import BiPoly, DegreeBox, d_dt, diff_quotient_t, eval_t, monomial_key, shift_s

s, t = BiPoly.s(), BiPoly.t()


def test_difference_of_squares():
    assert (s + t) * (s - t) == s**2 - t**2


def test_additive_identity():
    f = P("3*s*t - i")
    assert f + BiPoly.zero() == f


def test_constant_i_squared():
    c = BiPoly.constant(I)
    assert c * c == BiPoly.constant(-1)


def test_zero_coefficients_dropped():
    f = BiPoly({(1, 0): 1, (0, 0): 0})
    assert dict(f.terms) == {(1, 0): 1}
    assert (s - s).terms == {}
    assert not (s - s)


def test_shift_examples():
    assert shift_s(s**2, 1) == s**2 - 2 * s + 1
    assert shift_s(t**3, 7) == t**3
    f = P("s^3*t + 2*s - 1")
    assert shift_s(f, 0) == f
    assert shift_s(f, -2) == P("(s+2)^3*t + 2*(s+2) - 1")


def test_d_dt_examples():
    assert d_dt(s * t**2) == 2 * s * t
    assert d_dt(BiPoly.constant(5)) == BiPoly.zero()


def test_eval_t_examples():
    assert eval_t(t**2, 1) == 1
    assert eval_t(P("t^2 + 3*t - 7"), 0) == -7
    assert eval_t(BiPoly.constant(5), GaussianRational(2, 1)) == 5
    with pytest.raises(NotUnivariateT):
        eval_t(s, 0)


def test_eval_s_requires_s_only():
    assert P("s^2 + 1").eval_s(I) == 0
    with pytest.raises(NotUnivariateS):
        (s * t).eval_s(0)


def test_diff_quotient_examples():
    assert diff_quotient_t(t**3, 2) == t**2 + 2 * t + 4
    assert diff_quotient_t(t, GaussianRational(3, -1)) == BiPoly.one()
    assert diff_quotient_t(BiPoly.constant(9), 4) == BiPoly.zero()
    with pytest.raises(NotUnivariateT):
        diff_quotient_t(s, 0)


def test_degrees_and_accessors():
    f = P("s^2*t - 3")
    assert dict(f.terms) == {(2, 1): 1, (0, 0): -3}
    assert (f.deg_s, f.deg_t) == (2, 1)
    assert BiPoly.zero().deg_s == -1
    assert f.leading_monomial() == (2, 1)
    assert f.constant_term() == -3
    assert f.t_coefficient(1) == s**2
    assert f.truncate_t(1) == BiPoly.constant(-3)


def test_graded_lex_order():
    f = P("t^3 + s*t + s^2 + 1")
    assert [m for m, _ in f.sorted_terms()] == [(0, 3), (2, 0), (1, 1), (0, 0)]
    assert monomial_key((2, 0)) > monomial_key((1, 1)) > monomial_key((0, 2))


def test_degree_box():
    box = DegreeBox(2, 1)
    assert box.dimension == 6
    assert box.contains((2, 1)) and not box.contains((3, 0))
    assert len(box.monomials()) == 6
    assert P("s^2*t").fits(box) and not P("t^2").fits(box)
    assert str(box) == "2,1"


def test_printing():
    assert str(P("s^2*t - 3")) == "s^2*t - 3"
    assert str(P("-s + 2*i*t")) == "-s + 2*i*t"
    assert str(P("(1+2*i)*s")) == "(1+2*i)*s"
    assert str(BiPoly.zero()) == "0"
