import pytest

from bmskm.algebra import Generator
from bmskm.classify import (action_trace, extract_params, iso_check, phi_action_oracle,
                            solve_h, verify_claims)
from bmskm.classify import a_offsets
from bmskm.errors import BetaZero, NotPhiShaped
from bmskm.parser import parse_poly as P
from bmskm.phi import PhiParams
from bmskm.poly import BiPoly

t = BiPoly.t()


def phi(lam, alpha, beta, rho, h="0"):
    return PhiParams(lam, alpha, beta, rho, P(h))


def test_trace_examples():
    p = phi(1, 1, 1, 0, "t^2")
    tr = action_trace(p, 2)
    assert tr.b[2] == P("-2*t - 2")
    assert tr.a[0] == BiPoly.constant(1)
    q = phi(2, 1, 3, 5, "t^2")
    tr = action_trace(q, 1)
    assert tr.a[0] == BiPoly.constant(3) and tr.b[0] == BiPoly.constant(5)


def test_claims_pass_on_genuine_modules():
    report = verify_claims(action_trace(phi(2, 1, 3, 5, "t^2"), 5), phi(2, 1, 3, 5, "t^2"))
    assert report.passed, report.lines()


def test_offsets():
    p = phi(1, 0, 2, 1, "t^3")
    offs = a_offsets(action_trace(p, 5), p)
    assert offs[1] == BiPoly.zero()
    assert offs[3] == BiPoly.constant(-2)


def test_claims_detect_a_tampered_trace():
    p = phi(1, 1, 1, 1, "t")
    tr = action_trace(p, 3)
    tr.b[2] = tr.b[2] + t
    report = verify_claims(tr, p)
    assert not report.passed
    assert 2 in report["claim3_b_m"].failures


def test_extract_examples():
    p = phi(2, 1, 3, 5, "t^2")
    oracle = phi_action_oracle(p)
    assert oracle(Generator("M", 1)) == 2 * t - 2
    assert oracle(Generator("L", 1)) == P("2*s + 2*t^2")
    assert extract_params(oracle) == p
    assert extract_params(phi_action_oracle(phi(1, 0, 0, 0))) == phi(1, 0, 0, 0)


def test_extract_rejects_bad_data():
    with pytest.raises(NotPhiShaped):
        extract_params({Generator("M", 1): t**2})
    table = {Generator("M", 1): t, Generator("L", 1): P("s"), Generator("S", 0): BiPoly.zero(),
             Generator("I", 0): BiPoly.zero(), Generator("M", 2): t,
             Generator("S", 1): BiPoly.zero()}
    assert extract_params(table) == phi(1, 0, 0, 0)
    table[Generator("M", 2)] = t + 1
    with pytest.raises(NotPhiShaped):
        extract_params(table)


def test_solve_h_examples():
    assert solve_h(-t, 1, 0, 1, 0, 0) == t**2
    p = phi(3, 2, 1, 4, "t^2 - 1")
    b1 = action_trace(p, 1).b[1]
    assert solve_h(b1, 3, 2, 1, 4, p.h.eval_t(2)) == p.h
    assert solve_h(BiPoly.constant(4), 1, 0, 2, 4, 0).is_t_only()
    with pytest.raises(BetaZero):
        solve_h(t, 1, 0, 0, 1, 0)


def test_iso_examples():
    p = phi(2, 1, 3, 5, "t^2")
    assert iso_check(p, phi(2, 1, 3, 5, "t^2"))
    assert not iso_check(p, p.replace(rho=6))
    assert not iso_check(p, p.replace(lam=3))
