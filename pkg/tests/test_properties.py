"""Property checks with hypothesis-generated inputs."""

from hypothesis import given, strategies as st

from bmskm.algebra import AlgebraElement, Generator, bracket, in_subalgebra, SUBALGEBRAS
from bmskm.classify import iso_check
from bmskm.phi import act_element, act_generator
from bmskm.poly import BiPoly, DegreeBox, d_dt, diff_quotient_t, shift_s
from bmskm.structure import orbit_closure
from strategies import generators, nonzero_scalars, params, polys, rational_scalars, t_polys

t = BiPoly.t()
indices = st.integers(-5, 5)


def canonical(f: BiPoly) -> bool:
    return all(c for c in f.terms.values())


@given(polys(), polys(), rational_scalars)
def test_ring_ops_stay_canonical(f, g, c):
    for h in (f + g, f - g, f * g, f.scale(c), d_dt(f), shift_s(f, 2)):
        assert canonical(h)


@given(polys(), polys(), indices)
def test_shift_is_a_ring_homomorphism(f, g, m):
    assert shift_s(f * g, m) == shift_s(f, m) * shift_s(g, m)
    assert shift_s(f + g, m) == shift_s(f, m) + shift_s(g, m)


@given(polys(), indices, indices)
def test_shifts_compose(f, m, n):
    assert shift_s(shift_s(f, m), n) == shift_s(f, m + n)


@given(t_polys(6), rational_scalars)
def test_diff_quotient_identity(p, a):
    assert diff_quotient_t(p, a) * (t - a) + p.eval_t(a) == p


@given(polys(), indices)
def test_d_dt_commutes_with_shift(f, m):
    assert d_dt(shift_s(f, m)) == shift_s(d_dt(f), m)


@given(nonzero_scalars, rational_scalars)
def test_field_inverse(x, y):
    assert x * x.inverse() == 1
    if y:
        assert (x / y) * y == x


def elements(index_range=4):
    return st.lists(st.tuples(generators(index_range), nonzero_scalars), max_size=3).map(
        lambda items: sum((AlgebraElement.of(g, c) for g, c in items), AlgebraElement()))


@given(elements(), elements())
def test_antisymmetry(x, y):
    assert bracket(x, y) == -bracket(y, x)


@given(st.sampled_from(sorted(SUBALGEBRAS)), generators(), generators())
def test_subalgebra_closure(name, x, y):
    if in_subalgebra(x, name) and in_subalgebra(y, name):
        assert in_subalgebra(bracket(x, y), name)


@given(generators(), st.sampled_from("SI"), indices)
def test_ideal_property(x, family, m):
    assert in_subalgebra(bracket(x, Generator(family, m)), "ideal_si")


@given(params, generators(3), generators(3), polys(3, 3, 4))
def test_module_axiom(p, x, y, f):
    lhs = act_generator(p, x, act_generator(p, y, f)) - act_generator(p, y, act_generator(p, x, f))
    assert lhs == act_element(p, bracket(x, y), f)


@given(params, indices, polys(3, 3, 4).filter(bool))
def test_L_raises_s_degree(p, m, f):
    assert act_generator(p, Generator("L", m), f).deg_s == f.deg_s + 1


@given(params, st.sampled_from("LM"), indices, polys(3, 3, 4), nonzero_scalars, nonzero_scalars)
def test_LM_action_ignores_beta_rho(p, family, m, f, beta, rho):
    g = Generator(family, m)
    assert act_generator(p, g, f) == act_generator(p.replace(beta=beta, rho=rho), g, f)


@given(params, params, params)
def test_iso_is_an_equivalence(p, q, r):
    assert iso_check(p, p)
    assert iso_check(p, q) == iso_check(q, p) == (p == q)
    if iso_check(p, q) and iso_check(q, r):
        assert iso_check(p, r)


@given(params, st.sampled_from([BiPoly.one(), t]))
def test_orbit_monotone_in_box_and_range(p, start):
    small = orbit_closure(p, start, 1, DegreeBox(3, 3), stop_at_one=True)
    if small.contains_one:
        for m, box in ((2, DegreeBox(3, 3)), (1, DegreeBox(4, 4))):
            assert orbit_closure(p, start, m, box, stop_at_one=True).contains_one
