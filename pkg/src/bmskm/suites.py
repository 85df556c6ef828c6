"""Seeded verification suites over the algebra and its modules.

Each suite returns a :class:`SuiteResult`; all comparisons are exact.  The
defaults are the sizes used by the acceptance run.  ``SUITES`` maps the names
accepted by ``bmskm verify --suite`` to the functions.
"""

from __future__ import annotations

import inspect
import time
from dataclasses import dataclass, field
from typing import Callable

from .algebra import FAMILIES, Generator, bracket, jacobi_defect
from .classify import action_trace, extract_params, iso_check, phi_action_oracle, solve_h, verify_claims
from .parser import parse_module_spec, parse_poly
from .phi import (PhiParams, act_generator, is_irreducible, quotient_act,
                  quotient_irreducible)
from .poly import BiPoly, DegreeBox
from .sampling import (random_params, random_poly, random_s_poly, random_scalar,
                       random_t_poly, trial_rng)
from .structure import (QuotientSIdeal, TPowerIdeal, check_invariant_subspace, orbit_closure,
                        quotient_orbit_closure)

MAX_REPORTED_FAILURES = 5


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    failure_count: int = 0
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0 and self.checks > 0

    def record(self, ok: bool, witness: Callable[[], str] | str = "") -> None:
        self.checks += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_REPORTED_FAILURES:
                self.failures.append(witness() if callable(witness) else witness)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checks - self.failure_count}/{self.checks} checks"


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        result.elapsed = time.perf_counter() - start
        return result

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    wrapper.__signature__ = inspect.signature(fn)
    return wrapper


def _gens(index_range: int, families=FAMILIES) -> list[Generator]:
    return [Generator(f, m) for f in families for m in range(-index_range, index_range + 1)]


@_timed
def module_axioms(seed: int = 0, index_range: int = 4, tuples: int = 5, trials: int = 25,
                  max_deg: int = 5) -> SuiteResult:
    """``X.(Y.f) - Y.(X.f) == [X, Y].f`` for all ordered generator pairs."""
    result = SuiteResult("module_axioms")
    gens = _gens(index_range)
    for p_idx in range(tuples):
        params = random_params(trial_rng(seed, "brackets/params", p_idx))
        for k in range(trials):
            f = random_poly(trial_rng(seed, f"brackets/f/{p_idx}", k), max_deg, max_deg)
            cache: dict[Generator, BiPoly] = {}

            def act(g: Generator) -> BiPoly:
                if g not in cache:
                    cache[g] = act_generator(params, g, f)
                return cache[g]

            for x in gens:
                for y in gens:
                    lhs = act_generator(params, x, act(y)) - act_generator(params, y, act(x))
                    rhs = BiPoly.zero()
                    for g, c in bracket(x, y).items():
                        rhs = rhs + act(g).scale(c)
                    result.record(lhs == rhs, lambda: f"[{x}, {y}] on {f} in {params}")
    return result


@_timed
def jacobi(seed: int = 0, index_range: int = 3, trials: int = 500,
           random_range: int = 6) -> SuiteResult:
    """Jacobi identity on all basis triples in range plus random wider triples."""
    result = SuiteResult("jacobi")
    gens = _gens(index_range)
    for x in gens:
        for y in gens:
            for z in gens:
                result.record(not jacobi_defect(x, y, z), lambda: f"({x}, {y}, {z})")
    for k in range(trials):
        rng = trial_rng(seed, "jacobi", k)
        x, y, z = (Generator(rng.choice(FAMILIES), rng.randint(-random_range, random_range))
                   for _ in range(3))
        result.record(not jacobi_defect(x, y, z), lambda: f"({x}, {y}, {z})")
    return result


@_timed
def lemma_identities(seed: int = 0, index_range: int = 4, max_power: int = 4, trials: int = 20,
                     max_deg: int = 5) -> SuiteResult:
    """Commutation of I_m, S_m past powers of L_0 = s and M_0 = t, on random vectors."""
    result = SuiteResult("lemma_identities")
    s, t = BiPoly.s(), BiPoly.t()
    for i in range(max_power + 1):
        for m in range(-index_range, index_range + 1):
            I_m, S_m = Generator("I", m), Generator("S", m)
            shift_pow = (s - m) ** i
            for k in range(trials):
                rng = trial_rng(seed, f"lemma/{i}/{m}", k)
                params = random_params(rng)
                f = random_poly(rng, max_deg, max_deg)
                where = f"i={i}, m={m}, f={f}, {params}"
                s_i_f = (s ** i) * f
                result.record(act_generator(params, I_m, s_i_f)
                              == shift_pow * act_generator(params, I_m, f), "I s^i " + where)
                result.record(act_generator(params, S_m, s_i_f)
                              == shift_pow * act_generator(params, S_m, f), "S s^i " + where)
                rhs = (t ** i) * act_generator(params, I_m, f)
                if i:
                    rhs = rhs + ((t ** (i - 1)) * act_generator(params, S_m, f)).scale(i * m)
                result.record(act_generator(params, I_m, (t ** i) * f) == rhs, "I t^i " + where)
    return result


@_timed
def claims(seed: int = 0, tuples: int = 50, index_range: int = 5) -> SuiteResult:
    """Trace formulas for a_m, b_m, the offsets A_m and their recurrences."""
    result = SuiteResult("claims")
    for k in range(tuples):
        params = random_params(trial_rng(seed, "claims", k))
        report = verify_claims(action_trace(params, index_range), params)
        for check in report.checks:
            result.record(check.passed, lambda: f"{check.name} at {check.failures} for {params}")
    return result


@_timed
def roundtrips(seed: int = 0, tuples: int = 100, trials: int = 50) -> SuiteResult:
    """Parameter extraction from actions on 1, and recovery of h from I_1 . 1."""
    result = SuiteResult("roundtrips")
    for k in range(tuples):
        params = random_params(trial_rng(seed, "extract", k))
        result.record(extract_params(phi_action_oracle(params)) == params, lambda: f"extract {params}")
    for k in range(trials):
        rng = trial_rng(seed, "solve_h", k)
        params = random_params(rng, beta=random_scalar(rng, nonzero=True))
        b1 = act_generator(params, Generator("I", 1), BiPoly.one())
        h = solve_h(b1, params.lam, params.alpha, params.beta, params.rho,
                    params.h.eval_t(params.alpha))
        result.record(h == params.h, lambda: f"solve_h {params}")
    return result


ORBIT_STARTS = ("1", "t", "s", "s*t + 1")


@_timed
def irreducibility(seed: int = 0, tuples: int = 10, index_range: int = 3, box: int = 8,
                   reducible: int = 3, invariant_range: int = 4) -> SuiteResult:
    """Orbit certificates for irreducible tuples, t-power submodules for reducible ones."""
    result = SuiteResult("irreducibility")
    degree_box = DegreeBox(box, box)
    named = [PhiParams(1, 1, 0, 0, 0), PhiParams(1, 0, 1, 0, 0)]
    randoms = [random_params(trial_rng(seed, "irreducible", k), irreducible=True)
               for k in range(tuples)]
    for params in named + randoms:
        result.record(is_irreducible(params), f"predicate {params}")
        for text in ORBIT_STARTS:
            report = orbit_closure(params, parse_poly(text), index_range, degree_box)
            result.record(report.contains_one and report.verify_certificate(),
                          f"orbit from {text} in {params}")
    t = BiPoly.t()
    for k in range(reducible):
        params = random_params(trial_rng(seed, "reducible", k), lam=1, alpha=0, beta=0)
        result.record(not is_irreducible(params), f"predicate {params}")
        for i in (1, 2, 3):
            check = check_invariant_subspace(params, TPowerIdeal(i), invariant_range, degree_box)
            result.record(check.holds, lambda: f"t_power_ideal({i}) broken by "
                          f"{check.witness_generator} on {check.witness_vector} in {params}")
        report = orbit_closure(params, t, index_range, degree_box)
        result.record(not report.contains_one, f"orbit from t reached 1 in {params}")
    return result


@_timed
def quotient_layers(seed: int = 0, max_level: int = 3, index_range: int = 3, trials: int = 20,
                    max_deg: int = 5, max_s: int = 8) -> SuiteResult:
    """Layer actions of the t-power filtration and their (ir)reducibility witnesses."""
    result = SuiteResult("quotient_layers")
    gens = _gens(index_range)
    for i in range(max_level + 1):
        for k in range(trials):
            rng = trial_rng(seed, f"quotient/{i}", k)
            params = random_params(rng, alpha=0, beta=0)
            g = random_s_poly(rng, max_deg)
            lifted = g.mul_t_power(i)
            for gen in gens:
                full = act_generator(params, gen, lifted).truncate_t(i + 1)
                layer = quotient_act(params, i, gen, g).mul_t_power(i)
                result.record(full == layer, lambda: f"{gen} on t^{i}*({g}) in {params}")

        s = BiPoly.s()
        rng = trial_rng(seed, f"quotient-witness/{i}", 0)
        h = random_t_poly(rng, 4)
        h_fixed = h - h.constant_term() + i
        reducible = random_params(rng, alpha=0, beta=0, rho=0, h=h_fixed)
        result.record(not quotient_irreducible(reducible, i), f"layer {i} predicate {reducible}")
        check = check_invariant_subspace(reducible, QuotientSIdeal(i), index_range,
                                         DegreeBox(max_s, 0))
        result.record(check.holds, lambda: f"s-ideal of layer {i} broken by "
                      f"{check.witness_generator} in {reducible}")

        rho_nonzero = random_params(rng, alpha=0, beta=0, rho=random_scalar(rng, nonzero=True),
                                    h=h_fixed)
        shifted_h = h_fixed + random_scalar(rng, nonzero=True)
        h_off = random_params(rng, alpha=0, beta=0, rho=0, h=shifted_h)
        for params in (rho_nonzero, h_off):
            result.record(quotient_irreducible(params, i), f"layer {i} predicate {params}")
            report = quotient_orbit_closure(params, i, s, index_range, max_s)
            result.record(report.contains_one and report.verify_certificate(),
                          f"layer {i} orbit from s in {params}")
    return result


@_timed
def bms_restriction(seed: int = 0, tuples: int = 5, index_range: int = 3, box: int = 8,
                    trials: int = 5, max_deg: int = 5) -> SuiteResult:
    """Behaviour of the {L, M} part: irreducible iff alpha != 0, and blind to beta, rho."""
    result = SuiteResult("bms_restriction")
    degree_box = DegreeBox(box, box)
    t = BiPoly.t()
    for k in range(tuples):
        rng = trial_rng(seed, "bms/alpha", k)
        params = random_params(rng, alpha=random_scalar(rng, nonzero=True))
        report = orbit_closure(params, t, index_range, degree_box, restrict_to="bms")
        result.record(report.contains_one and report.verify_certificate(),
                      f"bms orbit from t in {params}")
    for k in range(tuples):
        params = random_params(trial_rng(seed, "bms/alpha0", k), alpha=0)
        check = check_invariant_subspace(params, TPowerIdeal(1), index_range, degree_box,
                                         restrict_to="bms")
        result.record(check.holds, lambda: f"t_power_ideal(1) broken by "
                      f"{check.witness_generator} in {params}")
    gens = _gens(index_range + 1, ("L", "M"))
    for k in range(tuples):
        rng = trial_rng(seed, "bms/blind", k)
        params = random_params(rng)
        varied = params.replace(beta=random_scalar(rng), rho=random_scalar(rng))
        for _ in range(trials):
            f = random_poly(rng, max_deg, max_deg)
            for g in gens:
                result.record(act_generator(params, g, f) == act_generator(varied, g, f),
                              f"{g} depends on beta/rho in {params}")
    return result


def _perturb(params: PhiParams) -> list[PhiParams]:
    lam = params.lam + 1 if params.lam + 1 else params.lam + 2
    return [
        params.replace(lam=lam),
        params.replace(alpha=params.alpha + 1),
        params.replace(beta=params.beta + 1),
        params.replace(rho=params.rho + 1),
        params.replace(h=params.h + 1),
    ]


@_timed
def isomorphism(seed: int = 0, tuples: int = 20) -> SuiteResult:
    """Isomorphism holds exactly for equal tuples."""
    result = SuiteResult("isomorphism")
    for k in range(tuples):
        params = random_params(trial_rng(seed, "iso", k))
        twin = parse_module_spec(str(params))
        result.record(iso_check(params, params), f"reflexive {params}")
        result.record(iso_check(params, twin) and iso_check(twin, params), f"re-parsed {params}")
        for other in _perturb(params):
            result.record(not iso_check(params, other) and not iso_check(other, params),
                          f"{params} vs {other}")
    return result


@_timed
def parse_roundtrip(seed: int = 0, trials: int = 200, max_deg: int = 6) -> SuiteResult:
    """``parse_poly(str(f)) == f`` on random polynomials with rational coefficients."""
    result = SuiteResult("parse_roundtrip")
    for k in range(trials):
        rng = trial_rng(seed, "parse", k)
        f = random_poly(rng, max_deg, max_deg)
        f = f.scale(random_scalar(rng, nonzero=True).inverse())
        result.record(parse_poly(str(f)) == f, lambda: str(f))
    return result


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "brackets": module_axioms,
    "jacobi": jacobi,
    "lemma": lemma_identities,
    "claims": claims,
    "roundtrip": roundtrips,
    "irreducibility": irreducibility,
    "quotient": quotient_layers,
    "bms": bms_restriction,
    "iso": isomorphism,
    "parse": parse_roundtrip,
}


def run_suite(name: str, **options) -> SuiteResult:
    """Run a suite, passing only the options its signature accepts."""
    fn = SUITES[name]
    accepted = inspect.signature(fn).parameters
    return fn(**{k: v for k, v in options.items() if k in accepted and v is not None})

