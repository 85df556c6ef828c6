"""Reconstruction of Phi modules from their actions on 1, and the isomorphism test.

For a module that is free of rank one over the Cartan part, the S- and
I-actions are fixed by the traces ``a_m = S_m . 1`` and ``b_m = I_m . 1``.
For Phi(lambda, alpha, beta, rho, h) these are::

    a_m = lambda^m beta
    b_m = lambda^m (rho - m beta D),       D = (h(t) - h(alpha)) / (t - alpha)

and ``A_m = b_m - m lambda^(m-1) b_1`` is the constant ``(1 - m) lambda^m rho``.
:func:`verify_claims` checks these together with the relations the traces
must satisfy because of the brackets ``[L_n, I_m]`` and ``[I_n, I_m]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

from .algebra import Generator
from .errors import BetaZero, LambdaZero, NotPhiShaped
from .field import GaussianRational, as_scalar
from .phi import PhiParams, act_generator, h_difference_quotient, h_m, lambda_power
from .poly import BiPoly

__all__ = [
    "ActionTrace",
    "CheckResult",
    "ClaimsReport",
    "action_trace",
    "verify_claims",
    "phi_action_oracle",
    "extract_params",
    "solve_h",
    "iso_check",
]


@dataclass(frozen=True)
class ActionTrace:
    range: int
    a: dict[int, BiPoly]
    b: dict[int, BiPoly]


def action_trace(params: PhiParams, index_range: int) -> ActionTrace:
    if index_range < 1:
        raise ValueError("trace range must be at least 1")
    one = BiPoly.one()
    ms = range(-index_range, index_range + 1)
    return ActionTrace(
        range=index_range,
        a={m: act_generator(params, Generator("S", m), one) for m in ms},
        b={m: act_generator(params, Generator("I", m), one) for m in ms},
    )


@dataclass
class CheckResult:
    name: str
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class ClaimsReport:
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            if c.passed:
                out.append(f"PASS {c.name}")
            else:
                out.append(f"FAIL {c.name} at m={', '.join(str(f) for f in c.failures)}")
        return out


def _const(p: BiPoly) -> GaussianRational | None:
    return p.constant_term() if p.is_constant() else None


def a_offsets(trace: ActionTrace, params: PhiParams) -> dict[int, BiPoly]:
    """``A_m = b_m - m lambda^(m-1) b_1`` for every m in the trace."""
    b1 = trace.b[1]
    return {m: trace.b[m] - b1.scale(lambda_power(params.lam, m - 1) * m) for m in trace.b}


def verify_claims(trace: ActionTrace, params: PhiParams) -> ClaimsReport:
    """Check the trace formulas and their consequences for every m in range.

    Failures are recorded per check (the offending m, or pair (m, n)); no
    exception is raised for a failing check.
    """
    lam, alpha, beta, rho = params.lam, params.alpha, params.beta, params.rho
    dq = h_difference_quotient(params)
    ms = sorted(trace.b)
    span = set(ms)
    pw = lambda m: lambda_power(lam, m)  # noqa: E731

    t_only = CheckResult("traces_t_only")
    claim1 = CheckResult("claim1_a0_beta_b0_rho")
    claim2 = CheckResult("claim2_a_m")
    claim3 = CheckResult("claim3_b_m")
    a_const = CheckResult("A_m_constant")
    a_closed = CheckResult("A_m_closed_form")
    a_one = CheckResult("A_1_zero")
    rec_up = CheckResult("recurrence_A_m_plus_1")
    rec_down = CheckResult("recurrence_A_m_minus_1")
    lib = CheckResult("L_n_I_m_relation")
    iib = CheckResult("I_n_I_m_relation")
    hrec = CheckResult("h_recovery_relation")

    for m in ms:
        if not (trace.a[m].is_t_only() and trace.b[m].is_t_only()):
            t_only.failures.append(m)
        if trace.a[m] != BiPoly.constant(pw(m) * beta):
            claim2.failures.append(m)
        if trace.b[m] != (BiPoly.constant(rho) - dq.scale(beta * m)).scale(pw(m)):
            claim3.failures.append(m)
    if _const(trace.a[0]) != beta or _const(trace.b[0]) != rho:
        claim1.failures.append(0)

    offsets = a_offsets(trace, params)
    consts = {}
    for m in ms:
        c = _const(offsets[m])
        if c is None:
            a_const.failures.append(m)
            continue
        consts[m] = c
        if c != pw(m) * rho * (1 - m):
            a_closed.failures.append(m)
    if consts.get(1) != 0:
        a_one.failures.append(1)

    if -1 in consts:
        a_minus_one = consts[-1]
        for m in ms:
            if m == 0 or m not in consts:
                continue
            if m + 1 in consts:
                rhs = lam * consts[m] + pw(m + 1) * rho - pw(m + 2) * a_minus_one
                if consts[m + 1] != rhs:
                    rec_up.failures.append(m)
            if m - 1 in consts:
                rhs = lam.inverse() * consts[m] + pw(m - 1) * rho
                if consts[m - 1] != rhs:
                    rec_down.failures.append(m)

    t = BiPoly.t()
    for n in ms:
        for m in ms:
            bm, bn = trace.b[m], trace.b[n]
            # [I_n, I_m] . 1 = 0
            if (bm.d_dt().scale(pw(n) * beta * n) - bn.d_dt().scale(pw(m) * beta * m)):
                iib.failures.append((m, n))
            # [L_n, I_m] . 1 = m I_{m+n} . 1
            if m + n in span:
                lhs = (bm.scale(pw(n) * m)
                       - ((t - alpha * n) * bm.d_dt()).scale(pw(n) * n)
                       - h_m(params, n).d_dt().scale(pw(m + n) * beta * m))
                if lhs != trace.b[m + n].scale(m):
                    lib.failures.append((m, n))

    # beta h'(t) = -lambda^-1 b_1 - lambda^-1 (t - alpha) b_1' + rho
    b1 = trace.b[1]
    inv = lam.inverse()
    rhs = (-(b1.scale(inv)) - ((t - alpha) * b1.d_dt()).scale(inv) + rho)
    if params.h.d_dt().scale(beta) != rhs:
        hrec.failures.append(1)

    return ClaimsReport([t_only, claim1, claim2, claim3, a_const, a_closed, a_one,
                         rec_up, rec_down, lib, iib, hrec])


ActionOracle = Callable[[Generator], BiPoly]


def phi_action_oracle(params: PhiParams) -> ActionOracle:
    """The oracle ``g -> g . 1`` of a Phi module."""
    one = BiPoly.one()
    return lambda g: act_generator(params, g, one)


def extract_params(action: ActionOracle | Mapping[Generator, BiPoly]) -> PhiParams:
    """Recover (lambda, alpha, beta, rho, h) from the actions of generators on 1.

    Reads ``M_1 . 1 = lambda (t - alpha)``, ``L_1 . 1 = lambda (s + h(t))``,
    ``S_0 . 1 = beta`` and ``I_0 . 1 = rho``, then cross-checks ``M_2 . 1``
    and ``S_1 . 1``.
    """
    if isinstance(action, Mapping):
        table = action

        def action(g: Generator) -> BiPoly:
            try:
                return table[g]
            except KeyError:
                raise NotPhiShaped(f"no action supplied for {g}") from None

    m1 = action(Generator("M", 1))
    if not m1.is_t_only() or m1.deg_t > 1:
        raise NotPhiShaped(f"M[1].1 must be linear in t, got {m1}")
    lam = m1.coeff(0, 1)
    if not lam:
        raise LambdaZero(f"M[1].1 = {m1} has no t term")
    alpha = -m1.constant_term() / lam

    l1 = action(Generator("L", 1))
    if l1.deg_s != 1:
        raise NotPhiShaped(f"L[1].1 must have s-degree 1, got {l1}")
    h = l1.scale(lam.inverse()) - BiPoly.s()
    if not h.is_t_only():
        raise NotPhiShaped(f"L[1].1 = {l1} is not of the form lambda (s + h(t))")

    beta = _const(action(Generator("S", 0)))
    rho = _const(action(Generator("I", 0)))
    if beta is None:
        raise NotPhiShaped("S[0].1 must be a constant")
    if rho is None:
        raise NotPhiShaped("I[0].1 must be a constant")

    t = BiPoly.t()
    if action(Generator("M", 2)) != (t - alpha * 2).scale(lam * lam):
        raise NotPhiShaped("M[2].1 disagrees with lambda^2 (t - 2 alpha)")
    if action(Generator("S", 1)) != BiPoly.constant(lam * beta):
        raise NotPhiShaped("S[1].1 disagrees with lambda beta")
    return PhiParams(lam, alpha, beta, rho, h)


def solve_h(b1: BiPoly, lam, alpha, beta, rho, h_at_alpha) -> BiPoly:
    """Recover ``h`` from ``b_1 = I_1 . 1`` given the normalisation ``h(alpha)``.

    ``h(t) = (-lambda^-1 b_1(t) (t - alpha) + rho t + beta h(alpha) - rho alpha) / beta``
    """
    lam, alpha, beta, rho, h_at_alpha = map(as_scalar, (lam, alpha, beta, rho, h_at_alpha))
    if not beta:
        raise BetaZero("h is not determined by b_1 when beta = 0")
    if not lam:
        raise LambdaZero("lambda must be nonzero")
    if not b1.is_t_only():
        raise NotPhiShaped(f"b_1 must be a polynomial in t, got {b1}")
    t = BiPoly.t()
    theta = beta * h_at_alpha - rho * alpha
    numerator = -((b1 * (t - alpha)).scale(lam.inverse())) + t.scale(rho) + theta
    return numerator.scale(beta.inverse())


def iso_check(p1: PhiParams, p2: PhiParams) -> bool:
    """Two Phi modules are isomorphic exactly when their parameter tuples agree."""
    return p1.as_tuple() == p2.as_tuple()
