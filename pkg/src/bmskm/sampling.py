"""Seeded random inputs for the property suites.

Every trial gets its own ``random.Random`` seeded with the string
``"{seed}:{label}:{counter}"``.  String seeds are hashed with SHA-512 by the
standard library, so a trial's inputs depend only on the global seed, the
suite label and the trial's position, never on execution order.

Coefficients have real and imaginary parts drawn from the integers in
[-3, 3]; lambda is always nonzero.
"""

from __future__ import annotations

import random

from .algebra import FAMILIES, Generator
from .field import GaussianRational
from .phi import PhiParams
from .poly import BiPoly

COEFF_LO, COEFF_HI = -3, 3


def trial_rng(seed: int, label: str, counter: int) -> random.Random:
    return random.Random(f"{seed}:{label}:{counter}")


def random_scalar(rng: random.Random, nonzero: bool = False) -> GaussianRational:
    while True:
        c = GaussianRational(rng.randint(COEFF_LO, COEFF_HI), rng.randint(COEFF_LO, COEFF_HI))
        if c or not nonzero:
            return c


def random_poly(rng: random.Random, max_s: int, max_t: int, max_terms: int = 8) -> BiPoly:
    """A nonzero polynomial with at most ``max_terms`` terms inside the degree box."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            terms[(rng.randint(0, max_s), rng.randint(0, max_t))] = random_scalar(rng)
        f = BiPoly(terms)
        if f:
            return f


def random_t_poly(rng: random.Random, max_deg: int) -> BiPoly:
    deg = rng.randint(0, max_deg)
    return BiPoly.from_t_coeffs(random_scalar(rng) for _ in range(deg + 1))


def random_s_poly(rng: random.Random, max_deg: int, nonzero: bool = True) -> BiPoly:
    while True:
        deg = rng.randint(0, max_deg)
        g = BiPoly.from_s_coeffs(random_scalar(rng) for _ in range(deg + 1))
        if g or not nonzero:
            return g


def random_params(rng: random.Random, max_h_deg: int = 4, *, lam=None, alpha=None, beta=None,
                  rho=None, h=None, irreducible: bool = False) -> PhiParams:
    """Random parameter tuple; keyword arguments pin individual coordinates.

    With ``irreducible=True`` at least one of alpha, beta is nonzero.
    """
    if irreducible and alpha is not None and beta is not None and not alpha and not beta:
        raise ValueError("alpha = beta = 0 is never irreducible")
    while True:
        a = random_scalar(rng) if alpha is None else alpha
        b = random_scalar(rng) if beta is None else beta
        if not irreducible or a or b:
            break
    return PhiParams(
        lam=random_scalar(rng, nonzero=True) if lam is None else lam,
        alpha=a,
        beta=b,
        rho=random_scalar(rng) if rho is None else rho,
        h=random_t_poly(rng, max_h_deg) if h is None else h,
    )


def random_generator(rng: random.Random, index_range: int) -> Generator:
    return Generator(rng.choice(FAMILIES), rng.randint(-index_range, index_range))
