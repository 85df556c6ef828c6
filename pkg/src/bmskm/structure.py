"""Exact linear algebra and submodule-orbit exploration.

Generated submodules of Phi are infinite dimensional (``L_m`` raises the
s-degree), so :func:`orbit_closure` works inside a :class:`DegreeBox`: images
that leave the box are discarded and flagged as truncation.  Everything kept
really is in the generated submodule, so ``contains_one=True`` is a proof
(backed by an explicit linear combination), while ``False`` with truncation
only says the box was too small to find one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .algebra import FAMILIES, SUBALGEBRAS, Generator
from .errors import BoxOverflow, UnknownDescriptor, UnknownSubalgebra, ZeroStart, ZeroVector
from .field import ONE, GaussianRational
from .phi import PhiParams, QuotientLevel, act_generator, quotient_act, _require_quotient
from .poly import BiPoly, DegreeBox, monomial_key

__all__ = [
    "SpanBasis",
    "span_reduce",
    "OrbitReport",
    "orbit_closure",
    "quotient_orbit_closure",
    "TPowerIdeal",
    "QuotientSIdeal",
    "parse_descriptor",
    "InvariantCheck",
    "check_invariant_subspace",
    "first_nontrivial_L",
]

RawRow = list[tuple[tuple[int, int], object, object]]


def _cmul(a, b, c, d):
    return a * c - b * d, a * d + b * c


def _axpy(acc: dict, row, cre, cim) -> None:
    # acc[key] -= c * row[key], on raw [re, im] slots
    get = acc.get
    if cim:
        for key, rre, rim in row:
            pre = cre * rre - cim * rim
            pim = cre * rim + cim * rre
            slot = get(key)
            if slot is None:
                acc[key] = [-pre, -pim]
            else:
                slot[0] -= pre
                slot[1] -= pim
    else:
        for key, rre, rim in row:
            pre = cre * rre
            pim = cre * rim
            slot = get(key)
            if slot is None:
                acc[key] = [-pre, -pim]
            else:
                slot[0] -= pre
                slot[1] -= pim


def _raw(d: dict) -> RawRow:
    return [(k, re, im) for k, (re, im) in d.items() if re or im]


class SpanBasis:
    """Incremental echelon basis over Q(i) with combination tracking.

    Each stored row is monic in its pivot, which is the row's graded-lex
    leading monomial, and remembers how it is built from the inserted
    vectors.  A vector is reduced by sweeping the pivots from the top down,
    which clears every pivot position, so membership is a zero test and
    :meth:`express` yields an explicit certificate.
    """

    def __init__(self):
        self.vectors: list[BiPoly] = []
        self._rows: dict[tuple[int, int], tuple[RawRow, RawRow]] = {}
        self._order: list[tuple[int, int]] = []

    def __len__(self) -> int:
        return len(self._rows)

    def _reduce(self, v: BiPoly, track: bool = True) -> tuple[dict, dict]:
        # returns raw (remainder, combo) with v = remainder + sum(combo[k] * vectors[k]);
        # the combo stays empty when track is False
        rem = {m: [c.re, c.im] for m, c in v.terms.items()}
        combo: dict = {}
        for pivot in self._order:
            slot = rem.get(pivot)
            if slot is None or not (slot[0] or slot[1]):
                continue
            cre, cim = slot
            row, row_combo = self._rows[pivot]
            _axpy(rem, row, cre, cim)
            if track:
                _axpy(combo, row_combo, -cre, -cim)
        rem = {k: s for k, s in rem.items() if s[0] or s[1]}
        return rem, combo

    def insert(self, v: BiPoly) -> bool:
        """Add ``v`` to the spanning set; True if it enlarged the span."""
        # most candidates are already in the span, so test before paying for the combo
        if not self._reduce(v, track=False)[0]:
            return False
        rem, combo = self._reduce(v)
        idx = len(self.vectors)
        self.vectors.append(v)
        # rem = v - sum(combo), so the new row is built from {idx: 1} - combo
        row_combo = {k: [-re, -im] for k, (re, im) in combo.items()}
        row_combo[idx] = [1, 0]
        lead = max(rem, key=monomial_key)
        inv = GaussianRational._new(*rem[lead]).inverse()
        scale = lambda d: [(k, *_cmul(re, im, inv.re, inv.im)) for k, re, im in _raw(d)]  # noqa: E731
        self._rows[lead] = (scale(rem), scale(row_combo))
        self._order.append(lead)
        self._order.sort(key=monomial_key, reverse=True)
        return True

    def contains(self, v: BiPoly) -> bool:
        return not self._reduce(v, track=False)[0]

    def express(self, v: BiPoly) -> list[tuple[GaussianRational, BiPoly]] | None:
        """Write ``v`` as a combination of inserted vectors, or None if outside the span."""
        rem, combo = self._reduce(v)
        if rem:
            return None
        return [(GaussianRational._new(re, im), self.vectors[k])
                for k, re, im in sorted(_raw(combo))]

    def pivots(self) -> list[tuple[int, int]]:
        return list(self._order)

    def _row_poly(self, pivot) -> BiPoly:
        return BiPoly({k: GaussianRational._new(re, im) for k, re, im in self._rows[pivot][0]})

    def reduced_basis(self) -> list[BiPoly]:
        """The reduced row echelon basis, leading pivots first."""
        done: dict[tuple[int, int], BiPoly] = {}
        for pivot in reversed(self._order):
            row = self._row_poly(pivot)
            for other_pivot, other in done.items():
                c = row.coeff(*other_pivot)
                if c:
                    row = row - other.scale(c)
            done[pivot] = row
        return [done[p] for p in self._order]


def span_reduce(vectors: Sequence[BiPoly], box: DegreeBox) -> tuple[list[BiPoly], int]:
    """Row-reduce ``vectors`` in the monomial coordinates of ``box``."""
    basis = SpanBasis()
    for v in vectors:
        if not v.fits(box):
            raise BoxOverflow(f"{v} does not fit the degree box ({box})")
        basis.insert(v)
    rows = basis.reduced_basis()
    return rows, len(rows)


@dataclass(frozen=True)
class OrbitReport:
    basis_size: int
    contains_one: bool
    truncated: bool
    generators_used: int
    box: DegreeBox
    restrict_to: str | None = None
    rounds: int = 0
    certificate: tuple[tuple[GaussianRational, BiPoly], ...] | None = field(default=None, repr=False)

    def verify_certificate(self) -> bool:
        """Recompute the stored combination and check it equals 1."""
        if self.certificate is None:
            return False
        total = BiPoly.zero()
        for c, v in self.certificate:
            total = total + v.scale(c)
        return total == BiPoly.one()


def _closure(act: Callable[[Generator, BiPoly], BiPoly], generators: Sequence[Generator],
             start: BiPoly, box: DegreeBox, index_range: int, restrict_to: str | None,
             stop_at_one: bool) -> OrbitReport:
    if not start:
        raise ZeroStart("orbit start vector must be nonzero")
    if not start.fits(box):
        raise BoxOverflow(f"start {start} does not fit the degree box ({box})")
    one = BiPoly.one()
    basis = SpanBasis()
    basis.insert(start)
    frontier = [start]
    truncated = False
    rounds = 0
    while frontier and len(basis) < box.dimension:
        if stop_at_one and basis.contains(one):
            break
        rounds += 1
        nxt = []
        for v in frontier:
            for g in generators:
                w = act(g, v)
                if not w.fits(box):
                    truncated = True
                    continue
                if basis.insert(w):
                    nxt.append(w)
        if len(basis) > box.dimension:
            raise AssertionError("span exceeded the box dimension; arithmetic is inconsistent")
        frontier = nxt
    certificate = basis.express(one)
    return OrbitReport(
        basis_size=len(basis),
        contains_one=certificate is not None,
        truncated=truncated,
        generators_used=index_range,
        box=box,
        restrict_to=restrict_to,
        rounds=rounds,
        certificate=tuple(certificate) if certificate is not None else None,
    )


def _families_for(restrict_to: str | None) -> tuple[str, ...]:
    if restrict_to is None:
        return FAMILIES
    try:
        fams = SUBALGEBRAS[restrict_to]
    except KeyError:
        raise UnknownSubalgebra(f"unknown subalgebra {restrict_to!r}") from None
    return tuple(f for f in FAMILIES if f in fams)


def _orbit_generators(index_range: int, families: Iterable[str]) -> list[Generator]:
    # frontier policy: family order L, M, S, I, then ascending index
    return [Generator(f, m) for f in families for m in range(-index_range, index_range + 1)]


def orbit_closure(params: PhiParams, start: BiPoly, index_range: int, box: DegreeBox,
                  restrict_to: str | None = None, stop_at_one: bool = False) -> OrbitReport:
    """Breadth-first span of the orbit of ``start`` under ``X_m``, ``|m| <= index_range``.

    ``restrict_to`` names a subalgebra (see :data:`bmskm.algebra.SUBALGEBRAS`)
    whose generator families are the only ones applied.  With
    ``stop_at_one`` the search ends as soon as 1 is in the span, which never
    changes ``contains_one`` since spans only grow.
    """
    gens = _orbit_generators(index_range, _families_for(restrict_to))
    return _closure(lambda g, v: act_generator(params, g, v), gens, start, box,
                    index_range, restrict_to, stop_at_one)


def quotient_orbit_closure(params: PhiParams, level: QuotientLevel | int, start: BiPoly,
                           index_range: int, max_s: int,
                           stop_at_one: bool = False) -> OrbitReport:
    """Orbit closure inside one layer of the t-power filtration (s-polynomials only)."""
    _require_quotient(params)
    gens = _orbit_generators(index_range, FAMILIES)
    return _closure(lambda g, v: quotient_act(params, level, g, v), gens, start,
                    DegreeBox(max_s, 0), index_range, None, stop_at_one)


@dataclass(frozen=True)
class TPowerIdeal:
    """The subspace ``t^i C[s, t]`` of the full module."""

    i: int

    def __str__(self) -> str:
        return f"t_power_ideal({self.i})"


@dataclass(frozen=True)
class QuotientSIdeal:
    """``s C[s]`` inside the layer ``t^i C[s,t] / t^(i+1) C[s,t]``."""

    level: int

    def __str__(self) -> str:
        return f"quotient_s_ideal({self.level})"


_DESCRIPTOR_RE = re.compile(r"^\s*(t_power_ideal|quotient_s_ideal)\s*\(\s*(\d+)\s*\)\s*$")


def parse_descriptor(text: str) -> TPowerIdeal | QuotientSIdeal:
    match = _DESCRIPTOR_RE.match(text)
    if not match:
        raise UnknownDescriptor(
            f"unknown subspace descriptor {text!r}; expected t_power_ideal(i) or quotient_s_ideal(i)")
    kind, i = match.group(1), int(match.group(2))
    return TPowerIdeal(i) if kind == "t_power_ideal" else QuotientSIdeal(i)


@dataclass(frozen=True)
class InvariantCheck:
    holds: bool
    checked: int
    witness_vector: BiPoly | None = None
    witness_generator: Generator | None = None
    witness_image: BiPoly | None = None

    def __bool__(self) -> bool:
        return self.holds


def _check_order(index_range: int, families: Sequence[str]) -> list[Generator]:
    # index order 0, 1, -1, 2, -2, ... so the reported witness uses the smallest |m|
    indices = [0]
    for m in range(1, index_range + 1):
        indices += [m, -m]
    return [Generator(f, m) for f in families for m in indices]


def check_invariant_subspace(params: PhiParams, subspace, index_range: int,
                             box: DegreeBox, restrict_to: str | None = None) -> InvariantCheck:
    """Apply every ``X_m`` with ``|m| <= index_range`` to each spanning monomial in ``box``.

    Membership of each image is tested exactly; the box only limits which
    spanning monomials are tried.  ``restrict_to`` limits the generators to
    one subalgebra, as in :func:`orbit_closure`.  On failure the first offending monomial,
    generator and image are reported.
    """
    if isinstance(subspace, str):
        subspace = parse_descriptor(subspace)
    gens = _check_order(index_range, _families_for(restrict_to))
    checked = 0
    if isinstance(subspace, TPowerIdeal):
        i = subspace.i
        monos = [(j, k) for (j, k) in box.monomials() if k >= i]

        def act(g, v):
            return act_generator(params, g, v)

        def member(w):
            return all(k >= i for (_, k) in w.terms)
    elif isinstance(subspace, QuotientSIdeal):
        _require_quotient(params)
        level = subspace.level
        monos = [(j, 0) for j in range(1, box.max_s + 1)]

        def act(g, v):
            return quotient_act(params, level, g, v)

        def member(w):
            return not w.constant_term()
    else:
        raise UnknownDescriptor(f"unknown subspace descriptor {subspace!r}")

    for j, k in monos:
        v = BiPoly.monomial(j, k)
        for g in gens:
            w = act(g, v)
            checked += 1
            if not member(w):
                return InvariantCheck(False, checked, v, g, w)
    return InvariantCheck(True, checked)


def first_nontrivial_L(params: PhiParams, v: BiPoly) -> int:
    """Smallest ``m >= 1`` with ``L_m . v != 0``.

    ``L_m`` raises the s-degree of any nonzero vector by exactly one, so this
    is always 1; the assertion guards that invariant.
    """
    if not v:
        raise ZeroVector("v must be nonzero")
    image = act_generator(params, Generator("L", 1), v)
    assert image and image.deg_s == v.deg_s + 1, "L_1 failed to raise the s-degree"
    return 1
