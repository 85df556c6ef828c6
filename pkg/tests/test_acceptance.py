"""Acceptance criteria 1-10, exact equality throughout.

Each test prints one PASS/FAIL line; the lines are repeated in the pytest
terminal summary.  ``python3 tests/test_acceptance.py`` runs just this file.
"""

import shlex
import time

import pytest

from bmskm.cli import main
from bmskm.parser import parse_poly
from bmskm.sampling import random_poly, trial_rng
from bmskm.suites import SuiteResult, run_suite
from golden_cases import EXIT_CASES, GOLDEN, golden_path, render

SEED = 42
RESULTS: dict[int, str] = {}

# criterion -> (suite name, time budget in seconds, description)
CRITERIA = {
    1: ("brackets", 120, "module axioms, 16 family pairs, |m|,|n| <= 4"),
    2: ("jacobi", 30, "Jacobi identity, exhaustive [-3,3] + 500 random"),
    3: ("lemma", 30, "operator identities for s^i, t^i"),
    4: ("claims", 30, "trace claims and A_m recurrences, 50 tuples"),
    5: ("roundtrip", 30, "extract_params x100, solve_h x50"),
    6: ("irreducibility", 120, "orbit certificates and t-power ideals"),
    7: ("quotient", 60, "quotient layers i <= 3"),
    8: ("bms", 30, "restriction to the BMS subalgebra"),
    9: ("iso", 5, "isomorphism under single-coordinate perturbation"),
}


def _report(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[number] = line
    print(line)


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    name, budget, label = CRITERIA[number]
    result: SuiteResult = run_suite(name, seed=SEED)
    in_time = result.elapsed <= budget
    _report(number, result.passed and in_time,
            f"{label}: {result.checks - result.failure_count}/{result.checks} "
            f"in {result.elapsed:.1f}s (budget {budget}s)")
    assert result.passed, result.failures
    assert result.checks > 0
    assert in_time, f"{name} took {result.elapsed:.1f}s"


def test_criterion_10(capsys):
    start = time.perf_counter()
    problems = []
    for k in range(200):
        f = random_poly(trial_rng(SEED, "cli-roundtrip", k), 6, 6)
        if parse_poly(str(f)) != f:
            problems.append(f"roundtrip {f}")
    for name, (line, expected) in sorted(GOLDEN.items()):
        code, output = render(line)
        if code != expected or output != golden_path(name).read_text(encoding="utf-8"):
            problems.append(f"golden {name}")
    seen = set()
    for line, expected in EXIT_CASES.items():
        code = main(shlex.split(line))
        seen.add(code)
        if code != expected:
            problems.append(f"exit {code} != {expected} for {line}")
    capsys.readouterr()
    if seen != {0, 1, 2, 3}:
        problems.append(f"exit codes exercised: {sorted(seen)}")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed <= 10
    _report(10, ok, f"CLI: 200 roundtrips, {len(GOLDEN)} goldens, exit codes "
                    f"{sorted(seen)} in {elapsed:.1f}s (budget 10s)")
    assert not problems, problems
    assert elapsed <= 10


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
