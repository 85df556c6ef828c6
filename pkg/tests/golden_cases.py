"""One JSON golden per CLI verb, plus cases for each documented exit code.

Regenerate with ``python3 tests/golden_cases.py`` after an intentional
output change, and review the diff.
"""

from pathlib import Path

GOLDEN_DIR = Path(__file__).parent / "golden"

PHI = "phi(lambda=2,alpha=1,beta=3,rho=5,h=t^2)"

# name -> (command line, expected exit code)
GOLDEN = {
    "apply": ('apply --module "phi(lambda=1,alpha=0,beta=0,rho=0,h=0)" --word "L[1] M[1]" '
              '--poly 1 --json', 0),
    "bracket": ('bracket --x "2*L[1] - M[0]" --y "(1+i)*I[-1] + L[2]" --json', 0),
    "verify": ("verify --suite claims --seed 42 --tuples 3 --index-range 3 --json", 0),
    "orbit": ('orbit --module "phi(lambda=1,alpha=1,beta=0,rho=0,h=0)" --start t '
              '--index-range 1 --box 6,6 --json', 0),
    "extract": (f'extract --module "{PHI}" --json', 0),
    "iso": ('iso --a "phi(lambda=1,alpha=0,beta=0,rho=5,h=0)" '
            '--b "phi(lambda=1,alpha=0,beta=0,rho=6,h=0)" --json', 1),
    "quotient": ('quotient --module "phi(lambda=1,alpha=0,beta=0,rho=0,h=t+1)" --level 0 '
                 '--poly s --word "L[1] I[2]" --orbit --json', 0),
    "trace": (f'trace --module "{PHI}" --range 2 --json', 0),
}

# command line -> expected exit code; together these exercise 0, 1, 2 and 3.
EXIT_CASES = {
    'apply --module "phi(lambda=1,alpha=0,beta=0,rho=0,h=0)" --word "L[1] M[1]" --poly 1': 0,
    'iso --a "phi(lambda=1,alpha=0,beta=0,rho=5,h=0)" --b "phi(lambda=1,alpha=0,beta=0,rho=6,h=0)"': 1,
    'orbit --module "phi(lambda=1,alpha=1,beta=0,rho=0,h=0)" --invariant "t_power_ideal(1)"': 1,
    'apply --module "phi(lambda=1,alpha=0,beta=0,rho=0,h=0)" --poly "s^-1"': 2,
    "apply --poly 1": 2,
    "frobnicate": 2,
    'apply --module "phi(lambda=0,alpha=0,beta=0,rho=0,h=0)" --poly 1': 3,
    'quotient --module "phi(lambda=1,alpha=1,beta=0,rho=0,h=0)" --level 0': 3,
    'apply --module "phi(lambda=1,alpha=0,beta=0,rho=0,h=0)" --word "L[2000000]"': 3,
}


def golden_path(name: str) -> Path:
    return GOLDEN_DIR / f"{name}.json"


def render(line: str) -> tuple[int, str]:
    from bmskm.cli import parse_command, run

    code, output = run(parse_command(line))
    return code, output + "\n"


if __name__ == "__main__":
    GOLDEN_DIR.mkdir(exist_ok=True)
    for name, (line, _) in GOLDEN.items():
        golden_path(name).write_text(render(line)[1], encoding="utf-8")
        print("wrote", golden_path(name))
