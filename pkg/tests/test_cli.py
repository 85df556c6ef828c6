import json
import shlex

import pytest

from bmskm.cli import EXIT_DOMAIN, EXIT_FAIL, EXIT_OK, EXIT_PARSE, main, parse_command, run
from golden_cases import EXIT_CASES, GOLDEN, golden_path, render


def test_spec_apply_example(capsys):
    code = main(shlex.split('apply --module "phi(lambda=1,alpha=0,beta=0,rho=0,h=0)" '
                            '--word "L[1] M[1]" --poly "1"'))
    assert code == EXIT_OK
    assert capsys.readouterr().out == "s*t - t\n"


def test_spec_iso_example(capsys):
    code = main(shlex.split('iso --a "phi(lambda=1,alpha=0,beta=0,rho=5,h=0)" '
                            '--b "phi(lambda=1,alpha=0,beta=0,rho=6,h=0)"'))
    assert code == EXIT_FAIL
    assert capsys.readouterr().out.splitlines()[0] == "false"


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden(name):
    line, expected_code = GOLDEN[name]
    code, output = render(line)
    assert code == expected_code
    assert output == golden_path(name).read_text(encoding="utf-8")
    assert json.loads(output)["verb"] == name


@pytest.mark.parametrize("line", sorted(EXIT_CASES))
def test_exit_codes(line, capsys):
    assert main(shlex.split(line)) == EXIT_CASES[line]


def test_parse_error_json_is_well_formed(capsys):
    code = main(["apply", "--module", "phi(lambda=1,alpha=0,beta=0,rho=0,h=0)",
                 "--poly", "s + * t", "--json"])
    assert code == EXIT_PARSE
    err = json.loads(capsys.readouterr().out)["error"]
    assert err["kind"] == "parse" and err["position"] == 4


def test_domain_error_json(capsys):
    code = main(["trace", "--module", "phi(lambda=0,alpha=0,beta=0,rho=0,h=0)", "--json"])
    assert code == EXIT_DOMAIN
    assert json.loads(capsys.readouterr().out)["error"]["type"] == "LambdaZero"


@pytest.mark.parametrize("line", [GOLDEN[name][0] for name in sorted(GOLDEN)] + [
    'extract --act "M[1]=t" --act "L[1]=s"',
    "orbit --module phi(lambda=1,alpha=0,beta=1,rho=0,h=0) --start s --stop-at-one",
    "verify",
])
def test_command_roundtrip(line):
    cmd = parse_command(line)
    assert parse_command(str(cmd)) == cmd
    assert parse_command(cmd.argv()) == cmd


def test_output_is_deterministic():
    line = GOLDEN["verify"][0]
    assert render(line) == render(line)


def test_extract_from_actions():
    acts = ["M[1]=2*t - 2", "L[1]=2*s + 2*t^2", "S[0]=3", "I[0]=5", "M[2]=4*t - 8", "S[1]=6"]
    cmd = parse_command(["extract"] + [x for a in acts for x in ("--act", a)])
    assert run(cmd) == (EXIT_OK, "phi(lambda=2,alpha=1,beta=3,rho=5,h=t^2)")
    cmd = parse_command(["extract", "--act", "M[1]=t^2"])
    assert run(cmd)[0] == EXIT_FAIL


def test_orbit_invariant_witness():
    code, out = run(parse_command('orbit --module "phi(lambda=1,alpha=1,beta=0,rho=0,h=0)" '
                                  '--invariant "t_power_ideal(1)"'))
    assert code == EXIT_FAIL
    assert "witness: L[1] . t = s*t - t + 1" in out


def test_quotient_reducible_layer_fails_orbit():
    code, out = run(parse_command('quotient --module "phi(lambda=1,alpha=0,beta=0,rho=0,h=t+1)" '
                                  '--level 1 --poly s --orbit'))
    assert code == EXIT_FAIL
    assert "layer_irreducible: false" in out
