"""Command-line interface.

Verbs: apply, bracket, verify, orbit, extract, iso, quotient, trace.  Every
verb takes ``--json`` for machine-readable output.

Exit codes: 0 success or the property holds, 1 the property fails (the
output carries a witness), 2 parse error, 3 domain error (lambda = 0,
alpha or beta nonzero for a quotient, beta = 0 in solve_h, ...).
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from .algebra import AlgebraElement, Generator, bracket
from .classify import (action_trace, extract_params, phi_action_oracle, verify_claims)
from .errors import BMSKMError, DomainError, NotPhiShaped, ParseError
from .field import GaussianRational
from .parser import parse_element, parse_generator, parse_module_spec, parse_poly, parse_word
from .phi import PhiParams, act_word, is_irreducible, quotient_act, quotient_irreducible
from .poly import BiPoly, DegreeBox
from .printing import poly_to_json, scalar_to_json
from .structure import (InvariantCheck, OrbitReport, check_invariant_subspace, orbit_closure,
                        parse_descriptor, quotient_orbit_closure)
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3
MAX_INDEX = 10**6


class IndexTooLarge(DomainError):
    pass


@dataclass(frozen=True)
class Opt:
    flag: str
    kind: str = "str"  # str | int | flag | multi
    default: Any = None
    required: bool = False
    help: str = ""

    @property
    def dest(self) -> str:
        return self.flag.lstrip("-").replace("-", "_")


VERBS: dict[str, list[Opt]] = {
    "apply": [
        Opt("--module", required=True, help="phi(lambda=..,alpha=..,beta=..,rho=..,h=..)"),
        Opt("--word", default="", help="generators, e.g. 'L[1] M[-2]'; the rightmost acts first"),
        Opt("--poly", default="1", help="polynomial in s, t"),
    ],
    "bracket": [
        Opt("--x", required=True, help="algebra element, e.g. '2*L[1] - M[0]'"),
        Opt("--y", required=True),
    ],
    "verify": [
        Opt("--suite", default="all", help=f"one of: all, {', '.join(SUITES)}"),
        Opt("--seed", kind="int", default=0),
        Opt("--index-range", kind="int"),
        Opt("--trials", kind="int"),
        Opt("--tuples", kind="int"),
        Opt("--max-deg", kind="int"),
    ],
    "orbit": [
        Opt("--module", required=True),
        Opt("--start", help="start vector; omit when using --invariant"),
        Opt("--invariant", help="t_power_ideal(i) or quotient_s_ideal(i)"),
        Opt("--index-range", kind="int", default=3),
        Opt("--box", default="8,8", help="max_s,max_t"),
        Opt("--restrict", help="subalgebra: witt, hv_i, hv_s, bms, ideal_si"),
        Opt("--stop-at-one", kind="flag", default=False),
    ],
    "extract": [
        Opt("--module", help="read the actions on 1 from this module"),
        Opt("--act", kind="multi", default=(), help="'F[m]=poly', the action of F[m] on 1"),
    ],
    "iso": [
        Opt("--a", required=True),
        Opt("--b", required=True),
    ],
    "quotient": [
        Opt("--module", required=True),
        Opt("--level", kind="int", required=True),
        Opt("--poly", default="1", help="layer representative g(s)"),
        Opt("--word", default=""),
        Opt("--orbit", kind="flag", default=False, help="close the orbit of --poly in the layer"),
        Opt("--index-range", kind="int", default=3),
        Opt("--max-s", kind="int", default=8),
    ],
    "trace": [
        Opt("--module", required=True),
        Opt("--range", kind="int", default=5),
    ],
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bmskm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb, opts in VERBS.items():
        p = sub.add_parser(verb)
        for opt in opts:
            kwargs: dict[str, Any] = {"dest": opt.dest, "help": opt.help or None}
            if opt.kind == "flag":
                kwargs["action"] = "store_true"
            elif opt.kind == "multi":
                kwargs["action"] = "append"
            else:
                kwargs["type"] = int if opt.kind == "int" else str
                kwargs["required"] = opt.required
            p.add_argument(opt.flag, **kwargs)
        p.add_argument("--json", action="store_true", dest="json")
    return parser


@dataclass(frozen=True)
class Command:
    verb: str
    options: tuple[tuple[str, Any], ...] = field(default_factory=tuple)
    json: bool = False

    def get(self, dest: str):
        return dict(self.options).get(dest)

    def argv(self) -> list[str]:
        out = [self.verb]
        values = dict(self.options)
        for opt in VERBS[self.verb]:
            value = values.get(opt.dest)
            if opt.kind == "flag":
                if value:
                    out.append(opt.flag)
            elif opt.kind == "multi":
                for item in value or ():
                    out += [opt.flag, item]
            elif value is not None:
                out += [opt.flag, str(value)]
        if self.json:
            out.append("--json")
        return out

    def __str__(self) -> str:
        return shlex.join(self.argv())


def parse_command(argv: Sequence[str] | str) -> Command:
    """Parse CLI arguments (a list, or one shell-quoted string) into a :class:`Command`."""
    if isinstance(argv, str):
        argv = shlex.split(argv)
    ns = build_parser().parse_args(list(argv))
    options = []
    for opt in VERBS[ns.verb]:
        value = getattr(ns, opt.dest)
        if opt.kind == "multi":
            value = tuple(value or ())
        elif value is None:
            value = opt.default
        options.append((opt.dest, value))
    return Command(ns.verb, tuple(options), ns.json)


# -- JSON helpers --------------------------------------------------------------


def params_to_json(p: PhiParams) -> dict:
    return {
        "text": str(p),
        "lambda": scalar_to_json(p.lam),
        "alpha": scalar_to_json(p.alpha),
        "beta": scalar_to_json(p.beta),
        "rho": scalar_to_json(p.rho),
        "h": poly_to_json(p.h),
    }


def element_to_json(x: AlgebraElement) -> dict:
    return {"terms": [{"family": g.family, "index": g.index, **scalar_to_json(c)} for g, c in x]}


def _check_indices(gens: Sequence[Generator]) -> None:
    for g in gens:
        if abs(g.index) > MAX_INDEX:
            raise IndexTooLarge(f"generator index {g.index} exceeds the CLI bound {MAX_INDEX}")


def _parse_box(text: str) -> DegreeBox:
    try:
        max_s, max_t = (int(part) for part in text.split(","))
    except ValueError:
        raise ParseError(f"box must be 'max_s,max_t', got {text!r}") from None
    return DegreeBox(max_s, max_t)


def _report_json(report: OrbitReport) -> dict:
    out = {
        "contains_one": report.contains_one,
        "basis_size": report.basis_size,
        "truncated": report.truncated,
        "index_range": report.generators_used,
        "box": {"max_s": report.box.max_s, "max_t": report.box.max_t},
        "restrict_to": report.restrict_to,
        "rounds": report.rounds,
    }
    if report.certificate is not None:
        out["certificate_verified"] = report.verify_certificate()
        out["certificate"] = [{"coeff": scalar_to_json(c), "vector": poly_to_json(v)}
                              for c, v in report.certificate]
    return out


def _report_lines(report: OrbitReport) -> list[str]:
    lines = [
        f"contains_one: {str(report.contains_one).lower()}",
        f"basis_size: {report.basis_size}",
        f"truncated: {str(report.truncated).lower()}",
        f"box: {report.box}",
        f"rounds: {report.rounds}",
    ]
    if report.certificate is not None:
        lines.append(f"certificate_verified: {str(report.verify_certificate()).lower()}")
        terms = " + ".join(f"({c})*[{v}]" for c, v in report.certificate)
        lines.append(f"certificate: 1 = {terms}")
    return lines


def _invariant_json(check: InvariantCheck) -> dict:
    out = {"holds": check.holds, "checked": check.checked}
    if not check.holds:
        out["witness"] = {
            "vector": poly_to_json(check.witness_vector),
            "generator": str(check.witness_generator),
            "image": poly_to_json(check.witness_image),
        }
    return out


# -- verbs ----------------------------------------------------------------------


def _run_apply(cmd: Command):
    params = parse_module_spec(cmd.get("module"))
    word = parse_word(cmd.get("word"))
    _check_indices(word)
    f = parse_poly(cmd.get("poly"))
    result = act_word(params, word, f)
    data = {"verb": "apply", "module": params_to_json(params), "word": [str(g) for g in word],
            "input": poly_to_json(f), "result": poly_to_json(result)}
    return EXIT_OK, data, [str(result)]


def _run_bracket(cmd: Command):
    x, y = parse_element(cmd.get("x")), parse_element(cmd.get("y"))
    _check_indices(x.generators() + y.generators())
    result = bracket(x, y)
    data = {"verb": "bracket", "x": element_to_json(x), "y": element_to_json(y),
            "result": element_to_json(result)}
    return EXIT_OK, data, [str(result)]


def _run_verify(cmd: Command):
    name = cmd.get("suite")
    if name != "all" and name not in SUITES:
        raise ParseError(f"unknown suite {name!r}; expected all or one of {', '.join(SUITES)}")
    names = list(SUITES) if name == "all" else [name]
    options = {"seed": cmd.get("seed"), "index_range": cmd.get("index_range"),
               "trials": cmd.get("trials"), "tuples": cmd.get("tuples"),
               "max_deg": cmd.get("max_deg")}
    results = [run_suite(n, **options) for n in names]
    ok = all(r.passed for r in results)
    data = {"verb": "verify", "seed": cmd.get("seed"), "passed": ok, "suites": [
        {"name": r.name, "passed": r.passed, "checks": r.checks,
         "failure_count": r.failure_count, "failures": r.failures} for r in results]}
    lines = []
    for r in results:
        lines.append(r.summary())
        lines += [f"  witness: {w}" for w in r.failures]
    return (EXIT_OK if ok else EXIT_FAIL), data, lines


def _run_orbit(cmd: Command):
    params = parse_module_spec(cmd.get("module"))
    box = _parse_box(cmd.get("box"))
    index_range = cmd.get("index_range")
    restrict = cmd.get("restrict")
    if cmd.get("invariant"):
        if cmd.get("start"):
            raise ParseError("--start and --invariant are mutually exclusive")
        descriptor = parse_descriptor(cmd.get("invariant"))
        check = check_invariant_subspace(params, descriptor, index_range, box, restrict_to=restrict)
        data = {"verb": "orbit", "module": params_to_json(params), "invariant": str(descriptor),
                **_invariant_json(check)}
        lines = [f"{descriptor} invariant: {str(check.holds).lower()}"]
        if not check.holds:
            lines.append(f"witness: {check.witness_generator} . {check.witness_vector} "
                         f"= {check.witness_image}")
        return (EXIT_OK if check.holds else EXIT_FAIL), data, lines
    if not cmd.get("start"):
        raise ParseError("orbit needs --start or --invariant")
    start = parse_poly(cmd.get("start"))
    report = orbit_closure(params, start, index_range, box, restrict_to=restrict,
                           stop_at_one=cmd.get("stop_at_one"))
    data = {"verb": "orbit", "module": params_to_json(params), "start": poly_to_json(start),
            "irreducible_predicted": is_irreducible(params), **_report_json(report)}
    lines = _report_lines(report)
    lines.insert(0, f"irreducible_predicted: {str(is_irreducible(params)).lower()}")
    return (EXIT_OK if report.contains_one else EXIT_FAIL), data, lines


def _parse_act(text: str) -> tuple[Generator, BiPoly]:
    if "=" not in text:
        raise ParseError(f"--act expects 'F[m]=poly', got {text!r}")
    lhs, rhs = text.split("=", 1)
    g = parse_generator(lhs.strip())
    return g, parse_poly(rhs)


def _run_extract(cmd: Command):
    if cmd.get("module") and cmd.get("act"):
        raise ParseError("--module and --act are mutually exclusive")
    if cmd.get("module"):
        source = phi_action_oracle(parse_module_spec(cmd.get("module")))
    elif cmd.get("act"):
        source = dict(_parse_act(a) for a in cmd.get("act"))
    else:
        raise ParseError("extract needs --module or --act")
    try:
        params = extract_params(source)
    except NotPhiShaped as exc:
        data = {"verb": "extract", "phi_shaped": False, "reason": str(exc)}
        return EXIT_FAIL, data, [f"not phi-shaped: {exc}"]
    data = {"verb": "extract", "phi_shaped": True, "module": params_to_json(params)}
    return EXIT_OK, data, [str(params)]


def _run_iso(cmd: Command):
    from .classify import iso_check

    a, b = parse_module_spec(cmd.get("a")), parse_module_spec(cmd.get("b"))
    same = iso_check(a, b)
    data = {"verb": "iso", "a": params_to_json(a), "b": params_to_json(b), "isomorphic": same}
    lines = [str(same).lower()]
    if not same:
        names = ("lambda", "alpha", "beta", "rho", "h")
        diff = [n for n, x, y in zip(names, a.as_tuple(), b.as_tuple()) if x != y]
        data["differing"] = diff
        lines.append(f"differing: {', '.join(diff)}")
    return (EXIT_OK if same else EXIT_FAIL), data, lines


def _run_quotient(cmd: Command):
    params = parse_module_spec(cmd.get("module"))
    level = cmd.get("level")
    g = parse_poly(cmd.get("poly"))
    word = parse_word(cmd.get("word"))
    _check_indices(word)
    irreducible = quotient_irreducible(params, level)
    data: dict[str, Any] = {"verb": "quotient", "module": params_to_json(params), "level": level,
                            "layer_irreducible": irreducible, "input": poly_to_json(g)}
    lines = [f"layer_irreducible: {str(irreducible).lower()}"]
    result = g
    for gen in reversed(word):
        result = quotient_act(params, level, gen, result)
    data["word"] = [str(x) for x in word]
    data["result"] = poly_to_json(result)
    lines.append(f"result: {result}")
    code = EXIT_OK
    if cmd.get("orbit"):
        report = quotient_orbit_closure(params, level, g, cmd.get("index_range"), cmd.get("max_s"))
        data["orbit"] = _report_json(report)
        lines += _report_lines(report)
        code = EXIT_OK if report.contains_one else EXIT_FAIL
    return code, data, lines


def _run_trace(cmd: Command):
    params = parse_module_spec(cmd.get("module"))
    n = cmd.get("range")
    trace = action_trace(params, n)
    report = verify_claims(trace, params)
    data = {
        "verb": "trace",
        "module": params_to_json(params),
        "range": n,
        "a": [{"m": m, "value": poly_to_json(trace.a[m])} for m in sorted(trace.a)],
        "b": [{"m": m, "value": poly_to_json(trace.b[m])} for m in sorted(trace.b)],
        "checks": [{"name": c.name, "passed": c.passed, "failures": [str(f) for f in c.failures]}
                   for c in report.checks],
        "passed": report.passed,
    }
    lines = [f"a[{m}] = {trace.a[m]}" for m in sorted(trace.a)]
    lines += [f"b[{m}] = {trace.b[m]}" for m in sorted(trace.b)]
    lines += report.lines()
    return (EXIT_OK if report.passed else EXIT_FAIL), data, lines


_HANDLERS = {
    "apply": _run_apply,
    "bracket": _run_bracket,
    "verify": _run_verify,
    "orbit": _run_orbit,
    "extract": _run_extract,
    "iso": _run_iso,
    "quotient": _run_quotient,
    "trace": _run_trace,
}


def _dump(data: dict) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def _error(kind: str, exc: Exception, as_json: bool) -> str:
    message = exc.message if isinstance(exc, ParseError) else str(exc)
    if as_json:
        payload: dict[str, Any] = {"error": {"kind": kind, "type": type(exc).__name__,
                                             "message": message}}
        if isinstance(exc, ParseError) and exc.position is not None:
            payload["error"]["position"] = exc.position
        return _dump(payload)
    return f"error: {exc}"


def run(cmd: Command) -> tuple[int, str]:
    """Execute a command; returns (exit code, output text)."""
    try:
        code, data, lines = _HANDLERS[cmd.verb](cmd)
    except ParseError as exc:
        return EXIT_PARSE, _error("parse", exc, cmd.json)
    except (DomainError, ZeroDivisionError) as exc:
        return EXIT_DOMAIN, _error("domain", exc, cmd.json)
    return code, _dump(data) if cmd.json else "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        cmd = parse_command(argv)
    except ParseError as exc:
        as_json = "--json" in argv
        stream = sys.stdout if as_json else sys.stderr
        print(_error("parse", exc, as_json), file=stream)
        return EXIT_PARSE
    code, output = run(cmd)
    stream = sys.stderr if (code in (EXIT_PARSE, EXIT_DOMAIN) and not cmd.json) else sys.stdout
    print(output, file=stream)
    return code


__all__ = ["Command", "parse_command", "run", "main", "build_parser", "VERBS",
           "EXIT_OK", "EXIT_FAIL", "EXIT_PARSE", "EXIT_DOMAIN", "BMSKMError", "GaussianRational"]
