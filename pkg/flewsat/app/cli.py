"""
Command-line interface: één ingang voor alle werkwoorden.

Uitvoer is regelgeoriënteerd (`key: value`) op stdout. Exitcodes:
0 = geldt / gelukt, 1 = geldt niet, 2 = gebruiks- of datafout.

Gebruik:
    python -m flewsat sat flewsat/data/algebras/lukasiewicz3.alg "x1 <-> ~x1"
"""

import argparse
import contextlib
import sys
from fractions import Fraction
from pathlib import Path

from flewsat.algebra.core import is_chain, is_nontrivial, product, require_valid, validate
from flewsat.algebra.exact import rstar_membership
from flewsat.algebra.flewalg import read_algebra, read_lattice, write_algebra
from flewsat.algebra.zoo import bool2, godel_chain, heyting_from_lattice, lukasiewicz_chain
from flewsat.app import decision
from flewsat.errors import FlewsatError, UsageError
from flewsat.logic.forms import (
    cf_to_term, classical_sat_cv, cv_to_df, dimacs_export, dimacs_import, dp_reduce, recognize_cf,
    recognize_cv, vertex_max,
)
from flewsat.logic.term import parse_term, print_term

SCANS = {
    "taut": (decision.taut, "counterexample"),
    "sat": (decision.sat, "witness"),
    "satpos": (decision.satpos, "witness"),
    "postaut": (decision.postaut, "counterexample"),
}


def _flag(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


class Report:
    """Geordende `key: value` regels plus exitcode."""

    def __init__(self):
        self.lines = []
        self.code = 0

    def add(self, key: str, value):
        self.lines.append(f"{key}: {_flag(value)}")

    def emit(self, out=None):
        out = out or sys.stdout
        for line in self.lines:
            print(line, file=out)


# === Werkwoorden ===

def cmd_alg_validate(args, report: Report):
    A = read_algebra(args.file)
    result = validate(A)
    for line in result.lines():
        report.lines.append(line)
    report.code = 0 if result.ok else 1


def _make_algebra(args):
    kind = args.kind
    if kind == "bool2":
        return bool2()
    if kind == "lukasiewicz":
        return lukasiewicz_chain(int(args.params[0]))
    if kind == "godel":
        return godel_chain(int(args.params[0]))
    if kind == "product":
        left, right = (read_algebra(p) for p in args.params[:2])
        return product(require_valid(left), require_valid(right))
    meet, join, names = read_lattice(args.params[0])
    return heyting_from_lattice(meet, join, names, label=Path(args.params[0]).stem)


MAKE_ARITY = {"bool2": 0, "lukasiewicz": 1, "godel": 1, "product": 2, "heyting": 1}


def cmd_alg_make(args, report: Report):
    if len(args.params) != MAKE_ARITY[args.kind]:
        raise FlewsatError(f"alg make {args.kind} verwacht {MAKE_ARITY[args.kind]} argument(en)")
    try:
        A = _make_algebra(args)
    except ValueError as e:
        if isinstance(e, FlewsatError):
            raise
        raise FlewsatError(f"ongeldig getal: {e}") from None
    text = write_algebra(A)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        report.add("written", args.output)
    else:
        report.lines.extend(text.rstrip("\n").split("\n"))


def cmd_alg_show(args, report: Report):
    A = read_algebra(args.file)
    report.add("label", A.label)
    report.add("size", A.size)
    report.add("names", " ".join(A.names))
    report.add("zero", A.names[A.zero])
    report.add("one", A.names[A.one])
    ok = validate(A).ok
    report.add("valid", ok)
    if ok:
        report.add("chain", is_chain(A))
        report.add("nontrivial", is_nontrivial(A))


def cmd_scan(args, report: Report):
    A = read_algebra(args.algebra)
    t = parse_term(args.term)
    procedure, witness_key = SCANS[args.command]
    verdict = procedure(A, t, budget=args.budget)
    report.add("term", print_term(t))
    report.add("holds", verdict.holds)
    if verdict.witness is not None:
        report.add(witness_key, verdict.witness_text(A) or "(geen variabelen)")
        report.add("value", A.names[verdict.value])
    report.code = 0 if verdict.holds else 1


def cmd_classify(args, report: Report):
    if args.family:
        family, n = args.family
        if family != "komori":
            raise FlewsatError(f"onbekende familie {family!r}")
        try:
            n = int(n)
        except ValueError:
            raise FlewsatError(f"ongeldige parameter {n!r}") from None
        report.add("algebra", f"komori {n}")
        flags = decision.komori_classify(n)
    else:
        if not args.algebra:
            raise FlewsatError("classify vraagt een ALGFILE of --family komori N")
        A = read_algebra(args.algebra)
        report.add("algebra", A.label)
        flags = decision.classify(A)
    for key, value in flags.items():
        report.add(key, value)


def cmd_chain_test(args, report: Report):
    A = read_algebra(args.algebra)
    result = decision.chain_criterion(A, budget=args.budget)
    name = A.names
    report.add("condition-2", result.condition2)
    report.add("condition-3", result.condition3)
    report.add("condition-4", result.condition4)
    report.add("term-witness", "none" if result.term_witness is None else f"x1={name[result.term_witness]}")
    report.add("fixed-point", "none" if result.fixed_point is None else name[result.fixed_point])
    closure = result.closure_witness
    report.add("closure-witness", "none" if closure is None else f"({name[closure[0]]},{name[closure[1]]})")
    report.add("partition", "none" if result.partition is None else result.partition.text(A))
    report.add("agree", result.agree)
    report.code = 0 if result.agree else 1


def cmd_hom(args, report: Report):
    A = read_algebra(args.algebra)
    partition = decision.hom_onto_bool(A)
    report.add("holds", partition is not None)
    if partition is not None:
        report.add("partition", partition.text(A))
    report.code = 0 if partition is not None else 1


def cmd_glivenko(args, report: Report):
    t = parse_term(args.term)
    report.add("term", print_term(t))
    report.add("glivenko", print_term(decision.glivenko(t)))


def _rational_witness(witness: dict) -> str:
    return " ".join(f"x{i}={q}" for i, q in sorted(witness.items())) or "(geen variabelen)"


def cmd_mvsat(args, report: Report):
    t = parse_term(args.term)
    witness = decision.bounded_mv_sat(t, args.max_den, budget=args.budget)
    report.add("term", print_term(t))
    report.add("max-den", args.max_den)
    report.add("holds", witness is not None)
    if witness is not None:
        report.add("witness", _rational_witness(witness))
    else:
        report.add("note", f"geen getuige met noemer <= {args.max_den}")
    report.code = 0 if witness is not None else 1


def _require_cv(t):
    s = recognize_cv(t)
    if s is None:
        raise FlewsatError("geen (·,∨)-term over literalen")
    return s


def cmd_df(args, report: Report):
    t = parse_term(args.term)
    df = cv_to_df(_require_cv(t))
    report.add("monomials", len(df.monomials))
    report.add("df", df.text())


def _bool_witness(witness: dict) -> str:
    return " ".join(f"x{i}={v}" for i, v in sorted(witness.items())) or "(geen variabelen)"


def cmd_cvsat(args, report: Report):
    t = parse_term(args.term)
    verdict = classical_sat_cv(t)
    report.add("holds", verdict.holds)
    if verdict.holds:
        report.add("witness", _bool_witness(verdict.witness))
    report.code = 0 if verdict.holds else 1


def cmd_dimacs(args, report: Report):
    cf = dimacs_import(Path(args.file).read_text(encoding="utf-8"))
    t = cf_to_term(cf)
    report.add("variables", max(lit.index for clause in cf.clauses for lit in clause))
    report.add("clauses", len(cf.clauses))
    verdict = classical_sat_cv(t)
    report.add("holds", verdict.holds)
    if verdict.holds:
        report.add("witness", _bool_witness(verdict.witness))
    if args.emit_term:
        report.add("term", print_term(t))
        report.add("roundtrip", dimacs_export(recognize_cf(t)) == dimacs_export(cf))
    report.code = 0 if verdict.holds else 1


def cmd_reduce(args, report: Report):
    alpha, phi1, phi2 = (parse_term(text) for text in (args.alpha, args.phi1, args.phi2))
    for name, t in (("phi1", phi1), ("phi2", phi2)):
        if recognize_cf(t) is None:
            raise FlewsatError(f"{name} is geen CF-term")
    t, renaming = dp_reduce(alpha, phi1, phi2)
    report.add("term", print_term(t))
    report.add("rename", " ".join(f"{part}:x{old}->x{new}" for part, old, new in renaming) or "(geen)")


def cmd_maxcv(args, report: Report):
    t = parse_term(args.term)
    best, vertex = vertex_max(t)
    report.add("max", best)
    report.add("vertex", _rational_witness(vertex))


def cmd_contain(args, report: Report):
    holds = decision.finite_chain_containment(args.n, args.m, budget=args.budget)
    report.add("term", print_term(decision.containment_term(args.n)))
    report.add("algebra", f"L{args.m + 1}")
    report.add("holds", holds)
    report.add("divides", args.m % args.n == 0)
    report.code = 0 if holds else 1


def cmd_rstar(args, report: Report):
    try:
        primes = [int(p) for p in args.primes.split(",") if p.strip()]
        q = Fraction(args.q)
    except ValueError:
        raise FlewsatError(f"ongeldige invoer: {args.primes!r} / {args.q!r}") from None
    holds = rstar_membership(primes, q)
    report.add("q", q)
    report.add("holds", holds)
    report.code = 0 if holds else 1


def cmd_verify(args, report: Report):
    from flewsat.verify import run as run_verify

    # banners en voortgang naar stderr; stdout blijft het rapport
    with contextlib.redirect_stdout(sys.stderr):
        ok = run_verify(quick=args.quick, seed=args.seed)
    report.add("passed", ok)
    report.code = 0 if ok else 1


# === Parser ===

def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"geen geheel getal: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"moet >= 1 zijn: {value}")
    return value


class _Parser(argparse.ArgumentParser):
    """Gebruiksfouten worden een UsageError in plaats van sys.exit."""

    def error(self, message):
        raise UsageError(message)


def _global_options(parser: argparse.ArgumentParser, default):
    parser.add_argument("--budget", type=_positive_int, default=default, help="max. aantal toekenningen per scan")
    parser.add_argument("--seed", type=int, default=default, help="seed voor willekeurige suites")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flewsat", description="Vervulbaarheid over FL_ew-algebra's")
    _global_options(parser, None)
    # ook na het werkwoord; SUPPRESS laat een eerder gezette waarde staan
    shared = _Parser(add_help=False)
    _global_options(shared, argparse.SUPPRESS)
    common = [shared]
    sub = parser.add_subparsers(dest="command", required=True)

    alg = sub.add_parser("alg", help="algebrabestanden", parents=common)
    alg_sub = alg.add_subparsers(dest="alg_command", required=True)
    p = alg_sub.add_parser("validate", parents=common)
    p.add_argument("file")
    p.set_defaults(handler=cmd_alg_validate)
    p = alg_sub.add_parser("make", parents=common)
    p.add_argument("kind", choices=sorted(MAKE_ARITY))
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_alg_make)
    p = alg_sub.add_parser("show", parents=common)
    p.add_argument("file")
    p.set_defaults(handler=cmd_alg_show)

    for verb in SCANS:
        p = sub.add_parser(verb, parents=common)
        p.add_argument("algebra")
        p.add_argument("term")
        p.set_defaults(handler=cmd_scan)

    p = sub.add_parser("classify", parents=common)
    p.add_argument("algebra", nargs="?")
    p.add_argument("--family", nargs=2, metavar=("FAMILY", "N"))
    p.set_defaults(handler=cmd_classify)

    for verb, handler in (("chain-test", cmd_chain_test), ("hom", cmd_hom)):
        p = sub.add_parser(verb, parents=common)
        p.add_argument("algebra")
        p.set_defaults(handler=handler)

    for verb, handler in (("glivenko", cmd_glivenko), ("df", cmd_df), ("cvsat", cmd_cvsat), ("maxcv", cmd_maxcv)):
        p = sub.add_parser(verb, parents=common)
        p.add_argument("term")
        p.set_defaults(handler=handler)

    p = sub.add_parser("mvsat", parents=common)
    p.add_argument("term")
    p.add_argument("--max-den", type=_positive_int, required=True)
    p.set_defaults(handler=cmd_mvsat)

    p = sub.add_parser("dimacs", parents=common)
    p.add_argument("file")
    p.add_argument("--emit-term", action="store_true")
    p.set_defaults(handler=cmd_dimacs)

    p = sub.add_parser("reduce", parents=common)
    p.add_argument("kind", choices=["dp"])
    p.add_argument("--alpha", required=True)
    p.add_argument("--phi1", required=True)
    p.add_argument("--phi2", required=True)
    p.set_defaults(handler=cmd_reduce)

    p = sub.add_parser("contain", parents=common)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(handler=cmd_contain)

    p = sub.add_parser("rstar", parents=common)
    p.add_argument("--primes", required=True)
    p.add_argument("q")
    p.set_defaults(handler=cmd_rstar)

    p = sub.add_parser("verify", parents=common)
    p.add_argument("--quick", action="store_true")
    p.set_defaults(handler=cmd_verify)
    return parser


def run(argv=None, out=None) -> int:
    """
    Voer één werkwoord uit en schrijf het rapport.

    Returns:
        exitcode (0, 1 of 2)
    """
    out = out or sys.stdout
    report = Report()
    try:
        args = build_parser().parse_args(argv)
        if args.budget is None:
            args.budget = decision.configured_budget()
        if args.seed is None:
            args.seed = decision.configured_seed()
        args.handler(args, report)
    except (FlewsatError, OSError) as e:
        print(f"error: {e}", file=out)
        return 2
    except RecursionError:
        print("error: term te diep genest", file=out)
        return 2
    report.emit(out)
    return report.code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
