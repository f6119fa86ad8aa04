"""Command-line front door.

Reports are line-oriented ``key: value`` pairs so goldens stay greppable.
Exit codes: 0 success, 1 I/O or parse failure, 2 precondition failure,
3 internal verification failure.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import analysis, completion, families, formats, hull
from .analysis import PreconditionError
from .automata import RegexSyntaxError, ResourceLimitError, state_cap_from_env
from .completion import VerificationFailed
from .measure import measure_finite, measure_regular
from .words import WordError

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_PRECONDITION = 2
EXIT_VERIFICATION = 3


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _word(w: str) -> str:
    return w if w else "eps"


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def cmd_check(args) -> int:
    source = formats.parse_code_set(_read(args.set_file))
    theta = None
    if args.theta_file:
        theta = formats.parse_theta_file(_read(args.theta_file), source.alphabet)
    dist = None
    if args.dist_file:
        dist = formats.parse_distribution(_read(args.dist_file), source.alphabet)

    lang = source.words if source.is_finite else source.language()
    if source.is_finite:
        verdict = analysis.sardinas_patterson_finite(source.words)
    else:
        verdict = analysis.is_code_regular(lang)
    print(f"code: {_yn(verdict.is_code)}")
    if verdict.witness is not None:
        print(f"witness.left: {' '.join(verdict.witness.left)}")
        print(f"witness.right: {' '.join(verdict.witness.right)}")
    cls = analysis.affix_class(lang)
    print(f"prefix: {_yn(cls.prefix)}")
    print(f"suffix: {_yn(cls.suffix)}")
    print(f"bifix: {_yn(cls.bifix)}")
    thin, thin_witness = analysis.is_thin(lang)
    print(f"thin: {_yn(thin)}")
    if thin_witness is not None:
        print(f"witness.thin: {_word(thin_witness)}")
    complete, non_factor = analysis.is_complete(lang)
    print(f"complete: {_yn(complete)}")
    if non_factor is not None:
        print(f"witness.complete: {_word(non_factor)}")
    if theta is not None:
        print(f"theta_invariant: {_yn(analysis.is_theta_invariant(lang, theta))}")
        print(f"theta_code: {_yn(analysis.is_theta_code(lang, theta).is_code)}")
    if dist is not None:
        if source.is_finite:
            value = measure_finite(source.words, dist)
        else:
            value = measure_regular(lang, dist)
        print(f"measure: {value}")
    return EXIT_OK


def cmd_complete(args) -> int:
    source = formats.parse_code_set(_read(args.set_file))
    theta = formats.parse_theta_file(_read(args.theta_file), source.alphabet)
    lang = source.words if source.is_finite else source.language()
    try:
        trace = completion.complete_code(
            lang,
            theta,
            witness=args.witness,
            overlap_free_witness=args.overlap_free_witness,
        )
    except VerificationFailed as exc:
        print(f"error: {exc}")
        if exc.trace is not None:
            _print_completion_checks(exc.trace.checks.items())
        return EXIT_VERIFICATION
    report = completion.verify_construction(trace, lang)
    print(f"witness: {trace.witness}")
    print(f"marker: {trace.marker}")
    print(f"markers: {' '.join(trace.markers)}")
    print(f"states.anchored: {trace.anchored.num_states}")
    print(f"states.filler: {trace.filler.num_states}")
    print(f"states.completed: {trace.completed.num_states}")
    print(f"filler_sample: {' '.join(trace.filler.first_words(4))}")
    for name, value in (
        ("anchored", trace.anchored),
        ("filler", trace.filler),
        ("completed", trace.completed),
    ):
        print(f"automaton: {name}")
        sys.stdout.write(formats.dump_automaton(value))
    print("checks:")
    _print_completion_checks(trace.checks.items())
    _print_completion_checks(report.items())
    if not report.all_ok:
        return EXIT_VERIFICATION
    return EXIT_OK


def _print_completion_checks(items) -> None:
    for name, ok in items:
        print(f"check.{name}: {'pass' if ok else 'FAIL'}")


def cmd_hull(args) -> int:
    source = formats.parse_code_set(_read(args.set_file))
    if not source.is_finite:
        raise PreconditionError("hulls are computed for finite sets only")
    if args.theta_file:
        theta = formats.parse_theta_file(_read(args.theta_file), source.alphabet)
        result = hull.theta_free_hull(source.words, theta)
    else:
        result = hull.free_hull(source.words)
    print(f"base: {' '.join(result.base)}")
    print(f"iterations: {result.iterations}")
    print(f"theta_invariant: {_yn(result.theta_invariant)}")
    if not result.input_was_code:
        size, bound = len(result.base), len(source.words) - 1
        status = "ok" if result.defect_ok else "VIOLATED"
        print(f"defect_bound: {size}<={bound} {status}")
    return EXIT_OK


def cmd_measure(args) -> int:
    source = formats.parse_code_set(_read(args.set_file), allow_epsilon=True)
    dist = formats.parse_distribution(_read(args.dist_file), source.alphabet)
    if source.is_finite:
        value = measure_finite(source.words, dist)
    else:
        value = measure_regular(source.language(), dist)
    print(f"measure: {value}")
    return EXIT_OK


def cmd_gen(args) -> int:
    param = args.n if args.n is not None else args.k
    family = families.generate(families.FamilySpec(args.family, param))
    suffix = "" if param is None else f" {('-n' if args.n is not None else '-k')} {param}"
    text = formats.format_code_set(
        family.alphabet,
        words=family.words,
        regex=family.regex,
        header=f"codekit gen {args.family}{suffix}",
    )
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codekit",
        description="Decide code-theoretic properties, compute invariant free "
        "hulls, and embed invariant codes into complete ones.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="full property report for a code set")
    check.add_argument("set_file")
    check.add_argument("--theta", dest="theta_file")
    check.add_argument("--dist", dest="dist_file")
    check.set_defaults(func=cmd_check)

    comp = sub.add_parser("complete", help="embed a non-complete invariant code")
    comp.add_argument("set_file")
    comp.add_argument("theta_file")
    comp.add_argument("--witness")
    comp.add_argument("--overlap-free-witness", action="store_true")
    comp.set_defaults(func=cmd_complete)

    hullp = sub.add_parser("hull", help="invariant free hull of a finite set")
    hullp.add_argument("set_file")
    hullp.add_argument("--theta", dest="theta_file")
    hullp.set_defaults(func=cmd_hull)

    meas = sub.add_parser("measure", help="exact Bernoulli measure of a set")
    meas.add_argument("set_file")
    meas.add_argument("dist_file")
    meas.set_defaults(func=cmd_measure)

    gen = sub.add_parser("gen", help="emit a named code family as a set file")
    gen.add_argument("family", choices=families.FAMILY_NAMES)
    gen.add_argument("-n", "--n", dest="n", type=int)
    gen.add_argument("-k", "--k", dest="k", type=int)
    gen.add_argument("-o", "--output")
    gen.set_defaults(func=cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    state_cap_from_env()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, formats.FormatError, RegexSyntaxError, WordError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (VerificationFailed, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
