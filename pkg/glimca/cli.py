"""The ``glimca`` command line.

Exit codes are 0 on success, 1 when a verdict or check fails,
2 on bad input and 3 when exactness is unavailable within the budget.
"""

import argparse
import csv
import io
import logging
import os
import sys

from . import formats
from .errors import BudgetExceeded, GlimcaError
from .automata import run, render
from .subshifts import LanguageSample, chain_components, is_mixing, is_transitive, periodic_factor_obstruction, sigma_period
from .machines import (
    LETTERS,
    PredicateProgram,
    build_sigma3_machine,
    compile_signal_ca,
    verify_geometry,
)
from .lab import (
    Bounds,
    check_enables,
    estimate_generic_language,
    realizability_report,
    search_forcing_word,
)

__all__ = [
    "main",
]

logger = logging.getLogger(__name__)

EXIT_OK     = 0
EXIT_FAILED = 1
EXIT_INPUT  = 2
EXIT_BUDGET = 3

# Flag name, Bounds field, help
_BOUND_FLAGS = [
    ("--U",      "U",      "longest context or extension word"),
    ("--T-max",  "T_max",  "time horizon"),
    ("--K",      "K",      "steps a hit or kill must persist"),
    ("--N",      "N",      "number of sampled configurations"),
    ("--T0",     "T0",     "first sampled time step"),
    ("--period", "period", "period of sampled configurations"),
    ("--n",      "n",      "word length"),
    ("--m-max",  "m_max",  "largest power checked by the classifier"),
    ("--budget", "budget", "enumeration cap"),
]

def _add_bounds(parser, *, seed_flag="--seed", skip=()):
    group = parser.add_argument_group("bounds")

    for flag, field, help in _BOUND_FLAGS:
        if field in skip:
            continue

        group.add_argument(flag, dest=field, type=int, default=None, help=help)

    group.add_argument(seed_flag, dest="seed", type=int, default=None, help="random seed of sampled operations")

def _bounds(args):
    values = {field: getattr(args, field, None) for _, field, _ in _BOUND_FLAGS + [(None, "seed", None)]}

    return Bounds(**{field: value for field, value in values.items() if value is not None})

class UsageError(GlimcaError, ValueError):
    """A command line argument is missing or inconsistent."""

def _range(text):
    start, sep, stop = text.partition(":")
    if sep == "":
        raise argparse.ArgumentTypeError(f"Expected 'a:b', got {text!r}")

    try:
        return int(start), int(stop)
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected integers in {text!r}") from None

def _emit(args, output):
    if args.output is not None:
        mode = "wb" if isinstance(output, bytes) else "w"
        with open(args.output, mode) as f:
            f.write(output)

        return

    if isinstance(output, bytes):
        sys.stdout.flush()
        sys.stdout.buffer.write(output)
    else:
        sys.stdout.write(output)

def _machine(args):
    if args.reference:
        return build_sigma3_machine(PredicateProgram.always_true())

    if args.tm is None:
        raise UsageError("Give a machine file or --reference")

    return formats.tm.load(args.tm)

def cmd_sim(args):
    rule          = formats.ca.load(args.rule)
    configuration = formats.parse_configuration(args.config, rule.alphabet)
    diagram       = run(rule, configuration, args.steps, args.window, cap=args.budget)

    _emit(args, render(diagram, args.format))

    return EXIT_OK

def cmd_verify_geometry(args):
    rule = compile_signal_ca(_machine(args))

    w = tuple(args.w) if "," not in args.w else tuple(args.w.split(","))
    u = rule.alphabet.parse_word(args.u)
    v = rule.alphabet.parse_word(args.v)

    start, stop = args.n_range
    rows        = verify_geometry(rule, w, args.m, range(start, stop + 1), u=u, v=v)

    _emit(args, "".join(row.describe() + "\n" for row in rows))

    return EXIT_OK if all(row.passed for row in rows) else EXIT_FAILED

def cmd_sft(args):
    sft = formats.sft.load(args.sft)

    if args.check == "transitive":
        out = "true" if is_transitive(sft) else "false"
    elif args.check == "mixing":
        out = "true" if is_mixing(sft) else "false"
    elif args.check == "period":
        out = " ".join(str(p) for p in sigma_period(sft))
    elif args.check == "components":
        partition = chain_components(sft, args.order if args.order is not None else sft.window)
        out       = "\n".join(
            f"component {i}: " + " ".join(sorted(sft.alphabet.format_word(w) for w in cls))
            for i, cls in enumerate(partition.classes)
        )
    else:
        out = periodic_factor_obstruction(sft).describe()

    _emit(args, out + "\n")

    return EXIT_OK

def _language_lines(sample):
    alphabet = sample.alphabet

    return [
        (n, sorted(alphabet.format_word(w) for w in sample.words(n)))
        for n in range(1, sample.max_length + 1)
    ]

def cmd_analyze(args):
    rule   = formats.ca.load(args.rule)
    bounds = _bounds(args)

    sample = estimate_generic_language(rule, bounds, workers=args.workers)
    report = realizability_report(sample, rule, bounds=bounds)

    if args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        for n, words in _language_lines(sample):
            writer.writerow(["language", f"words of length {n}", "measure-generic heuristic", " ".join(words), n, report.evidence])

        _emit(args, report.to_csv() + buffer.getvalue())
    else:
        out = [
            f"rule: {rule.name}",
            f"bounds: {bounds.describe()}",
            f"estimate: measure-generic heuristic {report.evidence}",
        ]

        for n, words in _language_lines(sample):
            out.append(f"language n={n}: " + " ".join(words))

        _emit(args, "\n".join(out) + "\n" + report.to_text())

    return EXIT_OK

def _certificate_line(certificate):
    evidence = "exact" if certificate.exact else f"seed={certificate.seed}"

    return f"certificate: {certificate.kind.value} horizon={certificate.horizon} {evidence}"

def cmd_enables(args):
    rule   = formats.ca.load(args.rule)
    bounds = _bounds(args)
    v      = formats.parse_cylinder(args.v, rule.alphabet)
    s      = rule.alphabet.parse_word(args.s)

    result = check_enables(rule, v, s, bounds)

    out = [f"verdict: {result.verdict.value}"]
    if result.witness is not None:
        u, w = result.witness
        out.append(f"witness: u={rule.alphabet.format_word(u)!r} w={rule.alphabet.format_word(w)!r}")

    out.append("hits: " + " ".join(str(t) for t in result.hits))
    out.append(f"bounds: {bounds.describe()}")
    out.append(_certificate_line(result.certificate))

    _emit(args, "\n".join(out) + "\n")

    return EXIT_OK if result.supported else EXIT_FAILED

def cmd_forcing(args):
    rule   = formats.ca.load(args.rule)
    bounds = _bounds(args)
    seed   = formats.parse_cylinder(args.seed_word, rule.alphabet)

    if args.language is not None:
        oracle = LanguageSample.from_sft(formats.sft.load(args.language), args.length)
    else:
        oracle = estimate_generic_language(rule, bounds.replace(n=args.length), workers=args.workers)

    result = search_forcing_word(rule, seed, args.length, bounds, oracle)

    out = []
    if result.found:
        out.append(f"word: {rule.alphabet.format_word(result.cylinder.word)}")
        out.append(f"position: {result.cylinder.position}")
        out.append(f"T: {result.time}")
        out.append(f"bounds: {bounds.describe()}")
        out.append(_certificate_line(result.certificate))
    else:
        out.append(f"not found: no extension removes {rule.alphabet.format_word(result.stuck)}")
        out.append(f"bounds: {bounds.describe()}")

    _emit(args, "\n".join(out) + "\n")

    return EXIT_OK if result.found else EXIT_FAILED

def _machine_path(args):
    # Machine paths in rule files are relative to the rule file
    if args.reference:
        return formats.ca.REFERENCE_MACHINE

    return os.path.relpath(os.path.abspath(args.tm), os.path.dirname(os.path.abspath(args.emit_ca)))

def cmd_compile(args):
    machine = _machine(args)
    rule    = compile_signal_ca(machine)

    out = [
        f"states: {len(machine.states)}",
        f"transitions: {len(machine.transitions)}",
        f"alphabet size: {rule.alphabet.size}",
        f"radius: {rule.radius}",
    ]

    if args.emit_ca is not None:
        with open(args.emit_ca, "w") as f:
            formats.ca.dump(rule, f, machine=_machine_path(args))

    _emit(args, "\n".join(out) + "\n")

    return EXIT_OK

def cmd_show_defaults(args):
    _emit(args, "".join(f"{name}={value}\n" for name, value in Bounds()._asdict().items()))

    return EXIT_OK

def make_parser():
    """Makes the command line's :class:`argparse.ArgumentParser`."""

    parser = argparse.ArgumentParser(prog="glimca", description="Generic limit sets of one-dimensional cellular automata")

    parser.add_argument("-v", "--verbose", action="count", default=0, help="log more, repeatable")
    parser.add_argument("--output", "-o", default=None, help="write output to a file")
    parser.add_argument("--show-defaults", action="store_true", help="print the default bounds and exit")

    subparsers = parser.add_subparsers(dest="command")

    sim = subparsers.add_parser("sim", help="simulate a rule")
    sim.add_argument("--rule", required=True)
    sim.add_argument("--config", required=True, help="'cyclic:WORD' or 'LEFT^inf (CENTER@OFFSET) RIGHT^inf'")
    sim.add_argument("--steps", type=int, default=16)
    sim.add_argument("--window", type=_range, default=None, help="cells 'a:b'")
    sim.add_argument("--format", choices=("text", "csv", "pnm"), default="text")
    sim.add_argument("--budget", type=int, default=None)
    sim.set_defaults(func=cmd_sim)

    geometry = subparsers.add_parser("verify-geometry", help="check the signal collisions of a compiled machine")
    geometry.add_argument("tm", nargs="?", default=None)
    geometry.add_argument("--reference", action="store_true", help="use the built-in always-accepting machine")
    geometry.add_argument("--w", default="".join(LETTERS))
    geometry.add_argument("--m", type=int, default=1)
    geometry.add_argument("--n-range", type=_range, default=(5, 12))
    geometry.add_argument("--u", default="")
    geometry.add_argument("--v", default="")
    geometry.set_defaults(func=cmd_verify_geometry)

    sft = subparsers.add_parser("sft", help="decide a property of a subshift")
    sft.add_argument("--sft", required=True)
    sft.add_argument("--check", choices=("transitive", "mixing", "period", "components", "obstruction"), required=True)
    sft.add_argument("--order", type=int, default=None, help="word length of chain components")
    sft.set_defaults(func=cmd_sft)

    analyze = subparsers.add_parser("analyze", help="estimate and analyze the generic limit set of a rule")
    analyze.add_argument("--rule", required=True)
    analyze.add_argument("--format", choices=("text", "csv"), default="text")
    analyze.add_argument("--workers", type=int, default=4)
    _add_bounds(analyze)
    analyze.set_defaults(func=cmd_analyze)

    enables = subparsers.add_parser("enables", help="check whether a cylinder enables a word")
    enables.add_argument("--rule", required=True)
    enables.add_argument("--v", required=True, help="cylinder 'WORD' or 'WORD@POSITION'")
    enables.add_argument("--s", required=True, help="word at the origin")
    _add_bounds(enables)
    enables.set_defaults(func=cmd_enables)

    forcing = subparsers.add_parser("forcing", help="search for a forcing word")
    forcing.add_argument("--rule", required=True)
    forcing.add_argument("--seed", dest="seed_word", required=True, help="cylinder 'WORD' or 'WORD@POSITION' to extend")
    forcing.add_argument("--length", "--n", dest="length", type=int, required=True, help="word length")
    forcing.add_argument("--language", default=None, help="subshift file of the allowed words, estimated if not given")
    forcing.add_argument("--workers", type=int, default=4)
    _add_bounds(forcing, seed_flag="--sample-seed", skip=("n",))
    forcing.set_defaults(func=cmd_forcing)

    compiler = subparsers.add_parser("compile", help="compile a machine into its signal automaton")
    compiler.add_argument("tm", nargs="?", default=None)
    compiler.add_argument("--reference", action="store_true", help="use the built-in always-accepting machine")
    compiler.add_argument("--emit-ca", default=None, help="write the compiled rule file")
    compiler.set_defaults(func=cmd_compile)

    defaults = subparsers.add_parser("show-defaults", help="print the default bounds")
    defaults.set_defaults(func=cmd_show_defaults)

    return parser

def main(argv=None):
    """Runs the command line.

    Parameters
    ----------
    argv : :class:`list` of :class:`str`, optional
        The arguments, defaulting to :data:`sys.argv`.

    Returns
    -------
    :class:`int`
        The exit code.
    """

    parser = make_parser()
    args   = parser.parse_args(argv)

    logging.basicConfig(
        stream = sys.stderr,
        level  = logging.WARNING - 10 * min(args.verbose, 2),
        format = "%(levelname)s:%(name)s: %(message)s",
    )

    if args.show_defaults:
        return cmd_show_defaults(args)

    if args.command is None:
        parser.print_usage(sys.stderr)

        return EXIT_INPUT

    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"glimca: {e}", file=sys.stderr)

        return EXIT_BUDGET
    except (ValueError, OSError) as e:
        print(f"glimca: error: {e}", file=sys.stderr)

        return EXIT_INPUT
