"""Rule files, ``.ca``.

A rule file gives an alphabet and a radius, then either names a builtin,
lists the rule's table, or names a compiled program::

    alphabet: 0 1
    radius: 1
    0 0 0 -> 0
    default -> 1

    builtin: elementary 110

    program: signal
    machine: reference.tm

A ``machine`` path is relative to the rule file, and ``reference``
names the built-in always-accepting machine.
"""

import logging
import os

from ..errors import AlphabetError, ParseError
from ..automata import BINARY, Alphabet, LocalRule, TableRule
from ..machines import PredicateProgram, SignalRule, build_sigma3_machine, compile_signal_ca
from . import tm
from .reader import dump_lines, read_lines

__all__ = [
    "load",
    "dump",
]

logger = logging.getLogger(__name__)

KEYS = ("alphabet", "radius", "builtin", "program", "machine")

REFERENCE_MACHINE = "reference"

def _symbol(alphabet, name, line):
    try:
        return alphabet.symbol(name)
    except AlphabetError as e:
        raise line.error(str(e)) from None

def _load_machine(value, path, line):
    if value == REFERENCE_MACHINE:
        return build_sigma3_machine(PredicateProgram.always_true())

    if path is not None and not os.path.isabs(value):
        value = os.path.join(os.path.dirname(path), value)

    try:
        return tm.load(value)
    except OSError as e:
        raise line.error(f"Cannot read machine {value!r}: {e.strerror}") from None

def _load_table(alphabet, radius, entries, default, path):
    table = {}
    for line in entries:
        tokens = line.tokens
        arrow  = tokens.index("->")

        if arrow != 2 * radius + 1 or len(tokens) != arrow + 2:
            raise line.error(f"Expected {2 * radius + 1} symbols, '->' and one symbol")

        neighborhood = tuple(_symbol(alphabet, name, line) for name in tokens[:arrow])
        output       = _symbol(alphabet, tokens[-1], line)

        if table.setdefault(neighborhood, output) != output:
            raise line.error(f"Conflicting entry for {' '.join(tokens[:arrow])}")

    def function(neighborhood):
        output = table.get(neighborhood, default)
        if output is None:
            raise ParseError(f"No entry for {' '.join(map(str, neighborhood))} and no default", path=path)

        return output

    return TableRule.tabulate(alphabet, radius, function, name=os.path.basename(path) if path is not None else None)

def load(f):
    """Loads a rule file.

    Parameters
    ----------
    f : pathlike or file object
        The file.

    Returns
    -------
    :class:`~.LocalRule`
        The rule.

    Raises
    ------
    :exc:`~.ParseError`
        If the file is malformed, pointing at the offending line.

    Examples
    --------
    >>> import io
    >>> import glimca
    >>> rule = glimca.formats.ca.load(io.StringIO("builtin: min\\n"))
    >>> rule.name
    'min'
    """

    path, lines = read_lines(f)

    header  = {}
    entries = []
    default = None

    for line in lines:
        tokens = line.tokens

        if "->" in tokens:
            if tokens[0] == "default":
                if len(tokens) != 3 or tokens[1] != "->":
                    raise line.error("Expected 'default -> symbol'")

                default = line
            else:
                entries.append(line)

            continue

        if line.key not in KEYS:
            raise line.error(f"Unrecognized line {line.text!r}")

        if line.key in header:
            raise line.error(f"Duplicate {line.key!r}")

        header[line.key] = line

    if "alphabet" in header:
        try:
            alphabet = Alphabet(header["alphabet"].value.split())
        except AlphabetError as e:
            raise header["alphabet"].error(str(e)) from None
    else:
        alphabet = None

    if "program" in header:
        program = header["program"]
        if program.value != "signal":
            raise program.error(f"Unknown program {program.value!r}")

        if "machine" not in header:
            raise program.error("A signal program needs a 'machine' line")

        machine = _load_machine(header["machine"].value, path, header["machine"])

        return compile_signal_ca(machine)

    if "builtin" in header:
        builtin     = header["builtin"]
        name, *args = builtin.value.split()

        try:
            return LocalRule.from_builtin(name, *args, alphabet=alphabet)
        except (ValueError, TypeError) as e:
            raise builtin.error(str(e)) from None

    if alphabet is None:
        raise ParseError("Missing 'alphabet'", path=path)

    if "radius" not in header:
        raise ParseError("Missing 'radius'", path=path)

    try:
        radius = int(header["radius"].value)
    except ValueError:
        raise header["radius"].error(f"Radius must be an integer, got {header['radius'].value!r}") from None

    if radius < 0:
        raise header["radius"].error(f"Radius must be non-negative, got {radius}")

    if default is not None:
        default = _symbol(alphabet, default.tokens[2], default)

    rule = _load_table(alphabet, radius, entries, default, path)

    logger.debug("Loaded %r from %s", rule, path)

    return rule

def dump(rule, f=None, *, machine=None):
    """Dumps a rule as a rule file.

    Parameters
    ----------
    rule : :class:`~.LocalRule`
        The rule.
    f : file object, optional
        The file object to write to. If unspecified, the text is returned.
    machine : :class:`str`, optional
        The machine path written for a :class:`~.SignalRule`.

    Returns
    -------
    :class:`str` or :class:`int`
        The text if ``f`` is unspecified, otherwise how many characters were written.

    Raises
    ------
    :exc:`ValueError`
        If ``rule`` is a :class:`~.SignalRule` and ``machine`` is unspecified.

    Examples
    --------
    >>> import glimca
    >>> print(glimca.formats.ca.dump(glimca.ElementaryRule(110)), end="")
    builtin: elementary 110
    """

    if isinstance(rule, SignalRule):
        if machine is None:
            raise ValueError("A signal rule is written with the path of its machine")

        return dump_lines(["program: signal", f"machine: {machine}"], f)

    lines = []
    if rule.builtin_name is not None:
        if rule.alphabet != BINARY:
            lines.append("alphabet: " + " ".join(str(s) for s in rule.alphabet))

        builtin = f"builtin: {rule.builtin_name}"
        if hasattr(rule, "number"):
            builtin += f" {rule.number}"

        lines.append(builtin)

        return dump_lines(lines, f)

    lines.append("alphabet: " + " ".join(str(s) for s in rule.alphabet))
    lines.append(f"radius: {rule.radius}")

    for neighborhood in rule.alphabet.words(rule.diameter):
        lines.append(" ".join(str(s) for s in neighborhood) + f" -> {rule(neighborhood)}")

    return dump_lines(lines, f)
