"""Machine files, ``.tm``.

A machine file names the states and alphabets, then lists transitions
``state read_only read_write -> state write move`` with ``move`` one of
``L``, ``R`` and ``S``::

    states: q0 qf1 qf2
    initial: q0
    final1: qf1
    final2: qf2
    gamma: 0 1
    gammaA: a #
    q0 a _ -> qf2 1 S

The blank ``_`` is implicit in ``gamma``, and ``gammaA`` must contain
the filler ``#``. Missing transitions halt in ``final1``.
"""

from ..errors import ParseError
from ..machines import TuringMachine
from .reader import dump_lines, read_lines

__all__ = [
    "load",
    "dump",
]

KEYS = ("states", "initial", "final1", "final2", "gamma", "gammaA")

def load(f):
    """Loads a machine file.

    Parameters
    ----------
    f : pathlike or file object
        The file.

    Returns
    -------
    :class:`~.TuringMachine`
        The machine.

    Raises
    ------
    :exc:`~.ParseError`
        If the file is malformed, pointing at the offending line.
    """

    path, lines = read_lines(f)

    header      = {}
    transitions = {}
    for line in lines:
        tokens = line.tokens

        # State names may contain ':', so transitions are checked first
        if "->" in tokens:
            if len(tokens) != 7 or tokens[3] != "->":
                raise line.error("Expected 'state read_only read_write -> state write move'")

            key = tuple(tokens[:3])
            if key in transitions:
                raise line.error(f"Duplicate transition for {' '.join(key)}")

            transitions[key] = (line, tuple(tokens[4:]))

            continue

        if line.key not in KEYS:
            raise line.error(f"Unrecognized line {line.text!r}")

        if line.key in header:
            raise line.error(f"Duplicate {line.key!r}")

        header[line.key] = line

    for key in KEYS:
        if key not in header:
            raise ParseError(f"Missing {key!r}", path=path)

    states = header["states"].value.split()
    for state in states:
        if "|" in state:
            raise header["states"].error(f"State {state!r} contains '|'")

    for line, (new_state, write, move) in transitions.values():
        if move not in ("L", "R", "S"):
            raise line.error(f"Move must be L, R or S, got {move!r}")

    try:
        return TuringMachine(
            states,
            header["initial"].value,
            header["final1"].value,
            header["final2"].value,
            header["gamma"].value.split(),
            header["gammaA"].value.split(),
            {key: target for key, (_, target) in transitions.items()},
        )
    except ValueError as e:
        raise ParseError(str(e), path=path) from None

def dump(machine, f=None):
    """Dumps a machine as a machine file.

    Parameters
    ----------
    machine : :class:`~.TuringMachine`
        The machine.
    f : file object, optional
        The file object to write to. If unspecified, the text is returned.

    Returns
    -------
    :class:`str` or :class:`int`
        The text if ``f`` is unspecified, otherwise how many characters were written.
    """

    lines = [
        "states: "  + " ".join(machine.states),
        "initial: " + machine.initial,
        "final1: "  + machine.final1,
        "final2: "  + machine.final2,
        "gamma: "   + " ".join(machine.tape_alphabet),
        "gammaA: "  + " ".join(machine.input_alphabet),
    ]

    for (state, read_only, read_write), (new_state, write, move) in sorted(machine.transitions.items(), key=lambda item: item[0]):
        lines.append(f"{state} {read_only} {read_write} -> {new_state} {write} {move.value}")

    return dump_lines(lines, f)
