"""Contains :class:`~.TuringMachine` and :func:`~.simulate_tm`."""

import collections
import logging

from ..enums import Move
from ..errors import MachineFault, MachineTimeout

__all__ = [
    "BLANK",
    "FILLER",
    "TuringMachine",
    "HaltReport",
    "simulate_tm",
]

logger = logging.getLogger(__name__)

#: The blank symbol of read-write tapes.
BLANK = "_"

#: The read-only symbol past the end of a read-only input.
FILLER = "#"

class TuringMachine:
    """A Turing machine with a read-only track and a read-write track.

    Both tapes are one-sided and share one head. The machine
    halts in one of two final states, :attr:`final1` standing
    for rejection and :attr:`final2` for acceptance.

    Parameters
    ----------
    states : iterable of :class:`str`
        The states.
    initial : :class:`str`
        The initial state.
    final1, final2 : :class:`str`
        The two distinct final states.
    tape_alphabet : iterable of :class:`str`
        The read-write symbols, not including :data:`BLANK`.
    input_alphabet : iterable of :class:`str`
        The read-only symbols, including :data:`FILLER`.
    transitions : :class:`dict`
        Maps ``(state, read_only, read_write)`` to ``(state, write, move)``
        where ``move`` is a :class:`~.Move`. Missing entries for
        non-final states halt in :attr:`final1` without moving.

    Raises
    ------
    :exc:`ValueError`
        If the states or a transition are inconsistent.
    """

    def __init__(self, states, initial, final1, final2, tape_alphabet, input_alphabet, transitions):
        self.states         = tuple(states)
        self.initial        = initial
        self.final1         = final1
        self.final2         = final2
        self.tape_alphabet  = tuple(tape_alphabet)
        self.input_alphabet = tuple(input_alphabet)

        state_set = set(self.states)
        if len(state_set) != len(self.states):
            raise ValueError("Duplicate states")

        for state in (initial, final1, final2):
            if state not in state_set:
                raise ValueError(f"Unknown state {state!r}")

        if final1 == final2:
            raise ValueError("The two final states must differ")

        if BLANK in self.tape_alphabet:
            raise ValueError(f"The blank {BLANK!r} is implicit in the tape alphabet")

        if FILLER not in self.input_alphabet:
            raise ValueError(f"The input alphabet must contain {FILLER!r}")

        self.transitions = {}
        for (state, read_only, read_write), (new_state, write, move) in transitions.items():
            if state not in state_set or new_state not in state_set:
                raise ValueError(f"Transition {state!r} -> {new_state!r} uses an unknown state")

            if state in self.finals:
                raise ValueError(f"Final state {state!r} has a transition")

            if read_only not in self.input_alphabet:
                raise ValueError(f"Unknown read-only symbol {read_only!r}")

            for symbol in (read_write, write):
                if symbol not in self.tape_symbols:
                    raise ValueError(f"Unknown read-write symbol {symbol!r}")

            self.transitions[state, read_only, read_write] = (new_state, write, Move(move))

    @property
    def finals(self):
        return (self.final1, self.final2)

    @property
    def tape_symbols(self):
        """The read-write symbols including :data:`BLANK`."""

        return self.tape_alphabet + (BLANK,)

    def transition(self, state, read_only, read_write):
        """Gets the transition for a situation.

        Returns
        -------
        :class:`tuple`
            ``(state, write, move)``, halting in :attr:`final1` without
            moving when the transition is not listed.
        """

        return self.transitions.get((state, read_only, read_write), (self.final1, read_write, Move.Stay))

    def __repr__(self):
        return f"<{type(self).__name__} |Q|={len(self.states)} |delta|={len(self.transitions)}>"

class HaltReport(collections.namedtuple("HaltReport", "state head read_only read_write steps trace")):
    """Where a simulated machine ended up.

    Parameters
    ----------
    state : :class:`str`
        The state.
    head : :class:`int`
        The head position.
    read_only, read_write : :class:`tuple`
        The tape contents written out so far.
    steps : :class:`int`
        The number of transitions taken.
    trace : :class:`tuple`
        ``(step, state, head)`` for each step, if a trace was requested.
    """

    __slots__ = ()

def simulate_tm(machine, read_only, read_write, max_steps, *, trace=False):
    """Runs a machine until it halts.

    Parameters
    ----------
    machine : :class:`TuringMachine`
        The machine.
    read_only : iterable of :class:`str`
        The read-only input, continued by :data:`FILLER`.
    read_write : iterable of :class:`str`
        The read-write input, continued by :data:`BLANK`.
    max_steps : :class:`int`
        The most transitions to take.
    trace : :class:`bool`
        Whether to record the state and head position of each step.

    Returns
    -------
    :class:`HaltReport`
        The situation once a final state is reached.

    Raises
    ------
    :exc:`~.MachineFault`
        If the machine moves left of cell 0.
    :exc:`~.MachineTimeout`
        If the machine takes ``max_steps`` transitions without halting.
    """

    read_only  = list(read_only)
    read_write = list(read_write)
    state      = machine.initial
    head       = 0
    steps      = 0
    history    = [(0, state, head)] if trace else None

    def report():
        return HaltReport(state, head, tuple(read_only), tuple(read_write), steps, tuple(history or ()))

    while state not in machine.finals:
        if steps >= max_steps:
            raise MachineTimeout(report())

        if head >= len(read_write):
            read_write.extend([BLANK] * (head - len(read_write) + 1))

        a = read_only[head] if head < len(read_only) else FILLER

        new_state, write, move = machine.transition(state, a, read_write[head])

        read_write[head] = write
        if move == Move.Left:
            if head == 0:
                raise MachineFault(report())

            head -= 1
        elif move == Move.Right:
            head += 1

        state  = new_state
        steps += 1

        if trace:
            history.append((steps, state, head))

    logger.debug("Machine halted in %r after %d steps", state, steps)

    return report()
