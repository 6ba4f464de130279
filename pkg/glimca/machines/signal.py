"""Compiles a Turing machine into a cellular automaton of signals.

The automaton has radius 3 and two tracks. The read-only track never
changes. The first track holds either a signal or a cell of a simulated
tape: an arrow pointing at the head, or the head itself in some state.

Signals move right at fixed speeds, leaving a wake behind them. An
eraser ``E`` always moves, and a signal that cannot move becomes ``E``.
Two collisions build a tape: ``S2`` catching ``S1`` starts a head and
launches ``S3``, and ``S3`` catching ``S2`` lays ones and launches
``S2'``, whose wake is blank tape. Everything on a tape cell that does
not look like part of a well formed tape becomes ``E``.

Each cell's next symbol comes from the claims made on it by nearby
movers, collisions and heads, in this order of priority:

1. A single hard claim wins, several distinct hard claims give ``E``.
2. A soft claim, only ever a wake of background, gives ``B``.
3. Otherwise the cell keeps its symbol if it is locally valid, else ``E``.

An ``E`` always makes a hard claim two cells to its right, and that
claim either wins or conflicts, so erasers move forever.
"""

import collections
import logging

from ..enums import Arrow, Move, Signal
from ..automata import Alphabet, ProgramRule
from .turing import BLANK

__all__ = [
    "SignalSymbol",
    "SignalAlphabet",
    "SignalRule",
    "compile_signal_ca",
    "SPEEDS",
]

logger = logging.getLogger(__name__)

#: How far each signal moves per step.
SPEEDS = {
    Signal.Eraser:  2,
    Signal.S1:      1,
    Signal.S2:      2,
    Signal.S3:      3,
    Signal.S2Prime: 2,
}

# (track, tape, hard) left on the cells a signal moves over
WAKES = {
    Signal.Eraser:  (Signal.Background, None, False),
    Signal.S1:      (Signal.Background, None, False),
    Signal.S2:      (Signal.Background, None, False),
    Signal.S3:      (Arrow.Left, "1", True),
    Signal.S2Prime: (Arrow.Left, BLANK, True),
}

# Signals a mover may overtake, if they land beyond it
PASSABLE = {Signal.Eraser, Signal.S1, Signal.S2}

COLLISIONS = {(Signal.S2, Signal.S1), (Signal.S3, Signal.S2)}

RADIUS = 3

class SignalSymbol(collections.namedtuple("SignalSymbol", "track tape read_only")):
    """A symbol of the signal automaton.

    Parameters
    ----------
    track : :class:`~.Signal` or :class:`~.Arrow` or :class:`str`
        A signal, an arrow, or the state of the head.
    tape : :class:`str` or ``None``
        The simulated read-write symbol, ``None`` for signals.
    read_only : :class:`str`
        The read-only track.
    """

    __slots__ = ()

    @property
    def is_head(self):
        return isinstance(self.track, str)

    @property
    def is_signal(self):
        return isinstance(self.track, Signal)

    def __str__(self):
        if self.is_signal:
            return f"{self.track.value}|{self.read_only}"

        track = self.track.value if isinstance(self.track, Arrow) else self.track

        return f"{track}|{self.tape}|{self.read_only}"

class SignalAlphabet(Alphabet):
    """The alphabet of the automaton compiled from a machine.

    Its size is ``((|Q| + 2) * |G| + 7) * |A|`` where ``G`` is the
    machine's read-write alphabet with the blank and ``A`` its
    read-only alphabet.

    Parameters
    ----------
    machine : :class:`~.TuringMachine`
        The machine.
    """

    def __init__(self, machine):
        self.machine = machine

        symbols = []
        for read_only in machine.input_alphabet:
            for signal in Signal:
                symbols.append(SignalSymbol(signal, None, read_only))

            for track in (Arrow.Left, Arrow.Right) + machine.states:
                for tape in machine.tape_symbols:
                    symbols.append(SignalSymbol(track, tape, read_only))

        super().__init__(symbols)

    def signal(self, signal, read_only):
        return SignalSymbol(signal, None, read_only)

class SignalRule(ProgramRule):
    """The local rule of the automaton compiled from a machine.

    The claim tables :meth:`mover_claims`, :meth:`collision_claims`
    and :meth:`head_claims` are exposed so that conservation
    properties can be checked exhaustively over them.

    Parameters
    ----------
    machine : :class:`~.TuringMachine`
        The machine to simulate.
    """

    def __init__(self, machine):
        self.machine = machine

        super().__init__(SignalAlphabet(machine), RADIUS, self._evaluate_neighborhood, name="signal")

    def mover_claims(self, left, cells):
        """Gets the claims of a moving signal.

        Parameters
        ----------
        left : :class:`SignalSymbol` or ``None``
            The cell left of the mover, ``None`` when out of view.
        cells : :class:`tuple`
            The mover followed by the three cells to its right.

        Returns
        -------
        :class:`tuple`
            ``(offset, track, tape, hard)`` claims, offsets relative
            to the mover.
        """

        signal = cells[0].track
        if signal not in SPEEDS:
            return ()

        if signal == Signal.Eraser:
            return (
                (0, Signal.Background, None, False),
                (1, Signal.Background, None, False),
                (2, Signal.Eraser,     None, True),
            )

        # Collisions are handled by collision_claims
        if left is not None and (left.track, signal) in COLLISIONS:
            return ()

        if (signal, cells[1].track) in COLLISIONS:
            return ()

        speed = SPEEDS[signal]
        if not self._can_move(speed, cells):
            return ((0, Signal.Eraser, None, True),)

        track, tape, hard = WAKES[signal]

        return tuple((k, track, tape, hard) for k in range(speed)) + ((speed, signal, None, True),)

    @staticmethod
    def _can_move(speed, cells):
        for k in range(1, speed + 1):
            track = cells[k].track

            if track == Signal.Background:
                continue

            # Overtaking is fine when the other mover lands further right
            return track in PASSABLE and k + SPEEDS[track] > speed

        return True

    def collision_claims(self, left, right):
        """Gets the claims of two adjacent signals, offsets relative to ``left``."""

        pair = (left.track, right.track)

        if pair == (Signal.S2, Signal.S1):
            return (
                (-1, Signal.Turnstile,      None, True),
                (0,  self.machine.initial,  "1",  True),
                (1,  Arrow.Left,            "1",  True),
                (2,  Signal.S3,             None, True),
            )

        if pair == (Signal.S3, Signal.S2):
            return (
                (0, Arrow.Left,     "1",  True),
                (1, Arrow.Left,     "1",  True),
                (2, Arrow.Left,     "1",  True),
                (3, Signal.S2Prime, None, True),
            )

        return ()

    def head_claims(self, left, head, right):
        """Gets the claims of a head and its neighbors, offsets relative to ``head``."""

        erase = ((0, Signal.Eraser, None, True),)

        if head.track in self.machine.finals:
            return erase

        if left.track not in (Signal.Turnstile, Arrow.Right):
            return erase

        if right.track not in (Arrow.Left, Signal.S3, Signal.S2Prime):
            return erase

        state, write, move = self.machine.transition(head.track, head.read_only, head.tape)

        if move == Move.Stay:
            return ((0, state, write, True),)

        if move == Move.Left:
            if left.track != Arrow.Right:
                return erase

            return ((0, Arrow.Left, write, True), (-1, state, left.tape, True))

        if right.track != Arrow.Left:
            return erase

        return ((0, Arrow.Right, write, True), (1, state, right.tape, True))

    @staticmethod
    def static(left, cell, right):
        """Gets the next track of a cell nothing claims, ``None`` meaning ``E``."""

        track = cell.track

        if track == Signal.Background:
            return track

        if track == Signal.Turnstile:
            if right.track == Arrow.Right or right.is_head:
                return track

            return None

        if track == Arrow.Right:
            if left.track in (Signal.Turnstile, Arrow.Right) and (right.track == Arrow.Right or right.is_head):
                return track

            return None

        if track == Arrow.Left:
            if (left.track == Arrow.Left or left.is_head) and right.track in (Arrow.Left, Signal.S3, Signal.S2Prime):
                return track

            return None

        return None

    def claims(self, neighborhood):
        """Gets every claim on the center of a neighborhood.

        Returns
        -------
        :class:`list`
            ``(track, tape, hard)`` for each claim.
        """

        c   = RADIUS
        ret = []

        for j in range(-3, 1):
            left = neighborhood[c + j - 1] if j > -3 else None
            for offset, track, tape, hard in self.mover_claims(left, neighborhood[c + j:c + j + 4]):
                if offset == -j:
                    ret.append((track, tape, hard))

        for p in range(-3, 2):
            for offset, track, tape, hard in self.collision_claims(neighborhood[c + p], neighborhood[c + p + 1]):
                if offset == -p:
                    ret.append((track, tape, hard))

        for h in range(-1, 2):
            if neighborhood[c + h].is_head:
                triple = neighborhood[c + h - 1:c + h + 2]

                for offset, track, tape, hard in self.head_claims(*triple):
                    if offset == -h:
                        ret.append((track, tape, hard))

        return ret

    def _evaluate_neighborhood(self, neighborhood):
        c         = RADIUS
        read_only = neighborhood[c].read_only

        claims = self.claims(neighborhood)

        hard = {(track, tape) for track, tape, is_hard in claims if is_hard}
        if len(hard) == 1:
            track, tape = hard.pop()

            return SignalSymbol(track, tape, read_only)

        if len(hard) > 1:
            return SignalSymbol(Signal.Eraser, None, read_only)

        if len(claims) > 0:
            return SignalSymbol(Signal.Background, None, read_only)

        cell  = neighborhood[c]
        track = self.static(neighborhood[c - 1], cell, neighborhood[c + 1])
        if track is None:
            return SignalSymbol(Signal.Eraser, None, read_only)

        return SignalSymbol(track, cell.tape, read_only)

def compile_signal_ca(machine):
    """Compiles a machine into its signal automaton.

    Parameters
    ----------
    machine : :class:`~.TuringMachine`
        The machine.

    Returns
    -------
    :class:`SignalRule`
        The local rule, of radius 3, over a :class:`SignalAlphabet`.
    """

    rule = SignalRule(machine)

    logger.info("Compiled %r into a signal automaton over %d symbols", machine, rule.alphabet.size)

    return rule
