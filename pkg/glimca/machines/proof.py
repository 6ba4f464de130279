"""Initial configurations of the signal automaton and the events they produce."""

import collections

from ..enums import Arrow, Signal
from ..errors import AlphabetError, PreconditionError
from ..automata import Configuration
from .turing import FILLER
from .sigma3 import DOLLAR, SEPARATOR, machine_input
from .signal import SignalSymbol

__all__ = [
    "Event",
    "build_proof_config",
    "expected_events",
    "initialized_segment",
    "w_hat",
]

class Event(collections.namedtuple("Event", "name time coordinate start pattern")):
    """A local pattern expected at some time.

    Parameters
    ----------
    name : :class:`str`
        What happens.
    time : :class:`int`
        When it happens.
    coordinate : :class:`int`
        Where the event is reported.
    start : :class:`int`
        The coordinate of the first cell of ``pattern``.
    pattern : :class:`tuple`
        ``(track, tape)`` for each cell, ``tape`` being ``None`` for signals.
    """

    __slots__ = ()

    def observe(self, configuration):
        """Gets the ``(track, tape)`` pairs of a configuration where the pattern should be."""

        return tuple(
            (configuration[i].track, configuration[i].tape)
            for i in range(self.start, self.start + len(self.pattern))
        )

def _background(read_only=FILLER):
    return SignalSymbol(Signal.Background, None, read_only)

def _signal(signal, read_only=FILLER):
    return SignalSymbol(signal, None, read_only)

def _check_letters(alphabet, w):
    letters = set(alphabet.machine.input_alphabet) - {SEPARATOR, DOLLAR}
    for letter in w:
        if letter not in letters:
            raise AlphabetError(f"{letter!r} is not an input letter")

def build_proof_config(alphabet, w, m, n, *, u=(), v=()):
    """Builds the configuration that makes the automaton run the machine on ``(w, m, n)``.

    The word ``u w~ v`` sits with ``w~`` starting at the origin, where
    ``w~`` is ``E^(|w|+m+3)`` over the read-only track ``#w#$^m#``.
    Left of ``u`` are ``S1 S2 E`` at ``[-n+2, -n+4]`` and ``S2`` at ``-2n+2``,
    on background ``B``. Right of ``v`` every cell is ``E``.

    Parameters
    ----------
    alphabet : :class:`~.SignalAlphabet`
        The automaton's alphabet.
    w : :class:`tuple`
        The input word.
    m : :class:`int`
        The number of dollars.
    n : :class:`int`
        The time parameter, greater than ``len(u) + 4``.
    u, v : :class:`tuple`, optional
        Arbitrary words of the automaton placed around ``w~``.

    Returns
    -------
    :class:`~.Configuration`
        A two-sided configuration.

    Raises
    ------
    :exc:`~.PreconditionError`
        If ``n <= len(u) + 4``.
    """

    u = alphabet.check_word(u)
    v = alphabet.check_word(v)
    _check_letters(alphabet, w)

    if n <= len(u) + 4:
        raise PreconditionError(f"n must exceed |u| + 4 = {len(u) + 4}, got {n}")

    read_only, _ = machine_input(w, m, n)
    w_tilde      = tuple(_signal(Signal.Eraser, a) for a in read_only)

    start = -2 * n + 2
    left  = [_background()] * (-len(u) - start)

    def place(coordinate, signal):
        left[coordinate - start] = _signal(signal)

    place(start,      Signal.S2)
    place(-n + 2,     Signal.S1)
    place(-n + 3,     Signal.S2)
    place(-n + 4,     Signal.Eraser)

    return Configuration.two_sided(
        (_background(),),
        tuple(left) + u + w_tilde + v,
        (_signal(Signal.Eraser),),

        offset = start,
    )

def expected_events(n, *, initial="q0"):
    """Gets the collisions a proof configuration must produce.

    Parameters
    ----------
    n : :class:`int`
        The time parameter of the configuration.
    initial : :class:`str`
        The initial state of the machine.

    Returns
    -------
    :class:`list` of :class:`Event`
        ``S2`` meets ``S1`` at time ``n``, leaving ``|- (q0,1) (<-,1) S3``
        on ``[-1, 2]``, and ``S3`` meets ``S2`` at time ``2n+1``, leaving
        ``S2'`` at ``3n+5`` behind a tape of ``1^(3n+5)``.

    Examples
    --------
    >>> import glimca
    >>> [(e.time, e.coordinate) for e in glimca.expected_events(6)]
    [(6, 2), (13, 23)]
    """

    return [
        Event(
            "S1xS2 collision", n, 2, -1,

            (
                (Signal.Turnstile, None),
                (initial,          "1"),
                (Arrow.Left,       "1"),
                (Signal.S3,        None),
            ),
        ),

        Event("S3xS2 collision", 2 * n + 1, 3 * n + 5, 3 * n + 5, ((Signal.S2Prime, None),)),
    ]

def initialized_segment(alphabet, read_only, read_write):
    """Builds a configuration holding the machine ready to run.

    This is what a proof configuration looks like right after its
    first collision, without the signals that lay the tape.

    Parameters
    ----------
    alphabet : :class:`~.SignalAlphabet`
        The automaton's alphabet.
    read_only : :class:`tuple`
        The read-only tape, continued by ``#``.
    read_write : :class:`tuple`
        The nonempty read-write tape. It is continued by blanks laid by ``S2'``.

    Returns
    -------
    :class:`~.Configuration`
        ``|-`` at -1, the head in the initial state at 0, arrows
        up to the end of ``read_write``, then ``S2'`` and erasers.
    """

    read_write = tuple(read_write)
    if len(read_write) == 0:
        raise PreconditionError("The read-write tape must be nonempty")

    machine = alphabet.machine

    def ro(i):
        return read_only[i] if i < len(read_only) else FILLER

    center = [_signal(Signal.Turnstile)]
    center.append(SignalSymbol(machine.initial, read_write[0], ro(0)))
    center.extend(SignalSymbol(Arrow.Left, read_write[i], ro(i)) for i in range(1, len(read_write)))

    end = len(read_write)
    center.append(_signal(Signal.S2Prime, ro(end)))

    # Erasers ahead of S2' keep its path clear
    tail = tuple(_signal(Signal.Eraser, ro(i)) for i in range(end + 1, max(end + 1, len(read_only))))

    return Configuration.two_sided(
        (_background(),),
        tuple(alphabet.check_word(center)) + tail,
        (_signal(Signal.Eraser),),

        offset = -1,
    )

def w_hat(alphabet, w):
    """Gets the word showing that the machine accepted ``w``.

    Returns
    -------
    :class:`tuple`
        ``(qf2, 0, #)`` followed by ``(<-, 0, a)`` for each letter ``a``
        of ``w`` and ``(<-, 0, #)``.
    """

    _check_letters(alphabet, w)
    if len(w) == 0:
        raise PreconditionError("w must be nonempty")

    machine = alphabet.machine

    return (
        (SignalSymbol(machine.final2, "0", SEPARATOR),) +
        tuple(SignalSymbol(Arrow.Left, "0", a) for a in w) +
        (SignalSymbol(Arrow.Left, "0", SEPARATOR),)
    )
