"""Builds the machine deciding a predicate of the form "for all m', exists k"."""

import collections
import logging

from .. import util
from ..enums import Move
from ..errors import PredicateRangeError
from .turing import BLANK, FILLER, TuringMachine

__all__ = [
    "INITIAL",
    "REJECT",
    "ACCEPT",
    "OUT_OF_RANGE",
    "LETTERS",
    "SEPARATOR",
    "DOLLAR",
    "build_sigma3_machine",
    "machine_input",
]

logger = logging.getLogger(__name__)

INITIAL      = "q0"
REJECT       = "qf1"
ACCEPT       = "qf2"
OUT_OF_RANGE = "out-of-range"

#: The default input letters.
LETTERS = ("a", "b")

SEPARATOR = FILLER
DOLLAR    = "$"

#: Read-write symbols: unread, read, crossed out and the left end marker.
TAPE_ALPHABET = ("0", "1", "x", "e")

# The first block of ones opens the pair (0, 0), each later block advances it
OPENING_BLOCK = 7
PAIR_BLOCK    = 3

def machine_input(w, m, n):
    """Gets the tapes the machine expects.

    Parameters
    ----------
    w : :class:`tuple`
        The word.
    m : :class:`int`
        The number of dollars.
    n : :class:`int`
        The number of pairs to enumerate.

    Returns
    -------
    :class:`tuple`
        ``(read_only, read_write)``, being ``#w#$^m#`` and ``1^(3n+5)``.
    """

    read_only  = (SEPARATOR,) + tuple(w) + (SEPARATOR,) + (DOLLAR,) * m + (SEPARATOR,)
    read_write = ("1",) * (3 * n + 5)

    return read_only, read_write

class _Sigma3Program:
    # State keys are tuples whose first item names the phase

    def __init__(self, psi, letters, max_pairs):
        self.psi       = psi
        self.letters   = tuple(letters)
        self.track     = not psi.is_constant
        self.max_pairs = max_pairs

    def step(self, key, a, g):
        return getattr(self, f"_{key[0]}")(key, a, g)

    def _reject(self, g):
        return REJECT, g, Move.Stay

    def _out_of_range(self, g):
        return ("out",), g, Move.Left

    def _start(self, key, a, g):
        if a == SEPARATOR and g == "1":
            return ("scan", "w", 1, (), 0), "e", Move.Right

        return self._reject(g)

    def _scan(self, key, a, g):
        _, phase, count, w, m = key

        if phase == "w":
            if a in self.letters:
                if self.track:
                    w = w + (a,)

                    if len(w) > self.psi.max_word:
                        return self._out_of_range(g)
            elif a == SEPARATOR:
                phase = "dollar"
            else:
                return self._reject(g)

        elif phase == "dollar":
            if a == DOLLAR:
                if self.track:
                    m += 1

                    if m > self.psi.max_m:
                        return self._out_of_range(g)
            elif a == SEPARATOR:
                phase = "done"
            else:
                return self._reject(g)

        # Counts 1 to 4 exactly, then 5, 6, 7 for the classes mod 3
        if count != "end":
            if g == "1":
                count = count + 1 if count < 7 else 5
            elif g == BLANK and count == 5:
                count = "end"
            else:
                return self._reject(g)

        if phase == "done" and count == "end":
            return ("back", w, m), g, Move.Left

        return ("scan", phase, count, w, m), g, Move.Right

    def _back(self, key, a, g):
        _, w, m = key

        if g == "e":
            return ("consume", w, m, (0, 0), OPENING_BLOCK, False), g, Move.Right

        return key, g, Move.Left

    def _advance(self, w, m, pair):
        m_prime, k = pair

        if self.psi(w, m, m_prime, k):
            m_prime, k = m_prime + 1, 0
        else:
            k += 1

        if not self.track:
            return (0, min(k, 1))

        if m_prime + k > self.max_pairs - 1:
            return None

        return (m_prime, k)

    def _consume(self, key, a, g):
        _, w, m, pair, need, opened = key

        if g == "1":
            need -= 1

            if need == 0:
                if opened:
                    pair = self._advance(w, m, pair)
                    if pair is None:
                        return self._out_of_range(g)

                opened = True
                need   = PAIR_BLOCK

            return ("consume", w, m, pair, need, opened), "x", Move.Right

        if g == BLANK:
            if pair[1] > 0:
                return self._reject(g)

            return ("seek",), g, Move.Left

        return self._reject(g)

    def _out(self, key, a, g):
        # Walks off the left edge, which faults
        return key, g, Move.Left

    def _seek(self, key, a, g):
        if g == "e":
            return ("zero",), "0", Move.Right

        return key, g, Move.Left

    def _zero(self, key, a, g):
        if a in self.letters:
            return key, "0", Move.Right

        if a == SEPARATOR:
            return ("return",), "0", Move.Left

        return self._reject(g)

    def _return(self, key, a, g):
        if a in self.letters:
            return key, g, Move.Left

        if a == SEPARATOR:
            return ACCEPT, g, Move.Stay

        return self._reject(g)

def _state_name(key):
    if isinstance(key, str):
        return key

    if key == ("start",):
        return INITIAL

    if key == ("out",):
        return OUT_OF_RANGE

    parts = []
    for part in key:
        if isinstance(part, bool):
            parts.append("open" if part else "shut")
        elif isinstance(part, tuple) and all(isinstance(x, int) for x in part) and len(part) > 0:
            parts.append(".".join(str(x) for x in part))
        elif isinstance(part, tuple):
            parts.append("".join(part) or "-")
        else:
            parts.append(str(part))

    return ":".join(parts)

def build_sigma3_machine(psi, *, letters=None, max_pairs=None):
    """Builds a machine deciding ``for all m' < n, exists k with psi(w, m, m', k)``.

    The machine reads ``#w#$^m#`` on its read-only track and ``1^(3n+5)``
    on its read-write track. It first checks both tapes, marking cell 0
    with ``e``. It then crosses out a block of 7 ones to open the pair
    ``(m', k) = (0, 0)`` and one block of 3 ones per step of the search,
    which moves to ``(m' + 1, 0)`` when ``psi`` holds and to ``(m', k + 1)``
    otherwise. So exactly ``n`` pairs are visited.

    If the search ends with ``k = 0`` the machine writes ``0`` on the
    first ``|w| + 2`` cells, returns to cell 0 and halts in :data:`ACCEPT`.
    Any malformed input, or ending with ``k > 0``, halts in :data:`REJECT`.

    A tabulated ``psi`` only covers bounded ``|w|``, ``m`` and pairs.
    Past those bounds the machine enters :data:`OUT_OF_RANGE`, which
    walks off the left edge, so :func:`~.simulate_tm` raises
    :exc:`~.MachineFault` instead of the machine answering.

    Parameters
    ----------
    psi : :class:`~.PredicateProgram`
        The predicate.
    letters : iterable of :class:`str`, optional
        The letters of ``w``, defaulting to :data:`LETTERS`.
    max_pairs : :class:`int`, optional
        For tabulated predicates, the most pairs the machine may
        visit. Defaults to what ``psi`` covers.

    Returns
    -------
    :class:`~.TuringMachine`
        The machine, with every non-final transition listed.

    Raises
    ------
    :exc:`~.PredicateRangeError`
        If a tabulated ``psi`` does not cover ``max_pairs`` pairs,
        or its letters are not ``letters``.

    Examples
    --------
    >>> import glimca
    >>> tm = glimca.build_sigma3_machine(glimca.PredicateProgram.always_true())
    >>> ro, rw = glimca.machine_input(("a", "b"), 1, 2)
    >>> glimca.simulate_tm(tm, ro, rw, 10_000).state
    'qf2'
    """

    letters = tuple(util.default(letters, LETTERS))

    for letter in letters:
        if letter in (SEPARATOR, DOLLAR, BLANK):
            raise ValueError(f"Letter {letter!r} is reserved")

    if not psi.is_constant:
        max_pairs = util.default(max_pairs, psi.max_index + 1)

        if max_pairs - 1 > psi.max_index:
            raise PredicateRangeError(f"Predicate covers indices up to {psi.max_index}, not {max_pairs - 1}")

        if set(psi.letters) != set(letters):
            raise PredicateRangeError(f"Predicate letters {psi.letters!r} differ from {letters!r}")

    program        = _Sigma3Program(psi, letters, max_pairs)
    input_alphabet = letters + (SEPARATOR, DOLLAR)
    tape_symbols   = TAPE_ALPHABET + (BLANK,)

    names       = {("start",): INITIAL}
    transitions = {}
    queue       = collections.deque([("start",)])
    while len(queue) > 0:
        key  = queue.popleft()
        name = names[key]

        for a in input_alphabet:
            for g in tape_symbols:
                new_key, write, move = program.step(key, a, g)

                if new_key not in names:
                    names[new_key] = _state_name(new_key)

                    if new_key not in (REJECT, ACCEPT):
                        queue.append(new_key)

                transitions[name, a, g] = (names[new_key], write, move)

    states = [INITIAL] + sorted(set(names.values()) - {INITIAL, REJECT, ACCEPT}) + [REJECT, ACCEPT]

    logger.info("Built machine for %r with %d states", psi, len(states))

    return TuringMachine(states, INITIAL, REJECT, ACCEPT, TAPE_ALPHABET, input_alphabet, transitions)
