"""Checks of the signal automaton: conservation, geometry and fidelity."""

import collections
import itertools
import logging

from .. import util
from ..enums import Arrow, Signal
from ..errors import PreconditionError
from ..automata import apply_step
from .turing import FILLER, simulate_tm
from .signal import SignalSymbol, compile_signal_ca
from .proof import build_proof_config, expected_events, initialized_segment, w_hat

__all__ = [
    "ConservationReport",
    "GeometryRow",
    "FidelityReport",
    "representatives",
    "scan_conservation",
    "scan_e_permanence",
    "verify_geometry",
    "find_w_hat",
    "head_trace",
    "verify_fidelity",
]

logger = logging.getLogger(__name__)

class ConservationReport(collections.namedtuple("ConservationReport", "holds checked violations")):
    """The result of :func:`scan_conservation`.

    Parameters
    ----------
    holds : :class:`bool`
        Whether no clause creates ``S1`` or ``S2`` from nothing.
    checked : :class:`int`
        The number of clause table entries checked.
    violations : :class:`tuple`
        Descriptions of the offending entries.
    """

    __slots__ = ()

class GeometryRow(collections.namedtuple("GeometryRow", "n event time coordinate expected observed error")):
    """One checked event of :func:`verify_geometry`."""

    __slots__ = ()

    @property
    def passed(self):
        return self.error is None and self.expected == self.observed

    def describe(self):
        if self.error is not None:
            return f"n={self.n} error: {self.error}"

        verdict = "pass" if self.passed else "FAIL"

        return f"n={self.n} t={self.time} c={self.coordinate} {self.event}: {verdict}"

class FidelityReport(collections.namedtuple("FidelityReport", "passed steps mismatch")):
    """The result of :func:`verify_fidelity`.

    Parameters
    ----------
    passed : :class:`bool`
        Whether the automaton followed the machine.
    steps : :class:`int`
        The number of machine steps compared.
    mismatch : :class:`tuple` or ``None``
        ``(step, expected, observed)`` at the first difference.
    """

    __slots__ = ()

def representatives(rule):
    """Gets one symbol of each kind of the rule's alphabet.

    Movers, collisions and statics only look at the kind of a cell,
    so these symbols stand for the whole alphabet in clause scans.
    """

    machine = rule.machine

    reps  = [SignalSymbol(signal, None, FILLER) for signal in Signal]
    reps += [SignalSymbol(arrow, "1", FILLER) for arrow in (Arrow.Left, Arrow.Right)]
    reps += [SignalSymbol(machine.initial, "1", FILLER), SignalSymbol(machine.final1, "1", FILLER)]

    return reps

def _tape_representatives(rule):
    # Heads also read the tape symbol of their neighbors
    reps = [SignalSymbol(signal, None, FILLER) for signal in Signal]
    for arrow in (Arrow.Left, Arrow.Right):
        reps += [SignalSymbol(arrow, g, FILLER) for g in rule.machine.tape_symbols]

    reps.append(SignalSymbol(rule.machine.initial, "1", FILLER))

    return reps

def scan_conservation(rule):
    """Checks exhaustively that ``S1`` and ``S2`` are never created.

    A cell becomes ``S1`` only through the claim of an ``S1`` one cell
    to its left, and ``S2`` only through an ``S2`` two cells to its left.
    Since the rule's output is always one of the claims, ``B``, ``E``
    or the cell's own symbol, checking every entry of the mover,
    collision and head tables and the static rule suffices.

    Parameters
    ----------
    rule : :class:`~.SignalRule`
        The compiled rule.

    Returns
    -------
    :class:`ConservationReport`
        The result of the scan.
    """

    conserved = {Signal.S1: 1, Signal.S2: 2}

    reps       = representatives(rule)
    violations = []
    checked    = 0

    for left in reps + [None]:
        for cells in itertools.product(reps, repeat=4):
            for offset, track, _, _ in rule.mover_claims(left, cells):
                checked += 1

                if track in conserved and (cells[0].track != track or offset != conserved[track]):
                    violations.append(("mover", left, cells, offset, track))

    for left, right in itertools.product(reps, repeat=2):
        for offset, track, _, _ in rule.collision_claims(left, right):
            checked += 1

            if track in conserved:
                violations.append(("collision", left, right, offset, track))

    tape_reps = _tape_representatives(rule)
    heads     = [s for s in rule.alphabet if s.is_head]
    for head in heads:
        for left, right in itertools.product(tape_reps, repeat=2):
            for offset, track, _, _ in rule.head_claims(left, head, right):
                checked += 1

                if track in conserved:
                    violations.append(("head", left, head, right, offset, track))

    for triple in itertools.product(reps, repeat=3):
        checked += 1

        if rule.static(*triple) in conserved:
            violations.append(("static",) + triple)

    logger.info("Conservation scan checked %d entries, %d violations", checked, len(violations))

    return ConservationReport(len(violations) == 0, checked, tuple(violations))

def scan_e_permanence(rule):
    """Checks that an ``E`` at ``p`` is followed by an ``E`` at ``p + 2``.

    The rule is evaluated on every neighborhood built from
    :func:`representatives` with ``E`` two cells left of its center.
    Nothing in the rule singles out ``E``, so this checks that its
    claim wins over, or conflicts with, everything else.

    Returns
    -------
    :class:`bool`
        Whether every such neighborhood yields ``E``.
    """

    reps   = representatives(rule)
    eraser = SignalSymbol(Signal.Eraser, None, FILLER)

    for left in reps:
        for right in itertools.product(reps, repeat=5):
            if rule.program((left, eraser) + right).track != Signal.Eraser:
                logger.info("Eraser lost in %r", (left, eraser) + right)

                return False

    return True

def verify_geometry(rule, w, m, n_values, *, u=(), v=()):
    """Checks the collisions of proof configurations for several ``n``.

    Parameters
    ----------
    rule : :class:`~.SignalRule`
        The compiled rule.
    w : :class:`tuple`
        The input word.
    m : :class:`int`
        The number of dollars.
    n_values : iterable of :class:`int`
        The values of ``n`` to check.
    u, v : :class:`tuple`, optional
        Words around ``w~``.

    Returns
    -------
    :class:`list` of :class:`GeometryRow`
        One row per event and ``n``, or one row with an error
        when a configuration cannot be built.
    """

    rows = []
    for n in n_values:
        try:
            configuration = build_proof_config(rule.alphabet, w, m, n, u=u, v=v)
        except PreconditionError as e:
            rows.append(GeometryRow(n, None, None, None, None, None, str(e)))
            continue

        events = {event.time: event for event in expected_events(n, initial=rule.machine.initial)}

        for t in range(max(events) + 1):
            event = events.get(t)
            if event is not None:
                rows.append(GeometryRow(
                    n, event.name, event.time, event.coordinate,
                    event.pattern, event.observe(configuration), None,
                ))

            configuration = apply_step(rule, configuration)

        logger.debug("Checked geometry for n=%d", n)

    return rows

def find_w_hat(rule, configuration, w, horizon):
    """Finds when the acceptance word of ``w`` first shows at the origin.

    Returns
    -------
    :class:`int` or ``None``
        The first time up to ``horizon``, if any.
    """

    target = w_hat(rule.alphabet, w)

    for t in range(horizon + 1):
        if configuration.window(0, len(target) - 1) == target:
            return t

        if t < horizon:
            configuration = apply_step(rule, configuration)

    return None

def head_trace(configuration, start, stop):
    """Gets the ``(state, position)`` of every head in ``[start, stop]``."""

    return [(configuration[i].track, i) for i in configuration.find(lambda s: s.is_head, start, stop)]

def verify_fidelity(machine, read_only, read_write, *, max_steps=10_000, rule=None):
    """Checks that the automaton moves its head exactly like the machine.

    The automaton starts from :func:`~.initialized_segment`. At each
    step the only head must have the machine's state and position, and
    once the machine halts the simulated tape must hold its tape.

    Parameters
    ----------
    machine : :class:`~.TuringMachine`
        The machine.
    read_only, read_write : :class:`tuple`
        The machine's input.
    max_steps : :class:`int`
        The step budget of the machine.
    rule : :class:`~.SignalRule`, optional
        The compiled rule, compiled from ``machine`` if not given.

    Returns
    -------
    :class:`FidelityReport`
        The comparison.
    """

    rule   = util.default(rule, compile_signal_ca(machine))
    report = simulate_tm(machine, read_only, read_write, max_steps, trace=True)

    configuration = initialized_segment(rule.alphabet, tuple(read_only), tuple(read_write))
    for step, state, head in report.trace:
        observed = head_trace(configuration, configuration.offset, configuration.end)

        if observed != [(state, head)]:
            return FidelityReport(False, step, (step, [(state, head)], observed))

        if step < report.steps:
            configuration = apply_step(rule, configuration)

    tape     = [configuration[i].tape for i in range(len(report.read_write))]
    expected = list(report.read_write)
    if tape != expected:
        return FidelityReport(False, report.steps, (report.steps, expected, tape))

    return FidelityReport(True, report.steps, None)
