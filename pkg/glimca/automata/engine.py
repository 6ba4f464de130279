"""Running cellular automata on configurations, words and cylinders."""

import itertools
import logging
import numpy as np

from .. import util
from .. import limits
from ..errors import BudgetExceeded, HorizonError
from .configuration import Configuration
from .diagram import SpacetimeDiagram
from .wordset import WordSet

__all__ = [
    "apply_step",
    "run",
    "run_word",
    "determined_image",
    "cylinder_image_set",
    "image_sets",
    "brute_force_image_set",
]

logger = logging.getLogger(__name__)

def _step_cyclic(rule, period):
    table = rule.table()
    if table is None:
        return rule.cyclic_image(period)

    states = np.array(rule.alphabet.encode(period), dtype=np.int64)

    return rule.alphabet.decode(rule.step_indices(states))

def apply_step(rule, configuration):
    """Applies one step of a cellular automaton.

    Parameters
    ----------
    rule : :class:`~.LocalRule`
        The local rule of the automaton.
    configuration : :class:`~.Configuration`
        The configuration to step.

    Returns
    -------
    :class:`~.Configuration`
        The image configuration. The image of a cyclic configuration
        is cyclic with the same period. The image of a two-sided
        configuration has backgrounds with the same periods and a
        center grown by at most the radius on each side.

    Raises
    ------
    :exc:`~.AlphabetError`
        If the configuration uses a symbol outside the rule's alphabet.

    Examples
    --------
    >>> import glimca
    >>> rule = glimca.LocalRule.from_builtin("min")
    >>> glimca.apply_step(rule, glimca.Configuration.cyclic("0101")).period
    ('0', '0', '0', '0')
    """

    configuration.check_alphabet(rule.alphabet)

    if configuration.is_cyclic:
        return Configuration.cyclic(_step_cyclic(rule, configuration.period))

    r     = rule.radius
    start = configuration.offset - r
    stop  = configuration.end + r

    center = tuple(
        rule.local(configuration.window(i - r, i + r))
        for i in range(start, stop)
    )

    # Background images, re-anchored at the grown center
    left  = util.rotate_word(rule.cyclic_image(configuration.left), -r)
    right = util.rotate_word(rule.cyclic_image(configuration.right), r)

    return Configuration.two_sided(left, center, right, start).normalized()

def _default_window(configuration):
    if configuration.is_cyclic:
        return (0, len(configuration.period) - 1)

    return (configuration.offset, max(configuration.offset, configuration.end - 1))

def _check_run_budget(window, steps, cap):
    a, b  = window
    cells = (b - a + 1) * (steps + 1)

    if cells > limits.enumeration_cap(cap):
        raise BudgetExceeded("spacetime cells", cells, limits.enumeration_cap(cap))

def run(rule, configuration, steps, window=None, *, cap=None):
    """Runs a cellular automaton and records a window of each step.

    Parameters
    ----------
    rule : :class:`~.LocalRule`
        The local rule of the automaton.
    configuration : :class:`~.Configuration`
        The initial configuration.
    steps : :class:`int`
        How many steps to run.
    window : :class:`tuple`, optional
        The inclusive range of cells ``(a, b)`` to record. Defaults to
        the period of a cyclic configuration, or the center of a
        two-sided one.
    cap : :class:`int`, optional
        The largest number of recorded cells allowed.

    Returns
    -------
    :class:`~.SpacetimeDiagram`
        The diagram, row ``t`` being the window of ``f^t(x)``.

    Raises
    ------
    :exc:`~.BudgetExceeded`
        If the diagram would have more than ``cap`` cells.
    :exc:`~.AlphabetError`
        If the configuration uses a symbol outside the rule's alphabet.
    """

    if steps < 0:
        raise ValueError(f"Steps must be non-negative, got {steps}")

    window = util.default(window, _default_window(configuration))
    a, b   = window

    if b < a:
        raise ValueError(f"Invalid window [{a}, {b}]")

    _check_run_budget(window, steps, cap)
    configuration.check_alphabet(rule.alphabet)

    rows = []
    if configuration.is_cyclic and rule.table() is not None:
        alphabet = rule.alphabet
        states   = np.array(alphabet.encode(configuration.period), dtype=np.int64)
        cells    = np.arange(a, b + 1) % len(configuration.period)

        for t in range(steps + 1):
            rows.append(alphabet.decode(states[cells]))

            if t < steps:
                states = rule.step_indices(states)
    else:
        current = configuration
        for t in range(steps + 1):
            rows.append(current.window(a, b))

            if t < steps:
                current = apply_step(rule, current)

    logger.debug("Ran %s for %d steps on window [%d, %d]", rule.name, steps, a, b)

    return SpacetimeDiagram(rule.alphabet, rows, window)

def run_word(rule, word, steps, window=None, *, cap=None):
    """Runs a cellular automaton on a finite word.

    The word sits on the cells ``[0, len(word))`` and every other cell
    is unknown, so row ``t`` is only determined on ``[r*t, len(word) - r*t)``.

    Parameters
    ----------
    rule : :class:`~.LocalRule`
        The local rule of the automaton.
    word : :class:`tuple`
        The known cells.
    steps : :class:`int`
        How many steps to run.
    window : :class:`tuple`, optional
        The inclusive range of cells to record, defaulting to the word.
    cap : :class:`int`, optional
        The largest number of recorded cells allowed.

    Returns
    -------
    :class:`~.SpacetimeDiagram`
        The diagram, with undetermined cells set to ``None``.
    """

    word   = rule.alphabet.check_word(word)
    window = util.default(window, (0, max(0, len(word) - 1)))
    a, b   = window
    r      = rule.radius

    _check_run_budget(window, steps, cap)

    rows    = []
    current = word
    for t in range(steps + 1):
        lo = r * t
        rows.append(tuple(
            current[i - lo] if lo <= i < lo + len(current) else None
            for i in range(a, b + 1)
        ))

        if t < steps:
            current = rule.image_word(current) if len(current) >= rule.diameter else ()

    return SpacetimeDiagram(rule.alphabet, rows, window)

def determined_image(rule, word, steps):
    """Gets the part of ``f^steps([w]_0)`` that ``w`` determines.

    Parameters
    ----------
    rule : :class:`~.LocalRule`
        The local rule of the automaton.
    word : :class:`tuple`
        The word, of length greater than ``2 * r * steps``.
    steps : :class:`int`
        The number of steps.

    Returns
    -------
    :class:`tuple`
        The word of length ``len(word) - 2 * r * steps`` found at
        coordinate ``r * steps`` of every image.

    Raises
    ------
    :exc:`~.HorizonError`
        If ``word`` is too short.

    Examples
    --------
    >>> import glimca
    >>> rule = glimca.LocalRule.from_builtin("shift")
    >>> glimca.determined_image(rule, tuple("0110"), 1)
    ('1', '0')
    """

    word = rule.alphabet.check_word(word)
    if len(word) <= 2 * rule.radius * steps:
        raise HorizonError(
            f"Word of length {len(word)} determines nothing after {steps} steps of radius {rule.radius}"
        )

    for _ in range(steps):
        word = rule.image_word(word)

    return word

def _cylinder_choices(rule, cylinder, start, stop):
    rule.alphabet.check_word(cylinder.word)

    choices = []
    for i in range(start, stop + 1):
        symbol = cylinder.symbol_at(i)
        choices.append(rule.alphabet.symbols if symbol is None else (symbol,))

    return choices

def image_sets(rule, cylinder, horizon, window, *, cap=None):
    """Iterates the exact images of a cylinder on a window.

    Parameters
    ----------
    rule : :class:`~.LocalRule`
        The local rule of the automaton.
    cylinder : :class:`~.Cylinder`
        The cylinder to evolve.
    horizon : :class:`int`
        The last time step.
    window : :class:`tuple`
        The inclusive range of cells ``(a, b)`` to watch.
    cap : :class:`int`, optional
        The largest automaton layer allowed.

    Yields
    ------
    :class:`tuple`
        ``(t, words, offset)`` for ``t`` from 0 to ``horizon``, where ``words``
        is a :class:`~.WordSet` whose factors at ``offset`` of length
        ``b - a + 1`` are exactly the words of ``f^t([cylinder])`` on the window.

    Raises
    ------
    :exc:`~.BudgetExceeded`
        If the automaton grows past ``cap``. The exception's ``horizon``
        is the step where that happened.
    """

    a, b  = window
    r     = rule.radius
    reach = r * horizon

    words = WordSet.product(rule.alphabet, _cylinder_choices(rule, cylinder, a - reach, b + reach))
    for t in range(horizon + 1):
        yield t, words, r * (horizon - t)

        if t < horizon:
            try:
                words = words.image(rule, cap=cap)
            except BudgetExceeded as e:
                e.horizon = t + 1
                raise

def cylinder_image_set(rule, cylinder, steps, window, *, cap=None):
    """Gets the exact set ``{f^t(x) on [a, b] : x in cylinder}``.

    Parameters
    ----------
    rule : :class:`~.LocalRule`
        The local rule of the automaton.
    cylinder : :class:`~.Cylinder`
        The cylinder.
    steps : :class:`int`
        The number of steps.
    window : :class:`tuple`
        The inclusive range of cells ``(a, b)``.
    cap : :class:`int`, optional
        The largest intermediate automaton layer, and the
        largest result, allowed.

    Returns
    -------
    :class:`set`
        The image words.

    Raises
    ------
    :exc:`~.BudgetExceeded`
        If exactness is unavailable within ``cap``.

    Examples
    --------
    >>> import glimca
    >>> rule = glimca.LocalRule.from_builtin("min")
    >>> sorted(glimca.cylinder_image_set(rule, glimca.Cylinder("0", 0), 2, (0, 0)))
    [('0',)]
    """

    a, b = window
    if b < a:
        raise ValueError(f"Invalid window [{a}, {b}]")

    for t, words, offset in image_sets(rule, cylinder, steps, window, cap=cap):
        if t == steps:
            result = words.window(offset, b - a + 1)

    size = len(result)
    if size > limits.enumeration_cap(cap):
        raise BudgetExceeded("image words", size, limits.enumeration_cap(cap), horizon=steps)

    return set(result)

def brute_force_image_set(rule, cylinder, steps, window, *, cap=None):
    """Computes :func:`cylinder_image_set` by trying every completion.

    Only practical for small cases; used to check the exact computation.
    """

    a, b  = window
    reach = rule.radius * steps

    choices = _cylinder_choices(rule, cylinder, a - reach, b + reach)

    count = 1
    for c in choices:
        count *= len(c)

    if count > limits.enumeration_cap(cap):
        raise BudgetExceeded("completions", count, limits.enumeration_cap(cap), horizon=steps)

    return {determined_image(rule, word, steps) for word in itertools.product(*choices)}
