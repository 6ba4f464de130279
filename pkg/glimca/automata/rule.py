"""Local rules of one-dimensional cellular automata."""

import abc
import functools
import logging
import numpy as np

from .. import util
from ..limits import DENSE_TABLE_CAP
from ..errors import AlphabetError, HorizonError
from .alphabet import Alphabet

__all__ = [
    "BINARY",
    "LocalRule",
    "TableRule",
    "ProgramRule",
]

logger = logging.getLogger(__name__)

#: The alphabet ``{0, 1}`` used by the builtin rules by default.
BINARY = Alphabet("01")

class LocalRule(abc.ABC):
    """A local rule ``F: A^(2r+1) -> A``.

    A local rule determines the cellular automaton ``f`` by
    ``f(x)_i = F(x_(i-r) ... x_(i+r))``. Rules are immutable.

    Parameters
    ----------
    alphabet : :class:`~.Alphabet`
        The alphabet the rule acts on.
    radius : :class:`int`
        The radius of the rule's neighborhood.
    name : :class:`str`, optional
        A name used in reports. Defaults to the name of the class.

    Raises
    ------
    :exc:`ValueError`
        If ``radius`` is negative.
    """

    #: The name the rule is found by with :meth:`from_builtin`, if any.
    builtin_name = None

    def __init__(self, alphabet, radius, *, name=None):
        if radius < 0:
            raise ValueError(f"Radius must be non-negative, got {radius}")

        self.alphabet = alphabet
        self.radius   = radius
        self.name     = util.default(name, type(self).__name__)

        self._iterated = functools.lru_cache(maxsize=2**16)(self._iterate)

    @property
    def diameter(self):
        """The size ``2r+1`` of the rule's neighborhood."""

        return 2 * self.radius + 1

    @abc.abstractmethod
    def local(self, neighborhood):
        """Applies the rule to a neighborhood.

        Parameters
        ----------
        neighborhood : :class:`tuple`
            The ``2r+1`` symbols around a cell, leftmost first.

        Returns
        -------
        any
            The cell's next symbol.
        """

        raise NotImplementedError

    def __call__(self, neighborhood):
        neighborhood = tuple(neighborhood)

        if len(neighborhood) != self.diameter:
            raise ValueError(f"Neighborhood must have {self.diameter} symbols, got {len(neighborhood)}")

        return self.local(neighborhood)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name!r} r={self.radius} |A|={self.alphabet.size}>"

    def table(self):
        """Gets the dense table of the rule, if it has one.

        Returns
        -------
        :class:`numpy.ndarray` or ``None``
            The output index for every neighborhood code, see :meth:`TableRule.code`.
        """

        return None

    def image_word(self, word):
        """Applies the rule to every full neighborhood of a word.

        Parameters
        ----------
        word : :class:`tuple`
            The word, of length at least ``2r+1``.

        Returns
        -------
        :class:`tuple`
            The ``len(word) - 2r`` symbols determined by ``word``.

        Raises
        ------
        :exc:`~.HorizonError`
            If ``word`` is shorter than the neighborhood.
        """

        word = tuple(word)
        if len(word) < self.diameter:
            raise HorizonError(f"Word of length {len(word)} is shorter than the neighborhood ({self.diameter})")

        d = self.diameter

        return tuple(self.local(word[i:i + d]) for i in range(len(word) - d + 1))

    def cyclic_image(self, word):
        """Applies the rule to a word read cyclically.

        Parameters
        ----------
        word : :class:`tuple`
            A nonempty word, standing for the periodic point it repeats.

        Returns
        -------
        :class:`tuple`
            The image word, of the same length.
        """

        word = tuple(word)
        p    = len(word)
        r    = self.radius

        # Repeat enough times for radii larger than the period
        reps     = r // p + 1
        extended = word * (2 * reps + 1)
        start    = reps * p - r

        return tuple(self.local(extended[start + i:start + i + self.diameter]) for i in range(p))

    def _iterate(self, neighborhood, steps):
        word = neighborhood
        for _ in range(steps):
            word = self.image_word(word)

        return word[0]

    def iterated(self, neighborhood, steps):
        """Applies the local rule of ``f^steps`` to a neighborhood.

        Parameters
        ----------
        neighborhood : :class:`tuple`
            The ``2*r*steps + 1`` symbols around a cell.
        steps : :class:`int`
            The number of steps, at least 1.

        Returns
        -------
        any
            The cell's symbol after ``steps`` steps.
        """

        neighborhood = tuple(neighborhood)
        if len(neighborhood) != 2 * self.radius * steps + 1:
            raise ValueError(f"Neighborhood for {steps} steps must have {2 * self.radius * steps + 1} symbols")

        if steps == 0:
            return neighborhood[0]

        return self._iterated(neighborhood, steps)

    def power(self, steps):
        """Gets the local rule of ``f^steps``.

        Parameters
        ----------
        steps : :class:`int`
            The number of steps, at least 1.

        Returns
        -------
        :class:`LocalRule`
            A :class:`TableRule` when the table fits
            :data:`~.DENSE_TABLE_CAP`, else a :class:`ProgramRule`.
        """

        if steps < 1:
            raise ValueError(f"Power must be positive, got {steps}")

        if steps == 1:
            return self

        return LocalRule.from_function(
            self.alphabet,
            self.radius * steps,
            functools.partial(self._iterate, steps=steps),

            name = f"{self.name}^{steps}",
        )

    @classmethod
    def from_function(cls, alphabet, radius, function, *, name=None):
        """Makes a rule from a Python function.

        Parameters
        ----------
        alphabet : :class:`~.Alphabet`
            The alphabet of the rule.
        radius : :class:`int`
            The radius of the rule.
        function : callable
            Maps neighborhood tuples to symbols.
        name : :class:`str`, optional
            The name of the rule.

        Returns
        -------
        :class:`LocalRule`
            A :class:`TableRule` if the table has at most
            :data:`~.DENSE_TABLE_CAP` entries, else a :class:`ProgramRule`.
        """

        if alphabet.size ** (2 * radius + 1) <= DENSE_TABLE_CAP:
            return TableRule.tabulate(alphabet, radius, function, name=name)

        return ProgramRule(alphabet, radius, function, name=name)

    @classmethod
    def from_builtin(cls, name, *args, alphabet=None):
        """Gets a builtin rule by name.

        Parameters
        ----------
        name : :class:`str`
            The builtin name, e.g. ``"min"`` or ``"shift"``.
        *args
            Extra parameters for the builtin, e.g. the
            rule number of ``"elementary"``.
        alphabet : :class:`~.Alphabet`, optional
            The alphabet, defaulting to :data:`BINARY`.

        Returns
        -------
        :class:`LocalRule`
            The builtin rule.

        Raises
        ------
        :exc:`ValueError`
            If there is no builtin named ``name``.

        Examples
        --------
        >>> import glimca
        >>> rule = glimca.LocalRule.from_builtin("min")
        >>> rule(("1", "0", "1"))
        '0'
        """

        for rule_cls in util.get_subclasses(LocalRule):
            if rule_cls.builtin_name == name:
                return rule_cls(*args, alphabet=alphabet)

        raise ValueError(f"No builtin rule named {name!r}")

class TableRule(LocalRule):
    """A local rule stored as a dense table.

    Neighborhoods are numbered by their symbol indices, leftmost
    symbol most significant, which is the lexicographic order of
    :meth:`~.Alphabet.words`.

    Parameters
    ----------
    alphabet : :class:`~.Alphabet`
        The alphabet of the rule.
    radius : :class:`int`
        The radius of the rule.
    table : sequence of :class:`int`
        The output symbol index for each neighborhood code.
    name : :class:`str`, optional
        The name of the rule.

    Raises
    ------
    :exc:`ValueError`
        If the table has the wrong size or an out-of-range entry.
    """

    def __init__(self, alphabet, radius, table, *, name=None):
        super().__init__(alphabet, radius, name=name)

        expected = alphabet.size ** self.diameter
        if expected > DENSE_TABLE_CAP:
            raise ValueError(f"Dense table of {expected} entries exceeds cap {DENSE_TABLE_CAP}")

        table = np.asarray(table, dtype=np.int64)
        if table.shape != (expected,):
            raise ValueError(f"Table must have {expected} entries, got shape {table.shape}")

        if table.size > 0 and (table.min() < 0 or table.max() >= alphabet.size):
            raise ValueError("Table entries must be symbol indices")

        self._table = table
        self._table.setflags(write=False)

    @classmethod
    def tabulate(cls, alphabet, radius, function, *, name=None):
        """Makes a :class:`TableRule` by evaluating a function on every neighborhood."""

        entries = []
        for neighborhood in alphabet.words(2 * radius + 1):
            symbol = function(neighborhood)
            if symbol not in alphabet:
                raise AlphabetError(f"Rule produced {symbol!r}, which is not in {alphabet!r}")

            entries.append(alphabet.index(symbol))

        return cls(alphabet, radius, entries, name=name)

    def __eq__(self, other):
        if not isinstance(other, TableRule):
            return NotImplemented

        return (
            self.alphabet == other.alphabet and
            self.radius   == other.radius   and
            np.array_equal(self._table, other._table)
        )

    def __hash__(self):
        return hash((self.alphabet, self.radius, self._table.tobytes()))

    def table(self):
        return self._table

    def code(self, neighborhood):
        """Gets the table index of a neighborhood."""

        code = 0
        for symbol in neighborhood:
            code = code * self.alphabet.size + self.alphabet.index(symbol)

        return code

    def local(self, neighborhood):
        return self.alphabet.symbols[self._table[self.code(neighborhood)]]

    def step_indices(self, states):
        """Steps arrays of cyclic configurations.

        Parameters
        ----------
        states : :class:`numpy.ndarray`
            Symbol indices, cyclic along the last axis.

        Returns
        -------
        :class:`numpy.ndarray`
            The image configurations, with the same shape.
        """

        codes = np.zeros(states.shape, dtype=np.int64)
        for k in range(self.diameter):
            codes = codes * self.alphabet.size + np.roll(states, self.radius - k, axis=-1)

        return self._table[codes]

class ProgramRule(LocalRule):
    """A local rule given by a Python function.

    Used when a dense table would be too large. Evaluations
    are memoised per neighborhood.

    Parameters
    ----------
    alphabet : :class:`~.Alphabet`
        The alphabet of the rule.
    radius : :class:`int`
        The radius of the rule.
    program : callable
        Maps neighborhood tuples to symbols of ``alphabet``.
    name : :class:`str`, optional
        The name of the rule.
    cache_size : :class:`int`, optional
        How many neighborhoods to memoise.
    """

    def __init__(self, alphabet, radius, program, *, name=None, cache_size=2**20):
        super().__init__(alphabet, radius, name=name)

        self.program = program
        self._cached = functools.lru_cache(maxsize=cache_size)(self._evaluate)

    def _evaluate(self, neighborhood):
        symbol = self.program(neighborhood)

        if symbol not in self.alphabet:
            raise AlphabetError(f"Rule produced {symbol!r}, which is not in the rule's alphabet")

        return symbol

    def local(self, neighborhood):
        return self._cached(neighborhood)
