"""Contains :class:`~.Configuration` and :class:`~.Cylinder`."""

import collections

from .. import util
from ..errors import AlphabetError

__all__ = [
    "Configuration",
    "Cylinder",
]

class Configuration:
    """A finitely described point of ``A^Z``.

    A configuration is either cyclic, a periodic point given by one
    period, or two-sided, a finite center between a periodic left
    background and a periodic right background. Use :meth:`cyclic`
    and :meth:`two_sided` rather than the constructor.

    Configurations compare equal when they describe the same point.
    """

    def __init__(self, *, period=None, left=None, center=None, right=None, offset=0):
        if period is not None:
            period = tuple(period)
            if len(period) == 0:
                raise ValueError("A cyclic configuration needs a nonempty period")
        else:
            left   = tuple(left)
            center = tuple(center)
            right  = tuple(right)

            if len(left) == 0 or len(right) == 0:
                raise ValueError("Backgrounds must be nonempty")

        self.period = period
        self.left   = left
        self.center = center
        self.right  = right
        self.offset = offset

    @classmethod
    def cyclic(cls, word):
        """Makes the periodic point ``...www...`` with ``w`` starting at 0.

        Examples
        --------
        >>> import glimca
        >>> c = glimca.Configuration.cyclic("01")
        >>> c[0], c[3], c[-1]
        ('0', '1', '1')
        """

        return cls(period=word)

    @classmethod
    def two_sided(cls, left, center, right, offset=0):
        """Makes the point ``...left left center right right...``.

        Parameters
        ----------
        left : :class:`tuple`
            The left background, repeated towards ``-infinity``.
        center : :class:`tuple`
            The center word, possibly empty.
        right : :class:`tuple`
            The right background, repeated towards ``+infinity``.
        offset : :class:`int`
            The coordinate of the first cell of ``center``.

        Examples
        --------
        >>> import glimca
        >>> c = glimca.Configuration.two_sided("0", "1", "0", offset=2)
        >>> [c[i] for i in range(4)]
        ['0', '0', '1', '0']
        """

        return cls(left=left, center=center, right=right, offset=offset)

    @property
    def is_cyclic(self):
        return self.period is not None

    @property
    def end(self):
        """The coordinate just right of the center, for two-sided configurations."""

        return self.offset + len(self.center)

    def symbols(self):
        """Gets the set of symbols the configuration uses."""

        if self.is_cyclic:
            return set(self.period)

        return set(self.left) | set(self.center) | set(self.right)

    def check_alphabet(self, alphabet):
        """Raises :exc:`~.AlphabetError` if a symbol is not in ``alphabet``."""

        for symbol in self.symbols():
            if symbol not in alphabet:
                raise AlphabetError(f"Configuration symbol {symbol!r} is not in {alphabet!r}")

    def __getitem__(self, index):
        if self.is_cyclic:
            return self.period[index % len(self.period)]

        if index < self.offset:
            return self.left[(index - self.offset) % len(self.left)]

        if index >= self.end:
            return self.right[(index - self.end) % len(self.right)]

        return self.center[index - self.offset]

    def window(self, start, stop):
        """Gets the word on the cells ``[start, stop]``, both inclusive."""

        return tuple(self[i] for i in range(start, stop + 1))

    def rotate(self, amount):
        """Applies ``sigma^amount``, so that ``ret[i] == self[i + amount]``."""

        if self.is_cyclic:
            return Configuration.cyclic(util.rotate_word(self.period, amount))

        return Configuration.two_sided(self.left, self.center, self.right, self.offset - amount)

    def find(self, predicate, start, stop):
        """Gets the coordinates in ``[start, stop]`` whose symbol satisfies ``predicate``."""

        return [i for i in range(start, stop + 1) if predicate(self[i])]

    def normalized(self):
        """Gets a canonical description of the same point.

        Periods are made minimal, and center cells that continue
        a background are moved into it.
        """

        if self.is_cyclic:
            return Configuration.cyclic(self.period[:util.minimal_period(self.period)])

        left   = self.left[:util.minimal_period(self.left)]
        right  = self.right[:util.minimal_period(self.right)]
        center = list(self.center)
        offset = self.offset

        # Absorb matching cells into the left background
        start = 0
        while start < len(center) and center[start] == left[0]:
            left   = util.rotate_word(left, 1)
            start += 1

        offset += start
        center  = center[start:]

        while len(center) > 0 and center[-1] == right[-1]:
            right = util.rotate_word(right, -1)
            center.pop()

        # A periodic point written two-sided
        if len(center) == 0 and left == right:
            return Configuration.cyclic(util.rotate_word(left, -offset))

        return Configuration.two_sided(left, tuple(center), right, offset)

    def _key(self):
        norm = self.normalized()

        if norm.is_cyclic:
            return ("cyclic", norm.period)

        return ("two-sided", norm.left, norm.center, norm.right, norm.offset)

    def __eq__(self, other):
        if not isinstance(other, Configuration):
            return NotImplemented

        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.is_cyclic:
            return f"Configuration.cyclic({''.join(map(str, self.period))!r})"

        return (
            f"Configuration.two_sided({''.join(map(str, self.left))!r}, "
            f"{''.join(map(str, self.center))!r}, {''.join(map(str, self.right))!r}, offset={self.offset})"
        )

class Cylinder(collections.namedtuple("Cylinder", "word position")):
    """The set of points showing ``word`` from coordinate ``position`` on.

    Parameters
    ----------
    word : :class:`tuple`
        The fixed word.
    position : :class:`int`
        The coordinate of the first symbol of ``word``.
    """

    __slots__ = ()

    def __new__(cls, word, position=0):
        return super().__new__(cls, tuple(word), position)

    @property
    def end(self):
        """The coordinate just right of the fixed word."""

        return self.position + len(self.word)

    def symbol_at(self, index):
        """Gets the fixed symbol at a coordinate, or ``None`` if it is free."""

        if self.position <= index < self.end:
            return self.word[index - self.position]

        return None

    def extend(self, left, right):
        """Gets the cylinder ``[left word right]`` keeping ``word`` in place."""

        return Cylinder(tuple(left) + self.word + tuple(right), self.position - len(left))

    def contains(self, configuration):
        """Checks whether a configuration lies in the cylinder."""

        return all(configuration[self.position + i] == s for i, s in enumerate(self.word))
