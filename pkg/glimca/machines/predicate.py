"""Contains :class:`~.PredicateProgram`."""

import itertools

from ..errors import PredicateRangeError

__all__ = [
    "PredicateProgram",
]

class PredicateProgram:
    """A decidable predicate ``psi(w, m, m', k)``.

    ``w`` is a word over the input letters and ``m``, ``m'``, ``k``
    are non-negative integers. A predicate is either constant or
    tabulated on bounded ranges, which is what lets a finite machine
    evaluate it.

    Use :meth:`always_true`, :meth:`always_false` and :meth:`tabulate`
    rather than the constructor.
    """

    def __init__(self, *, constant=None, table=None, letters=(), max_word=0, max_m=0, max_index=0, name=None):
        self.constant  = constant
        self.table     = table
        self.letters   = tuple(letters)
        self.max_word  = max_word
        self.max_m     = max_m
        self.max_index = max_index
        self.name      = name

    @classmethod
    def always_true(cls):
        return cls(constant=True, name="always-true")

    @classmethod
    def always_false(cls):
        return cls(constant=False, name="always-false")

    @classmethod
    def tabulate(cls, function, letters, max_word, max_m, max_index, *, name=None):
        """Tabulates a Python function on bounded ranges.

        Parameters
        ----------
        function : callable
            Called as ``function(w, m, m_prime, k)`` with ``w`` a :class:`tuple`.
        letters : iterable of :class:`str`
            The input letters.
        max_word : :class:`int`
            The longest ``w`` covered.
        max_m : :class:`int`
            The largest ``m`` covered.
        max_index : :class:`int`
            The largest ``m'`` and ``k`` covered.

        Examples
        --------
        >>> import glimca
        >>> psi = glimca.PredicateProgram.tabulate(lambda w, m, mp, k: k < 1, "ab", 2, 1, 3)
        >>> psi(("a",), 0, 0, 0), psi(("a",), 0, 0, 2)
        (True, False)
        """

        letters = tuple(letters)

        table = {}
        for length in range(max_word + 1):
            for w in itertools.product(letters, repeat=length):
                for m, m_prime, k in itertools.product(range(max_m + 1), range(max_index + 1), range(max_index + 1)):
                    table[w, m, m_prime, k] = bool(function(w, m, m_prime, k))

        return cls(
            table     = table,
            letters   = letters,
            max_word  = max_word,
            max_m     = max_m,
            max_index = max_index,
            name      = name,
        )

    @property
    def is_constant(self):
        return self.constant is not None

    def __call__(self, w, m, m_prime, k):
        if self.is_constant:
            return self.constant

        try:
            return self.table[tuple(w), m, m_prime, k]
        except KeyError:
            raise PredicateRangeError(f"Predicate is not tabulated at {(tuple(w), m, m_prime, k)!r}") from None

    def __repr__(self):
        if self.is_constant:
            return f"<{type(self).__name__} constant={self.constant}>"

        return f"<{type(self).__name__} |w|<={self.max_word} m<={self.max_m} index<={self.max_index}>"
