"""Contains :class:`~.LanguageSample`."""

import collections

from .. import util
from ..enums import ProvenanceKind
from ..errors import HorizonError

__all__ = [
    "Provenance",
    "LanguageSample",
    "orbit_closure_sample",
]

class Provenance(collections.namedtuple("Provenance", "kind seed params")):
    """Where a :class:`LanguageSample` came from.

    Parameters
    ----------
    kind : :class:`~.ProvenanceKind`
        Whether the words are exact or sampled.
    seed : :class:`int` or ``None``
        The random seed, for sampled words.
    params : :class:`dict`
        Any other parameters needed to reproduce the words.
    """

    __slots__ = ()

    @classmethod
    def exact(cls, **params):
        return cls(ProvenanceKind.Exact, None, params)

    @classmethod
    def sampled(cls, seed, **params):
        if seed is None:
            raise ValueError("Sampled words need a seed")

        return cls(ProvenanceKind.Sampled, seed, params)

    @property
    def is_exact(self):
        return self.kind == ProvenanceKind.Exact

class LanguageSample:
    """A finite, factor-closed set of words, grouped by length.

    Parameters
    ----------
    alphabet : :class:`~.Alphabet`
        The alphabet of the words.
    words_by_length : :class:`dict`
        Maps each length up to ``max_length`` to its words.
    max_length : :class:`int`
        The longest length the sample speaks for.
    provenance : :class:`Provenance`, optional
        Where the words came from, exact by default.

    Raises
    ------
    :exc:`ValueError`
        If the words are not closed under taking factors.
    """

    def __init__(self, alphabet, words_by_length, max_length, provenance=None):
        self.alphabet   = alphabet
        self.max_length = max_length
        self.provenance = util.default(provenance, Provenance.exact())

        self._words = {}
        for n in range(max_length + 1):
            words = frozenset(tuple(w) for w in words_by_length.get(n, ()))
            for w in words:
                if len(w) != n:
                    raise ValueError(f"Word {w!r} listed under length {n}")

                alphabet.check_word(w)

            self._words[n] = words

        for n in range(1, max_length + 1):
            for w in self._words[n]:
                if w[1:] not in self._words[n - 1] or w[:-1] not in self._words[n - 1]:
                    raise ValueError(f"Sample is not factor-closed at {w!r}")

    @classmethod
    def from_words(cls, alphabet, words, max_length=None, provenance=None):
        """Makes the smallest factor-closed sample containing some words.

        Parameters
        ----------
        alphabet : :class:`~.Alphabet`
            The alphabet of the words.
        words : iterable of :class:`tuple`
            The words.
        max_length : :class:`int`, optional
            The longest length the sample speaks for, defaulting
            to the length of the longest word.
        provenance : :class:`Provenance`, optional
            Where the words came from.

        Examples
        --------
        >>> import glimca
        >>> s = glimca.LanguageSample.from_words(glimca.Alphabet("01"), [tuple("011")])
        >>> sorted(s.words(2))
        [('0', '1'), ('1', '1')]
        """

        words      = [tuple(w) for w in words]
        max_length = util.default(max_length, max((len(w) for w in words), default=0))

        by_length = collections.defaultdict(set)
        for w in words:
            for n in range(min(len(w), max_length) + 1):
                by_length[n] |= util.factors(w, n)

        return cls(alphabet, by_length, max_length, provenance)

    @classmethod
    def from_sft(cls, sft, max_length):
        """Gets the exact language of a :class:`~.Sft` up to a length."""

        return cls(
            sft.alphabet,
            {n: sft.language(n) for n in range(max_length + 1)},
            max_length,
            Provenance.exact(source=repr(sft)),
        )

    def words(self, n):
        """Gets the words of length ``n``.

        Raises
        ------
        :exc:`~.HorizonError`
            If ``n`` is beyond :attr:`max_length`.
        """

        if n < 0 or n > self.max_length:
            raise HorizonError(f"Sample covers lengths up to {self.max_length}, not {n}")

        return self._words[n]

    def __contains__(self, word):
        word = tuple(word)

        return len(word) <= self.max_length and word in self._words[len(word)]

    def __eq__(self, other):
        if not isinstance(other, LanguageSample):
            return NotImplemented

        return self.max_length == other.max_length and self._words == other._words

    def __repr__(self):
        counts = ", ".join(str(len(self._words[n])) for n in range(self.max_length + 1))

        return f"<{type(self).__name__} lengths 0..{self.max_length} counts [{counts}] {self.provenance.kind.value}>"

def orbit_closure_sample(alphabet, configuration, max_length):
    """Gets the exact language of the orbit closure of a finitely described point.

    Parameters
    ----------
    alphabet : :class:`~.Alphabet`
        The alphabet of the point.
    configuration : :class:`~.Configuration`
        The point.
    max_length : :class:`int`
        The longest length of the sample.

    Examples
    --------
    >>> import glimca
    >>> point = glimca.Configuration.two_sided("0", "", "1")
    >>> s = glimca.orbit_closure_sample(glimca.Alphabet("01"), point, 2)
    >>> sorted("".join(w) for w in s.words(2))
    ['00', '01', '11']
    """

    configuration = configuration.normalized()
    configuration.check_alphabet(alphabet)

    if configuration.is_cyclic:
        word = configuration.window(0, len(configuration.period) + max_length)
    else:
        pad  = max_length + len(configuration.left) + len(configuration.right)
        word = configuration.window(configuration.offset - pad, configuration.end + pad)

    return LanguageSample.from_words(
        alphabet,
        [word],
        max_length,
        Provenance.exact(source=repr(configuration)),
    )
