"""Utilities for words, which are tuples of symbols."""

import itertools

__all__ = [
    "as_word",
    "factors",
    "minimal_period",
    "rotate_word",
    "words_over",
]

def as_word(obj):
    """Converts an object to a word.

    Parameters
    ----------
    obj : :class:`str` or iterable
        The object to convert. Strings become words
        of their characters.

    Returns
    -------
    :class:`tuple`
        The word.

    Examples
    --------
    >>> import glimca
    >>> glimca.util.as_word("01")
    ('0', '1')
    """

    return tuple(obj)

def factors(word, length):
    """Gets the factors of a word of a certain length.

    Parameters
    ----------
    word : :class:`tuple`
        The word.
    length : :class:`int`
        The length of the factors.

    Returns
    -------
    :class:`set`
        The factors of ``word`` of length ``length``.

    Examples
    --------
    >>> import glimca
    >>> sorted(glimca.util.factors(("0", "1", "1"), 2))
    [('0', '1'), ('1', '1')]
    """

    return {word[i:i + length] for i in range(len(word) - length + 1)}

def minimal_period(word):
    """Gets the smallest period of a word read cyclically.

    Parameters
    ----------
    word : :class:`tuple`
        A nonempty word.

    Returns
    -------
    :class:`int`
        The smallest ``p`` dividing ``len(word)`` such that
        ``word`` is a repetition of its first ``p`` symbols.

    Examples
    --------
    >>> import glimca
    >>> glimca.util.minimal_period(tuple("0101"))
    2
    """

    n = len(word)
    for p in range(1, n + 1):
        if n % p == 0 and word == word[:p] * (n // p):
            return p

    return n

def rotate_word(word, amount):
    """Rotates a word to the left.

    Parameters
    ----------
    word : :class:`tuple`
        The word.
    amount : :class:`int`
        How far to rotate, may be negative.

    Returns
    -------
    :class:`tuple`
        The rotated word, so that ``ret[i] == word[(i + amount) % len(word)]``.
    """

    if len(word) == 0:
        return word

    amount %= len(word)

    return word[amount:] + word[:amount]

def words_over(symbols, length):
    """Iterates the words of a length over some symbols, in lexicographic order."""

    return (tuple(w) for w in itertools.product(symbols, repeat=length))
