"""Contains :class:`~.Alphabet`."""

import itertools

from .. import util
from ..errors import AlphabetError

__all__ = [
    "Alphabet",
]

class Alphabet:
    """A finite, ordered set of symbols.

    The order of the symbols fixes the index of each symbol,
    which is what dense rule tables and sampled arrays store.

    Parameters
    ----------
    symbols : iterable
        The symbols. Each symbol must be hashable, and the
        :class:`str` of each symbol is used as its name.

    Raises
    ------
    :exc:`~.AlphabetError`
        If there are no symbols, or if two symbols share a name.

    Examples
    --------
    >>> import glimca
    >>> a = glimca.Alphabet("01")
    >>> a.size
    2
    >>> a.index("1")
    1
    >>> a.parse_word("0110")
    ('0', '1', '1', '0')
    """

    def __init__(self, symbols):
        self.symbols = tuple(symbols)

        if len(self.symbols) == 0:
            raise AlphabetError("An alphabet needs at least one symbol")

        self._indices = {}
        self._by_name = {}
        for i, symbol in enumerate(self.symbols):
            name = str(symbol)

            if name in self._by_name:
                raise AlphabetError(f"Duplicate symbol {name!r} in alphabet")

            self._indices[symbol] = i
            self._by_name[name]   = symbol

        self.single_char = all(len(name) == 1 for name in self._by_name)

    @property
    def size(self):
        """The number of symbols."""

        return len(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, index):
        return self.symbols[index]

    def __contains__(self, symbol):
        return symbol in self._indices

    def __eq__(self, other):
        if not isinstance(other, Alphabet):
            return NotImplemented

        return self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        return f"{type(self).__name__}({[str(s) for s in self.symbols]})"

    def index(self, symbol):
        """Gets the index of a symbol.

        Raises
        ------
        :exc:`~.AlphabetError`
            If ``symbol`` is not in the alphabet.
        """

        try:
            return self._indices[symbol]
        except KeyError:
            raise AlphabetError(f"Symbol {symbol!r} is not in {self!r}") from None

    def symbol(self, name):
        """Gets a symbol by its name.

        Raises
        ------
        :exc:`~.AlphabetError`
            If no symbol has the name ``name``.
        """

        try:
            return self._by_name[name]
        except KeyError:
            raise AlphabetError(f"No symbol named {name!r} in {self!r}") from None

    def check_word(self, word):
        """Checks that every symbol of a word is in the alphabet.

        Returns
        -------
        :class:`tuple`
            ``word`` as a :class:`tuple`.

        Raises
        ------
        :exc:`~.AlphabetError`
            If a symbol of ``word`` is not in the alphabet.
        """

        word = tuple(word)
        for symbol in word:
            if symbol not in self._indices:
                raise AlphabetError(f"Symbol {symbol!r} is not in {self!r}")

        return word

    def encode(self, word):
        """Converts a word to a :class:`list` of symbol indices."""

        return [self.index(symbol) for symbol in word]

    def decode(self, indices):
        """Converts symbol indices to a word."""

        return tuple(self.symbols[int(i)] for i in indices)

    def words(self, length):
        """Iterates the words of a given length in lexicographic order."""

        return util.words_over(self.symbols, length)

    def words_up_to(self, length):
        """Iterates the words of length at most ``length``, shortest first."""

        return itertools.chain.from_iterable(self.words(n) for n in range(length + 1))

    def parse_word(self, text):
        """Parses a word from text.

        Symbols are separated by commas if there is a comma
        in ``text``. Otherwise, if every name is a single
        character, each character is a symbol.

        Raises
        ------
        :exc:`~.AlphabetError`
            If a name is unknown, or the word cannot be split.
        """

        text = text.strip()
        if text == "":
            return ()

        if "," in text:
            names = [name.strip() for name in text.split(",")]
        elif self.single_char:
            names = list(text)
        elif text in self._by_name:
            names = [text]
        else:
            raise AlphabetError(f"Separate the symbols of {text!r} with commas")

        return tuple(self.symbol(name) for name in names)

    def format_word(self, word):
        """Formats a word as text, the inverse of :meth:`parse_word`."""

        if self.single_char:
            return "".join(str(symbol) for symbol in word)

        return ",".join(str(symbol) for symbol in word)
