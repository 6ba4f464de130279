"""Shared reading of line-oriented files."""

import collections

from .. import util
from ..errors import ParseError

__all__ = [
    "Line",
    "read_lines",
    "dump_lines",
]

COMMENT = "//"

class Line(collections.namedtuple("Line", "number text path")):
    """One meaningful line of a file.

    Parameters
    ----------
    number : :class:`int`
        The 1-based line number.
    text : :class:`str`
        The stripped text.
    path : :class:`str` or ``None``
        The file's name.
    """

    __slots__ = ()

    @property
    def key(self):
        """The ``key`` of a ``key: value`` line, or ``None``."""

        key, sep, _ = self.text.partition(":")
        if sep == "" or " " in key.strip():
            return None

        return key.strip()

    @property
    def value(self):
        return self.text.partition(":")[2].strip()

    @property
    def tokens(self):
        return self.text.split()

    def error(self, message):
        """Makes a :exc:`~.ParseError` pointing at this line."""

        return ParseError(message, path=self.path, line=self.number)

def read_lines(f):
    """Reads the meaningful lines of a file.

    Parameters
    ----------
    f : pathlike or file object
        The file.

    Returns
    -------
    :class:`tuple`
        The file's name, or ``None``, and the list of
        :class:`Line` objects that are neither blank nor comments.
    """

    with util.text_file(f) as (file, name):
        return name, [
            Line(number, text.strip(), name)

            for number, text in enumerate(file, start=1)
            if text.strip() != "" and not text.strip().startswith(COMMENT)
        ]

def dump_lines(lines, f=None):
    """Writes lines of text to a file object, or returns them joined."""

    text = "".join(line + "\n" for line in lines)

    if f is None:
        return text

    return f.write(text)
