"""Subshift files, ``.sft``.

A subshift file gives an alphabet, then either forbidden words or a
window and its allowed words::

    alphabet: 0 1
    forbid: 00 11

    alphabet: 0 1
    window: 2
    allow: 00 01 10

Words with multi-character symbol names separate the names with commas.
"""

from ..errors import AlphabetError, ParseError
from ..automata import Alphabet
from ..subshifts import Sft
from .reader import read_lines

__all__ = [
    "load",
]

KEYS = ("alphabet", "forbid", "window", "allow")

def _words(alphabet, line):
    try:
        return [alphabet.parse_word(token) for token in line.value.split()]
    except AlphabetError as e:
        raise line.error(str(e)) from None

def load(f):
    """Loads a subshift file.

    Parameters
    ----------
    f : pathlike or file object
        The file.

    Returns
    -------
    :class:`~.Sft`
        The subshift.

    Raises
    ------
    :exc:`~.ParseError`
        If the file is malformed, pointing at the offending line.

    Examples
    --------
    >>> import io
    >>> import glimca
    >>> sft = glimca.formats.sft.load(io.StringIO("alphabet: 0 1\\nforbid: 11\\n"))
    >>> sft.window, len(sft.essential)
    (2, 3)
    """

    path, lines = read_lines(f)

    header = {}
    for line in lines:
        if line.key not in KEYS:
            raise line.error(f"Unrecognized line {line.text!r}")

        if line.key in header:
            raise line.error(f"Duplicate {line.key!r}")

        header[line.key] = line

    if "alphabet" not in header:
        raise ParseError("Missing 'alphabet'", path=path)

    try:
        alphabet = Alphabet(header["alphabet"].value.split())
    except AlphabetError as e:
        raise header["alphabet"].error(str(e)) from None

    if "forbid" in header:
        for key in ("window", "allow"):
            if key in header:
                raise header[key].error(f"'{key}' cannot be used with 'forbid'")

        return Sft.from_forbidden(alphabet, _words(alphabet, header["forbid"]))

    if "window" not in header or "allow" not in header:
        raise ParseError("Expected 'forbid', or 'window' and 'allow'", path=path)

    try:
        window = int(header["window"].value)
    except ValueError:
        raise header["window"].error(f"Window must be an integer, got {header['window'].value!r}") from None

    if window < 1:
        raise header["window"].error(f"Window must be positive, got {window}")

    allowed = _words(alphabet, header["allow"])
    for word in allowed:
        if len(word) != window:
            raise header["allow"].error(f"Allowed word {alphabet.format_word(word)!r} does not have length {window}")

    return Sft(alphabet, window, allowed)
