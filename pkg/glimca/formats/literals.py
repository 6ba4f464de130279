"""Configuration and cylinder literals used on the command line."""

import re

from ..errors import AlphabetError, ParseError
from ..automata import Configuration, Cylinder

__all__ = [
    "parse_configuration",
    "format_configuration",
    "parse_cylinder",
]

CYCLIC_PREFIX = "cyclic:"

_TWO_SIDED = re.compile(r"^(?P<left>\S+)\^inf\s*\(\s*(?P<center>[^@()]*?)\s*@\s*(?P<offset>-?\d+)\s*\)\s*(?P<right>\S+)\^inf$")

def _word(alphabet, text, literal):
    try:
        return alphabet.parse_word(text)
    except AlphabetError as e:
        raise ParseError(f"{e} in {literal!r}") from None

def parse_configuration(literal, alphabet):
    """Parses a configuration literal.

    The literal is either ``cyclic:WORD`` or ``LEFT^inf (CENTER@OFFSET) RIGHT^inf``
    where ``OFFSET`` is the coordinate of the first cell of ``CENTER``.

    Raises
    ------
    :exc:`~.ParseError`
        If the literal is malformed.

    Examples
    --------
    >>> import glimca
    >>> c = glimca.formats.parse_configuration("0^inf (1@0) 0^inf", glimca.Alphabet("01"))
    >>> c.window(-1, 1)
    ('0', '1', '0')
    """

    text = literal.strip()

    if text.startswith(CYCLIC_PREFIX):
        word = _word(alphabet, text[len(CYCLIC_PREFIX):], literal)
        if len(word) == 0:
            raise ParseError(f"Empty period in {literal!r}")

        return Configuration.cyclic(word)

    match = _TWO_SIDED.match(text)
    if match is None:
        raise ParseError(f"Expected 'cyclic:WORD' or 'LEFT^inf (CENTER@OFFSET) RIGHT^inf', got {literal!r}")

    return Configuration.two_sided(
        _word(alphabet, match["left"],   literal),
        _word(alphabet, match["center"], literal),
        _word(alphabet, match["right"],  literal),
        int(match["offset"]),
    )

def format_configuration(configuration, alphabet):
    """Formats a configuration as a literal, the inverse of :func:`parse_configuration`."""

    if configuration.is_cyclic:
        return CYCLIC_PREFIX + alphabet.format_word(configuration.period)

    return (
        f"{alphabet.format_word(configuration.left)}^inf "
        f"({alphabet.format_word(configuration.center)}@{configuration.offset}) "
        f"{alphabet.format_word(configuration.right)}^inf"
    )

def parse_cylinder(literal, alphabet):
    """Parses a cylinder literal, ``WORD`` or ``WORD@POSITION``.

    Examples
    --------
    >>> import glimca
    >>> glimca.formats.parse_cylinder("01@-1", glimca.Alphabet("01"))
    Cylinder(word=('0', '1'), position=-1)
    """

    word, sep, position = literal.strip().rpartition("@")
    if sep == "":
        word, position = position, "0"

    try:
        position = int(position)
    except ValueError:
        raise ParseError(f"Invalid position in {literal!r}") from None

    return Cylinder(_word(alphabet, word, literal), position)
