"""Contains :class:`~.SpacetimeDiagram` and :func:`~.render`."""

import io
import csv

__all__ = [
    "SpacetimeDiagram",
    "render",
]

#: Printed for cells a finite word does not determine.
UNDETERMINED = "?"

class SpacetimeDiagram:
    """The recorded window of each step of a run.

    Parameters
    ----------
    alphabet : :class:`~.Alphabet`
        The alphabet of the run.
    rows : :class:`list` of :class:`tuple`
        Row ``t`` holds the window of ``f^t(x)``, with ``None``
        for cells that are not determined.
    window : :class:`tuple`
        The inclusive range of cells ``(a, b)``.
    """

    def __init__(self, alphabet, rows, window):
        self.alphabet = alphabet
        self.rows     = tuple(tuple(row) for row in rows)
        self.window   = window

        width = window[1] - window[0] + 1
        for row in self.rows:
            if len(row) != width:
                raise ValueError(f"Row of length {len(row)} does not fit window of width {width}")

        self.determined_mask = tuple(tuple(cell is not None for cell in row) for row in self.rows)

    @property
    def steps(self):
        return len(self.rows) - 1

    def cell(self, t, i):
        """Gets the symbol at time ``t`` and coordinate ``i``."""

        return self.rows[t][i - self.window[0]]

    def __repr__(self):
        return f"<{type(self).__name__} steps={self.steps} window={self.window}>"

def _cell_name(alphabet, cell):
    if cell is None:
        return UNDETERMINED

    if alphabet.single_char:
        return str(cell)

    return f"[{cell}]"

def render(diagram, format="text"):
    """Renders a spacetime diagram.

    Parameters
    ----------
    diagram : :class:`SpacetimeDiagram`
        The diagram to render.
    format : :class:`str`
        One of ``"text"``, with one line per step,
        ``"csv"``, with one ``t,pos,symbol`` record per cell,
        or ``"pnm"``, a greyscale binary PGM image.

    Returns
    -------
    :class:`str` or :class:`bytes`
        The rendering. Text and CSV are :class:`str`, to be encoded
        as UTF-8 when bytes are needed, and ``"pnm"`` is :class:`bytes`.

    Raises
    ------
    :exc:`ValueError`
        If ``format`` is unknown.

    Examples
    --------
    >>> import glimca
    >>> rule = glimca.LocalRule.from_builtin("min")
    >>> d = glimca.run(rule, glimca.Configuration.cyclic("0101"), 1)
    >>> print(glimca.render(d), end="")
    0101
    0000
    """

    alphabet = diagram.alphabet

    if format == "text":
        return "".join(
            "".join(_cell_name(alphabet, cell) for cell in row) + "\n"
            for row in diagram.rows
        )

    if format == "csv":
        out    = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")

        writer.writerow(["t", "pos", "symbol"])
        for t, row in enumerate(diagram.rows):
            for i, cell in enumerate(row):
                writer.writerow([t, diagram.window[0] + i, UNDETERMINED if cell is None else str(cell)])

        return out.getvalue()

    if format == "pnm":
        height = len(diagram.rows)
        width  = diagram.window[1] - diagram.window[0] + 1
        scale  = 255 // max(1, alphabet.size - 1)

        # Undetermined cells are drawn white, symbols from black upwards
        pixels = bytearray()
        for row in diagram.rows:
            for cell in row:
                pixels.append(255 if cell is None else min(254, alphabet.index(cell) * scale))

        return f"P5\n{width} {height}\n255\n".encode("ascii") + bytes(pixels)

    raise ValueError(f"Unknown render format {format!r}")
