"""Utilities for checking object interfaces."""

import os
import io
import contextlib

__all__ = [
    "is_pathlike",
    "text_file",
]

def is_pathlike(obj):
    """Checks if an object is pathlike.

    Parameters
    ----------
    obj
        The object to check.

    Returns
    -------
    :class:`bool`
        Whether ``obj`` is pathlike.
    """

    return isinstance(obj, (str, os.PathLike))

@contextlib.contextmanager
def text_file(obj):
    """Opens an object as a text file for reading.

    Parameters
    ----------
    obj : pathlike or file object
        A path to open, or an already open text file object,
        which is not closed afterwards.

    Yields
    ------
    file object
        The text file and its name, as a ``(file, name)`` pair.
        The name is ``None`` if ``obj`` has none.
    """

    if is_pathlike(obj):
        with open(obj, "r", encoding="utf-8") as f:
            yield f, os.fspath(obj)

        return

    if isinstance(obj, (bytes, bytearray)):
        obj = io.StringIO(obj.decode("utf-8"))

    yield obj, getattr(obj, "name", None)
