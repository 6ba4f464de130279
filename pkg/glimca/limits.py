"""Enumeration budgets.

The defaults here can be overridden per call through the ``cap``
keyword arguments of the exact operations, and globally through the
``GLIMCA_BUDGET`` environment variable, which replaces
:data:`ENUMERATION_CAP`.
"""

import os
import logging

logger = logging.getLogger(__name__)

#: Largest dense rule table, in entries.
DENSE_TABLE_CAP = 2**24

#: Default cap on exact enumerations (branching, automaton widths, run sizes).
ENUMERATION_CAP = 2**20

def enumeration_cap(cap=None):
    """Gets the enumeration cap in effect.

    Parameters
    ----------
    cap : :class:`int`, optional
        An explicit cap, returned as is when given.

    Returns
    -------
    :class:`int`
        ``cap`` if specified, else ``GLIMCA_BUDGET`` if set,
        else :data:`ENUMERATION_CAP`.

    Raises
    ------
    :exc:`ValueError`
        If ``GLIMCA_BUDGET`` is not a positive integer.

    Examples
    --------
    >>> import glimca
    >>> glimca.limits.enumeration_cap(10)
    10
    """

    if cap is not None:
        return cap

    env = os.environ.get("GLIMCA_BUDGET")
    if env is None:
        return ENUMERATION_CAP

    try:
        value = int(env)
    except ValueError:
        raise ValueError(f"GLIMCA_BUDGET must be an integer, got {env!r}") from None

    if value <= 0:
        raise ValueError(f"GLIMCA_BUDGET must be positive, got {value}")

    logger.debug("Enumeration cap overridden by GLIMCA_BUDGET=%d", value)

    return value
