"""Contains :class:`~.Bounds`."""

import collections

from .. import limits

__all__ = [
    "Bounds",
]

_FIELDS = collections.OrderedDict([
    ("U",      3),
    ("T_max",  64),
    ("K",      8),
    ("budget", None),
    ("N",      1000),
    ("T0",     32),
    ("n",      8),
    ("period", 256),
    ("m_max",  3),
    ("seed",   0),
])

class Bounds(collections.namedtuple("Bounds", _FIELDS.keys())):
    """The bounds every bounded-evidence operation runs under.

    Parameters
    ----------
    U : :class:`int`
        The longest context or extension word.
    T_max : :class:`int`
        The time horizon.
    K : :class:`int`
        How many steps a hit or a kill must persist.
    budget : :class:`int`, optional
        The enumeration cap, defaulting to :func:`~.enumeration_cap`.
    N : :class:`int`
        The number of sampled configurations.
    T0 : :class:`int`
        The first time step sampled. The default keeps the second
        half of the default ``T_max``.
    n : :class:`int`
        The word length of samples.
    period : :class:`int`
        The period of sampled configurations.
    m_max : :class:`int`
        The largest power checked by the restriction classifier.
    seed : :class:`int`
        The random seed of sampled operations.

    Raises
    ------
    :exc:`ValueError`
        If a bound is not positive, ``K > T_max`` or ``T0 > T_max``.

    Examples
    --------
    >>> import glimca
    >>> glimca.Bounds().T_max
    64
    >>> glimca.Bounds(T_max=4, K=8)
    Traceback (most recent call last):
    ...
    ValueError: K (8) must not exceed T_max (4)
    """

    __slots__ = ()

    def __new__(cls, **kwargs):
        for name in kwargs:
            if name not in _FIELDS:
                raise TypeError(f"Unknown bound {name!r}")

        values = {name: kwargs.get(name, value) for name, value in _FIELDS.items()}
        values["budget"] = limits.enumeration_cap(values["budget"])

        for name, value in values.items():
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"Bound {name} must be an integer, got {value!r}")

            if name == "seed":
                if value < 0:
                    raise ValueError(f"Seed must be non-negative, got {value}")
            elif name in ("n", "T0"):
                if value < 0:
                    raise ValueError(f"Bound {name} must be non-negative, got {value}")
            elif value <= 0:
                raise ValueError(f"Bound {name} must be positive, got {value}")

        if values["K"] > values["T_max"]:
            raise ValueError(f"K ({values['K']}) must not exceed T_max ({values['T_max']})")

        if values["T0"] > values["T_max"]:
            raise ValueError(f"T0 ({values['T0']}) must not exceed T_max ({values['T_max']})")

        return super().__new__(cls, **values)

    def replace(self, **kwargs):
        """Gets a copy with some bounds replaced."""

        return Bounds(**{**self._asdict(), **kwargs})

    def describe(self):
        """Gets the bounds as ``name=value`` text."""

        return " ".join(f"{name}={value}" for name, value in self._asdict().items())
