"""Builtin local rules, found by name with :meth:`~.LocalRule.from_builtin`."""

from .. import util
from .rule import BINARY, TableRule

__all__ = [
    "IdentityRule",
    "ShiftRule",
    "MinimumRule",
    "SuccessorRule",
    "ElementaryRule",
]

class _BuiltinRule(TableRule):
    # Builtins all have radius 1 and tabulate _apply
    builtin_name = None

    def __init__(self, *, alphabet=None):
        alphabet = util.default(alphabet, BINARY)

        table = TableRule.tabulate(alphabet, 1, lambda n: self._apply(alphabet, n)).table()

        super().__init__(alphabet, 1, table, name=self.builtin_name)

    def _apply(self, alphabet, neighborhood):
        raise NotImplementedError

class IdentityRule(_BuiltinRule):
    """The identity, ``f(x)_0 = x_0``."""

    builtin_name = "identity"

    def _apply(self, alphabet, neighborhood):
        return neighborhood[1]

class ShiftRule(_BuiltinRule):
    """The left shift, ``f(x)_0 = x_1``."""

    builtin_name = "shift"

    def _apply(self, alphabet, neighborhood):
        return neighborhood[2]

class MinimumRule(_BuiltinRule):
    """The minimum rule, ``f(x)_0 = min(x_0, x_1)``.

    Symbols are ordered by their index in the alphabet.
    """

    builtin_name = "min"

    def _apply(self, alphabet, neighborhood):
        return min(neighborhood[1:], key=alphabet.index)

class SuccessorRule(_BuiltinRule):
    """Replaces each symbol by the next one in the alphabet, cyclically.

    On the binary alphabet this swaps ``0`` and ``1``.
    """

    builtin_name = "swap"

    def _apply(self, alphabet, neighborhood):
        return alphabet[(alphabet.index(neighborhood[1]) + 1) % alphabet.size]

class ElementaryRule(_BuiltinRule):
    """An elementary cellular automaton in Wolfram's numbering.

    Parameters
    ----------
    number : :class:`int`
        The rule number, between 0 and 255.

    Examples
    --------
    >>> import glimca
    >>> rule = glimca.ElementaryRule(110)
    >>> rule(("1", "1", "1")), rule(("1", "1", "0"))
    ('0', '1')
    """

    builtin_name = "elementary"

    def __init__(self, number, *, alphabet=None):
        number = int(number)
        if not 0 <= number <= 255:
            raise ValueError(f"Elementary rule number must be in [0, 255], got {number}")

        if alphabet is not None and alphabet != BINARY:
            raise ValueError("Elementary rules act on the binary alphabet")

        self.number = number

        super().__init__()

        self.name = f"elementary {number}"

    def _apply(self, alphabet, neighborhood):
        code = int("".join(neighborhood), 2)

        return "1" if (self.number >> code) & 1 else "0"
