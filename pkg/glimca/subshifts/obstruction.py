"""Contains :func:`~.periodic_factor_obstruction`."""

import collections
import networkx as nx

from .. import util
from ..enums import ObstructionKind

__all__ = [
    "ObstructionVerdict",
    "level_period",
    "periodic_factor_obstruction",
]

class ObstructionVerdict(collections.namedtuple("ObstructionVerdict", "kind period component_periods")):
    """The result of :func:`periodic_factor_obstruction`.

    Parameters
    ----------
    kind : :class:`~.ObstructionKind`
        The verdict.
    period : :class:`int` or ``None``
        The period of the finite factor, when obstructed.
    component_periods : :class:`tuple` of :class:`int`
        The level period of each chain component.
    """

    __slots__ = ()

    @property
    def obstructed(self):
        return self.kind == ObstructionKind.Obstructed

    def describe(self):
        """Gets a one line description of the verdict."""

        if self.kind == ObstructionKind.Obstructed:
            return f"obstructed p={self.period}: cannot be the generic limit set (periodic finite factor)"

        if self.kind == ObstructionKind.Clear:
            return "clear: no periodic finite factor"

        periods = " ".join(str(p) for p in self.component_periods)

        return f"inconclusive: components have incompatible periods {periods}"

def level_period(graph):
    """Gets the largest ``p`` admitting a level function of a connected graph.

    A level function maps vertices to ``Z/pZ`` and increases by one
    along every edge. The largest such ``p`` is the gcd, over all
    edges ``u -> v``, of ``level(u) + 1 - level(v)`` where levels come
    from a search that ignores edge directions.

    Parameters
    ----------
    graph : :class:`networkx.MultiDiGraph`
        A weakly connected graph.

    Returns
    -------
    :class:`int`
        The largest period, ``0`` if the graph has no cycles
        even ignoring directions.
    """

    root   = next(iter(graph))
    levels = {root: 0}
    stack  = [root]
    while len(stack) > 0:
        u = stack.pop()

        for _, v in graph.out_edges(u):
            if v not in levels:
                levels[v] = levels[u] + 1
                stack.append(v)

        for v, _ in graph.in_edges(u):
            if v not in levels:
                levels[v] = levels[u] - 1
                stack.append(v)

    return util.gcd_all(levels[u] + 1 - levels[v] for u, v in graph.edges())

def periodic_factor_obstruction(sft):
    """Decides whether a subshift factors onto a periodic orbit.

    A subshift with finitely many chain components which factors onto
    a finite system with nontrivial dynamics cannot be the generic limit
    set of a cellular automaton. For an SFT such a factor is a level
    function of its pruned graph into ``Z/pZ`` with ``p > 1``.

    Returns
    -------
    :class:`ObstructionVerdict`
        Obstructed with the largest common ``p`` when ``p > 1``.
        Clear when there is no such ``p`` and every chain component has
        period 1. Inconclusive when the components have periods whose
        gcd is 1 but some component has a larger period.

    Raises
    ------
    :exc:`~.EmptySubshiftError`
        If the subshift is empty.

    Examples
    --------
    >>> import glimca
    >>> a = glimca.Alphabet("01")
    >>> glimca.periodic_factor_obstruction(glimca.Sft.from_forbidden(a, ["00", "11"])).describe()
    'obstructed p=2: cannot be the generic limit set (periodic finite factor)'
    """

    sft._check_nonempty()

    periods = tuple(
        level_period(sft.pruned.subgraph(nodes))

        for nodes in sorted(
            nx.weakly_connected_components(sft.pruned),
            key = lambda nodes: min(sft.alphabet.encode(v) for v in nodes),
        )
    )

    common = util.gcd_all(periods)

    if common > 1:
        return ObstructionVerdict(ObstructionKind.Obstructed, common, periods)

    if all(p == 1 for p in periods):
        return ObstructionVerdict(ObstructionKind.Clear, None, periods)

    return ObstructionVerdict(ObstructionKind.Inconclusive, None, periods)
