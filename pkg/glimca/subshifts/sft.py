"""Contains :class:`~.Sft` and graph decisions on it."""

import collections
import logging
import networkx as nx

from .. import util
from .. import limits
from ..errors import BudgetExceeded, EmptySubshiftError, HorizonError

__all__ = [
    "Sft",
    "is_transitive",
    "is_mixing",
    "sigma_period",
    "graph_period",
]

logger = logging.getLogger(__name__)

def _make_essential(graph):
    # Removes vertices that do not lie on a bi-infinite path
    stranded = [v for v in graph if graph.out_degree(v) == 0 or graph.in_degree(v) == 0]
    while len(stranded) > 0:
        frontier  = {u for u, _ in graph.in_edges(stranded)} | {v for _, v in graph.out_edges(stranded)}
        frontier -= set(stranded)

        graph.remove_nodes_from(stranded)
        stranded = [v for v in frontier if graph.out_degree(v) == 0 or graph.in_degree(v) == 0]

class Sft:
    """A subshift of finite type, given by its allowed words of one length.

    A point is in the subshift when every factor of length
    :attr:`window` is allowed. The subshift is presented by its
    de Bruijn graph: vertices are words of length ``window - 1``
    and each allowed word ``w`` is an edge from ``w[:-1]`` to
    ``w[1:]``. The pruned graph keeps only the vertices on
    bi-infinite paths, so its edges are exactly the allowed
    words that occur in some point.

    Parameters
    ----------
    alphabet : :class:`~.Alphabet`
        The alphabet of the subshift.
    window : :class:`int`
        The length of the allowed words, at least 1.
    allowed : iterable of :class:`tuple`
        The allowed words.

    Raises
    ------
    :exc:`ValueError`
        If ``window`` is not positive or a word has the wrong length.
    :exc:`~.AlphabetError`
        If a word uses a symbol outside ``alphabet``.

    Examples
    --------
    >>> import glimca
    >>> golden = glimca.Sft.from_forbidden(glimca.Alphabet("01"), ["11"])
    >>> sorted("".join(w) for w in golden.language(3))
    ['000', '001', '010', '100', '101']
    """

    def __init__(self, alphabet, window, allowed):
        if window < 1:
            raise ValueError(f"Window must be positive, got {window}")

        self.alphabet = alphabet
        self.window   = window
        self.allowed  = frozenset(alphabet.check_word(w) for w in allowed)

        for w in self.allowed:
            if len(w) != window:
                raise ValueError(f"Allowed word {w!r} does not have length {window}")

        self.graph = nx.MultiDiGraph()
        for w in sorted(self.allowed, key=alphabet.encode):
            self.graph.add_edge(w[:-1], w[1:], key=w)

        self.pruned = self.graph.copy()
        _make_essential(self.pruned)

        self.essential = frozenset(key for _, _, key in self.pruned.edges(keys=True))

        logger.debug("Built %r: %d allowed, %d essential", self, len(self.allowed), len(self.essential))

    @classmethod
    def from_forbidden(cls, alphabet, forbidden):
        """Makes the subshift avoiding some forbidden words.

        The window is the length of the longest forbidden word,
        and at least 2.
        """

        forbidden = [alphabet.check_word(w) for w in forbidden]
        window    = max([2] + [len(w) for w in forbidden])

        allowed = [
            w for w in alphabet.words(window)

            if not any(len(f) <= window and f in util.factors(w, len(f)) for f in forbidden)
        ]

        return cls(alphabet, window, allowed)

    @classmethod
    def full_shift(cls, alphabet):
        """Makes the full shift ``A^Z``."""

        return cls(alphabet, 1, alphabet.words(1))

    def is_empty(self):
        """Checks whether the subshift has no points."""

        return len(self.essential) == 0

    def _check_nonempty(self):
        if self.is_empty():
            raise EmptySubshiftError(f"{self!r} is empty")

    def _successors(self):
        successors = collections.defaultdict(list)
        for w in sorted(self.essential, key=self.alphabet.encode):
            successors[w[:-1]].append(w[-1])

        return successors

    def language(self, k, *, cap=None):
        """Gets the words of length ``k`` occurring in points of the subshift.

        Parameters
        ----------
        k : :class:`int`
            The length.
        cap : :class:`int`, optional
            The largest number of words allowed.

        Returns
        -------
        :class:`frozenset`
            The words.

        Raises
        ------
        :exc:`~.BudgetExceeded`
            If there are more than ``cap`` words.
        """

        if k < 0:
            raise HorizonError(f"Length must be non-negative, got {k}")

        if self.is_empty():
            return frozenset()

        if k <= self.window:
            return frozenset(f for w in self.essential for f in util.factors(w, k))

        cap        = limits.enumeration_cap(cap)
        successors = self._successors()
        context    = self.window - 1

        words = set(self.essential)
        for _ in range(k - self.window):
            words = {
                w + (a,)

                for w in words
                for a in successors[w[len(w) - context:] if context > 0 else ()]
            }

            if len(words) > cap:
                raise BudgetExceeded("language words", len(words), cap)

        return frozenset(words)

    def higher_block(self, n):
        """Gets the de Bruijn graph of the words of length ``n``.

        Parameters
        ----------
        n : :class:`int`
            The block length, at least the window.

        Returns
        -------
        :class:`networkx.DiGraph`
            The graph whose vertices are the words of length ``n`` and
            whose edges join ``u`` to ``v`` when ``u`` and ``v`` overlap
            in a word of length ``n + 1``.
        """

        if n < self.window:
            raise HorizonError(f"Block length {n} is below the window {self.window}")

        graph = nx.DiGraph()
        graph.add_nodes_from(self.language(n))
        for w in self.language(n + 1):
            graph.add_edge(w[:-1], w[1:])

        return graph

    def __eq__(self, other):
        if not isinstance(other, Sft):
            return NotImplemented

        return self.alphabet == other.alphabet and self.window == other.window and self.essential == other.essential

    def __hash__(self):
        return hash((self.alphabet, self.window, self.essential))

    def __repr__(self):
        return f"<{type(self).__name__} window={self.window} |allowed|={len(self.allowed)}>"

def graph_period(graph):
    """Gets the period of a strongly connected graph.

    The period is the gcd of the lengths of the graph's cycles,
    found from breadth-first levels as the gcd of
    ``level(u) + 1 - level(v)`` over the edges ``u -> v``.

    Parameters
    ----------
    graph : :class:`networkx.DiGraph` or :class:`networkx.MultiDiGraph`
        A strongly connected graph with at least one edge.

    Returns
    -------
    :class:`int`
        The period.
    """

    root   = next(iter(graph))
    levels = nx.single_source_shortest_path_length(graph, root)

    return util.gcd_all(levels[u] + 1 - levels[v] for u, v in graph.edges())

def is_transitive(sft):
    """Checks whether a subshift is transitive.

    An SFT is transitive exactly when its pruned de Bruijn graph
    is strongly connected.

    Raises
    ------
    :exc:`~.EmptySubshiftError`
        If the subshift is empty.
    """

    sft._check_nonempty()

    return nx.is_strongly_connected(sft.pruned)

def is_mixing(sft):
    """Checks whether a subshift is mixing.

    An SFT is mixing exactly when it is transitive and its
    pruned graph has period 1.

    Raises
    ------
    :exc:`~.EmptySubshiftError`
        If the subshift is empty.

    Examples
    --------
    >>> import glimca
    >>> a = glimca.Alphabet("01")
    >>> glimca.is_mixing(glimca.Sft.from_forbidden(a, ["11"]))
    True
    >>> glimca.is_mixing(glimca.Sft.from_forbidden(a, ["00", "11"]))
    False
    """

    return is_transitive(sft) and graph_period(sft.pruned) == 1

def _recurrent_components(sft):
    # Strongly connected components carrying at least one cycle
    components = []
    for nodes in nx.strongly_connected_components(sft.pruned):
        sub = sft.pruned.subgraph(nodes)
        if sub.number_of_edges() > 0:
            components.append(sub)

    return sorted(components, key=lambda sub: min(sft.alphabet.encode(k) for _, _, k in sub.edges(keys=True)))

def sigma_period(sft):
    """Gets the period of each irreducible component of a subshift.

    Returns
    -------
    :class:`list` of :class:`int`
        One period per irreducible component, ordered
        by each component's smallest allowed word.

    Raises
    ------
    :exc:`~.EmptySubshiftError`
        If the subshift is empty.

    Examples
    --------
    >>> import glimca
    >>> glimca.sigma_period(glimca.Sft.from_forbidden(glimca.Alphabet("01"), ["00", "11"]))
    [2]
    """

    sft._check_nonempty()

    return [graph_period(sub) for sub in _recurrent_components(sft)]
