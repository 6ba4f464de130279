"""Contains :class:`~.WordSet`."""

import logging

from .. import limits
from ..errors import BudgetExceeded, HorizonError

__all__ = [
    "WordSet",
]

logger = logging.getLogger(__name__)

def _reduce(alphabet, layers):
    # Merges equivalent nodes and drops nodes with no completion, last layer first
    length  = len(layers)
    mapping = None
    reduced = [None] * length

    for i in reversed(range(length)):
        signatures = {}
        new_nodes  = []
        new_map    = []

        for node in layers[i]:
            edges = {}
            for symbol in alphabet.symbols:
                child = node.get(symbol)
                if child is None:
                    continue

                # Every node past the last layer accepts
                child = 0 if mapping is None else mapping[child]
                if child is not None:
                    edges[symbol] = child

            if len(edges) == 0:
                new_map.append(None)
                continue

            signature = tuple(edges.items())
            index     = signatures.get(signature)
            if index is None:
                index = len(new_nodes)
                signatures[signature] = index
                new_nodes.append(edges)

            new_map.append(index)

        reduced[i] = tuple(new_nodes)
        mapping    = new_map

    return reduced

class WordSet:
    """A set of words of one length.

    The set is stored as a reduced layered automaton: layer ``i``
    holds the distinct "futures" that can follow the first ``i``
    symbols of a word in the set. Sets of images of cylinders under
    many steps of a cellular automaton stay small in this form, which
    is what makes exact image computations feasible.

    Use :meth:`product` to make a :class:`WordSet`, then
    :meth:`image` and :meth:`window` to transform it.

    Parameters
    ----------
    alphabet : :class:`~.Alphabet`
        The alphabet of the words.
    length : :class:`int`
        The length of every word in the set.
    layers : :class:`list`
        For each position, the nodes at that position, each a :class:`dict`
        from symbols to node indices in the next layer.
    """

    def __init__(self, alphabet, length, layers, *, empty=False):
        self.alphabet = alphabet
        self.length   = length
        self.layers   = _reduce(alphabet, layers) if not empty else [()] * length

        self.empty = empty or (length > 0 and len(self.layers[0]) == 0)

    @classmethod
    def product(cls, alphabet, choices):
        """Makes the set of words whose ``i``-th symbol lies in ``choices[i]``.

        Examples
        --------
        >>> import glimca
        >>> a = glimca.Alphabet("01")
        >>> sorted(glimca.WordSet.product(a, [("0",), ("0", "1")]))
        [('0', '0'), ('0', '1')]
        """

        choices = [tuple(c) for c in choices]
        if any(len(c) == 0 for c in choices):
            return cls(alphabet, len(choices), [], empty=True)

        layers = [[{symbol: 0 for symbol in alphabet.symbols if symbol in c}] for c in choices]

        return cls(alphabet, len(choices), layers)

    @property
    def width(self):
        """The largest number of nodes in a layer."""

        return max((len(layer) for layer in self.layers), default=1)

    def __len__(self):
        if self.empty:
            return 0

        counts = [1]
        for layer in reversed(self.layers):
            counts = [sum(counts[child] for child in node.values()) for node in layer]

        return counts[0]

    def __bool__(self):
        return not self.empty

    def __iter__(self):
        if self.empty:
            return

        stack = [(0, 0, ())]
        while len(stack) > 0:
            depth, node, prefix = stack.pop()

            if depth == self.length:
                yield prefix
                continue

            edges = self.layers[depth][node]
            for symbol in reversed(list(edges)):
                stack.append((depth + 1, edges[symbol], prefix + (symbol,)))

    def __contains__(self, word):
        return self.contains_at(word, 0)

    def contains_at(self, word, start):
        """Checks whether some word of the set shows ``word`` at position ``start``."""

        word = tuple(word)
        if self.empty or start < 0 or start + len(word) > self.length:
            return False

        current = set(range(len(self.layers[start]))) if start < self.length else {0}
        for i, symbol in enumerate(word):
            layer   = self.layers[start + i]
            current = {layer[n][symbol] for n in current if symbol in layer[n]}

            if len(current) == 0:
                return False

        return True

    def window(self, start, length):
        """Gets the set of factors of the words at positions ``[start, start + length)``."""

        if start < 0 or start + length > self.length:
            raise HorizonError(f"Window [{start}, {start + length}) lies outside words of length {self.length}")

        if self.empty:
            return WordSet(self.alphabet, length, [], empty=True)

        current = {frozenset(range(len(self.layers[start]))): 0} if length > 0 else {}
        layers  = []
        for i in range(length):
            source  = self.layers[start + i]
            indices = {}
            nodes   = []

            for subset in current:
                node = {}
                for symbol in self.alphabet.symbols:
                    children = frozenset(source[n][symbol] for n in subset if symbol in source[n])
                    if len(children) == 0:
                        continue

                    node[symbol] = indices.setdefault(children, len(indices))

                nodes.append(node)

            layers.append(nodes)
            current = indices

        return WordSet(self.alphabet, length, layers)

    def image(self, rule, *, cap=None):
        """Applies a local rule to every word of the set.

        Parameters
        ----------
        rule : :class:`~.LocalRule`
            The rule to apply.
        cap : :class:`int`, optional
            The largest automaton layer allowed while computing.
            Defaults to :func:`~.enumeration_cap`.

        Returns
        -------
        :class:`WordSet`
            The set of the ``length - 2r`` symbols each word determines.

        Raises
        ------
        :exc:`~.HorizonError`
            If the words are shorter than the rule's neighborhood.
        :exc:`~.BudgetExceeded`
            If an intermediate layer exceeds ``cap``.
        """

        cap = limits.enumeration_cap(cap)
        d   = 2 * rule.radius

        if self.length <= d:
            raise HorizonError(f"Words of length {self.length} are too short for radius {rule.radius}")

        out_length = self.length - d
        if self.empty:
            return WordSet(self.alphabet, out_length, [], empty=True)

        # States are (input node, last 2r input symbols)
        start = set()
        stack = [(0, 0, ())]
        while len(stack) > 0:
            depth, node, prefix = stack.pop()

            if depth == d:
                start.add((node, prefix))
                continue

            for symbol, child in self.layers[depth][node].items():
                stack.append((depth + 1, child, prefix + (symbol,)))

        self._check_cap(len(start), cap)

        current = {frozenset(start): 0}
        layers  = []
        for p in range(out_length):
            source  = self.layers[p + d]
            indices = {}
            nodes   = []

            for subset in current:
                transitions = {}
                for node, window in subset:
                    for symbol, child in source[node].items():
                        neighborhood = window + (symbol,)
                        out          = rule.local(neighborhood)

                        transitions.setdefault(out, set()).add((child, neighborhood[1:]))

                edges = {}
                for symbol in self.alphabet.symbols:
                    states = transitions.get(symbol)
                    if states is None:
                        continue

                    self._check_cap(len(states), cap)
                    edges[symbol] = indices.setdefault(frozenset(states), len(indices))

                nodes.append(edges)

            self._check_cap(len(indices), cap)

            layers.append(nodes)
            current = indices

        return WordSet(self.alphabet, out_length, layers)

    @staticmethod
    def _check_cap(size, cap):
        if size > cap:
            raise BudgetExceeded("automaton layer", size, cap)

    def __repr__(self):
        return f"<{type(self).__name__} length={self.length} width={self.width}>"
