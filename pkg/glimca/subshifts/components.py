"""Chain components, approximations and images of subshifts."""

import collections
import logging
from networkx.utils import UnionFind

from ..errors import AlphabetError, HorizonError
from ..automata import determined_image
from .sft import Sft, is_transitive

__all__ = [
    "ChainVerdict",
    "ChainPartition",
    "ComponentPermutation",
    "sft_approximation",
    "is_chain_transitive",
    "chain_components",
    "block_image",
    "component_permutation",
]

logger = logging.getLogger(__name__)

class ChainVerdict(collections.namedtuple("ChainVerdict", "holds failing_n horizon")):
    """The result of :func:`is_chain_transitive`.

    Parameters
    ----------
    holds : :class:`bool`
        Whether every approximation up to the horizon is transitive.
    failing_n : :class:`int` or ``None``
        The smallest order whose approximation is not transitive.
    horizon : :class:`int`
        The largest order checked.
    """

    __slots__ = ()

    def __bool__(self):
        return self.holds

class ChainPartition(collections.namedtuple("ChainPartition", "n classes components")):
    """The result of :func:`chain_components`.

    Parameters
    ----------
    n : :class:`int`
        The word length of the partition.
    classes : :class:`tuple` of :class:`frozenset`
        The classes of words of length ``n``.
    components : :class:`tuple` of :class:`~.Sft`
        The subshift of each class.
    """

    __slots__ = ()

    def class_of(self, word):
        """Gets the index of the class containing ``word``, or ``None``."""

        word = tuple(word)
        for i, cls in enumerate(self.classes):
            if word in cls:
                return i

        return None

class ComponentPermutation(collections.namedtuple("ComponentPermutation", "partition mapping unmatched")):
    """The result of :func:`component_permutation`.

    Parameters
    ----------
    partition : :class:`ChainPartition`
        The components being mapped.
    mapping : :class:`dict`
        Maps each class index to the index of the class
        containing its image, when there is one.
    unmatched : :class:`tuple` of :class:`int`
        The classes whose image lies in no single class.
    """

    __slots__ = ()

    @property
    def is_permutation(self):
        k = len(self.partition.classes)

        return len(self.unmatched) == 0 and sorted(self.mapping.values()) == list(range(k))

    @property
    def is_cyclic(self):
        """Whether the classes form a single cycle under the map."""

        if not self.is_permutation:
            return False

        k       = len(self.partition.classes)
        current = 0
        for step in range(1, k + 1):
            current = self.mapping[current]

            if current == 0:
                return step == k

        return False

    @property
    def cycle_type(self):
        """The sorted cycle lengths of the map, or ``None`` if it is not a permutation."""

        if not self.is_permutation:
            return None

        lengths = []
        seen    = set()
        for start in sorted(self.mapping):
            if start in seen:
                continue

            length  = 0
            current = start
            while current not in seen:
                seen.add(current)
                current = self.mapping[current]
                length += 1

            lengths.append(length)

        return tuple(sorted(lengths))

def sft_approximation(sample, n):
    """Gets the order-``n`` approximation of a language sample.

    Parameters
    ----------
    sample : :class:`~.LanguageSample`
        The sample.
    n : :class:`int`
        The order, at least 1.

    Returns
    -------
    :class:`~.Sft`
        The SFT whose allowed words are the sample's words of length ``n``.
        It is empty when the sample has no such words.

    Raises
    ------
    :exc:`~.HorizonError`
        If ``n`` is beyond the sample's lengths.

    Examples
    --------
    >>> import glimca
    >>> a = glimca.Alphabet("01")
    >>> s = glimca.LanguageSample.from_words(a, [tuple("0011")])
    >>> sorted(glimca.sft_approximation(s, 2).essential)
    [('0', '0'), ('0', '1'), ('1', '1')]
    """

    if n < 1:
        raise HorizonError(f"Approximation order must be positive, got {n}")

    return Sft(sample.alphabet, n, sample.words(n))

def is_chain_transitive(sample, horizon):
    """Checks chain transitivity of a sample up to a horizon.

    A subshift is chain transitive when all of its
    approximations are transitive. Empty approximations
    count as not transitive.

    Returns
    -------
    :class:`ChainVerdict`
        The verdict, with the first failing order if any.
    """

    if horizon > sample.max_length:
        raise HorizonError(f"Horizon {horizon} is beyond the sample's lengths ({sample.max_length})")

    for n in range(1, horizon + 1):
        approximation = sft_approximation(sample, n)

        if approximation.is_empty() or not is_transitive(approximation):
            logger.debug("Approximation of order %d is not transitive", n)

            return ChainVerdict(False, n, horizon)

    return ChainVerdict(True, None, horizon)

def chain_components(sft, n):
    """Splits a subshift into its order-``n`` chain components.

    Two words of length ``n`` are related when they occur in one point,
    the second at or to the right of the first. The classes are the
    symmetric and transitive closure of that relation, found by merging
    the factors of every word of length ``max(n, window) + 1`` with a
    disjoint-set structure.

    Parameters
    ----------
    sft : :class:`~.Sft`
        A nonempty subshift.
    n : :class:`int`
        The word length, at least 1.

    Returns
    -------
    :class:`ChainPartition`
        The classes, ordered by their smallest word, with one
        subshift per class. The classes are disjoint, cover the
        words of length ``n``, and no allowed word of the subshift
        meets two classes.

    Examples
    --------
    >>> import glimca
    >>> sft = glimca.Sft.from_forbidden(glimca.Alphabet("01"), ["01", "10"])
    >>> [sorted(c) for c in glimca.chain_components(sft, 1).classes]
    [[('0',)], [('1',)]]
    """

    if n < 1:
        raise HorizonError(f"Component order must be positive, got {n}")

    sft._check_nonempty()

    block  = max(n, sft.window)
    joined = UnionFind()
    for w in sft.language(n):
        # Looking a word up adds it as a singleton
        joined[w]

    for w in sft.language(block + 1):
        first = w[:n]
        for i in range(1, len(w) - n + 1):
            joined.union(first, w[i:i + n])

    order   = sft.alphabet.encode
    classes = sorted(
        (frozenset(c) for c in joined.to_sets()),

        key = lambda c: min(order(w) for w in c),
    )

    blocks     = sft.language(block)
    components = tuple(
        Sft(sft.alphabet, block, [w for w in blocks if w[:n] in c])
        for c in classes
    )

    return ChainPartition(n, tuple(classes), components)

def _check_alphabets(rule, sft):
    for symbol in sft.alphabet:
        if symbol not in rule.alphabet:
            raise AlphabetError(f"Subshift symbol {symbol!r} is not in the rule's alphabet")

def _image_words(rule, sft, n):
    return frozenset(determined_image(rule, w, 1) for w in sft.language(n + 2 * rule.radius))

def block_image(rule, sft, n):
    """Gets an SFT presentation of ``f(X)`` exact on words of length ``n``.

    Parameters
    ----------
    rule : :class:`~.LocalRule`
        The local rule of ``f``.
    sft : :class:`~.Sft`
        The subshift ``X``.
    n : :class:`int`
        The word length, at least 1.

    Returns
    -------
    :class:`~.Sft`
        The SFT of window ``n`` allowing exactly the words of
        length ``n`` of ``f(X)``.
    """

    if n < 1:
        raise HorizonError(f"Image order must be positive, got {n}")

    _check_alphabets(rule, sft)

    return Sft(rule.alphabet, n, _image_words(rule, sft, n))

def component_permutation(rule, sft, n):
    """Finds how a cellular automaton maps the chain components of a subshift.

    Parameters
    ----------
    rule : :class:`~.LocalRule`
        The local rule of ``f``.
    sft : :class:`~.Sft`
        A nonempty subshift.
    n : :class:`int`
        The order of the components.

    Returns
    -------
    :class:`ComponentPermutation`
        The induced map on components.
    """

    _check_alphabets(rule, sft)

    partition = chain_components(sft, n)

    mapping   = {}
    unmatched = []
    for i, component in enumerate(partition.components):
        image = _image_words(rule, component, n)

        target = None
        for j, cls in enumerate(partition.classes):
            if image <= cls:
                target = j
                break

        if target is None:
            unmatched.append(i)
        else:
            mapping[i] = target

    return ComponentPermutation(partition, mapping, tuple(unmatched))
