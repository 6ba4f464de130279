"""Contains :func:`~.check_enables`."""

import collections
import logging
import numpy as np

from .. import util
from ..enums import CertificateKind, EnablingVerdict
from ..automata import Cylinder, image_sets
from .bounds import Bounds
from .certificate import Certificate, replays

__all__ = [
    "EnablingResult",
    "contexts",
    "check_enables",
]

logger = logging.getLogger(__name__)

class EnablingResult(collections.namedtuple("EnablingResult", "verdict witness hits exact certificate")):
    """The result of :func:`check_enables`.

    Parameters
    ----------
    verdict : :class:`~.EnablingVerdict`
        Supported or refuted at the bounds.
    witness : :class:`tuple` or ``None``
        The refuting context ``(u, w)``.
    hits : :class:`tuple`
        The times the refuting context, or else the last context, hit.
    exact : :class:`bool`
        Whether every context was checked.
    certificate : :class:`~.Certificate`
        The evidence.
    """

    __slots__ = ()

    @property
    def supported(self):
        return self.verdict == EnablingVerdict.Supported

def contexts(alphabet, longest):
    """Gets the context pairs ``(u, w)`` in search order.

    Pairs are ordered by ``|u| + |w|``, then ``|u|``, then
    lexicographically.

    Examples
    --------
    >>> import glimca
    >>> glimca.contexts(glimca.Alphabet("01"), 1)[:3]
    [((), ()), ((), ('0',)), ((), ('1',))]
    """

    words = list(alphabet.words_up_to(longest))

    return sorted(
        ((u, w) for u in words for w in words),

        key = lambda pair: (
            len(pair[0]) + len(pair[1]),
            len(pair[0]),
            alphabet.encode(pair[0]),
            alphabet.encode(pair[1]),
        ),
    )

def _hits(rule, cylinder, s, horizon, budget):
    hits = []
    for t, words, offset in image_sets(rule, cylinder, horizon, (0, len(s) - 1), cap=budget):
        if t > 0 and words.contains_at(s, offset):
            hits.append(t)

    return tuple(hits)

def check_enables(rule, v, s, bounds=None):
    """Checks at bounded depth whether a cylinder enables a word.

    ``v`` enables ``s`` when ``s`` keeps appearing at the origin in
    images of every cylinder ``[u v w]`` refining ``v``. For each
    context with ``|u|, |w| <= U``, each step ``t`` in ``[1, T_max]``
    is a hit when some image of the cylinder shows ``s`` at 0, which
    is decided exactly.

    The verdict is supported when every context hits at least ``K``
    times, including some time in the last ``K`` steps. Otherwise the
    first failing context is the refuting witness. When there are more
    contexts than the budget, ``N`` of them are sampled with the seed.

    Parameters
    ----------
    rule : :class:`~.LocalRule`
        The local rule.
    v : :class:`~.Cylinder`
        The enabling cylinder.
    s : :class:`tuple`
        The word, at the origin.
    bounds : :class:`~.Bounds`, optional
        The bounds.

    Returns
    -------
    :class:`EnablingResult`
        The verdict.

    Raises
    ------
    :exc:`~.BudgetExceeded`
        If an exact check exceeds the budget before a verdict.
    """

    bounds = util.default(bounds, Bounds())
    s      = rule.alphabet.check_word(s)
    v      = Cylinder(rule.alphabet.check_word(v.word), v.position)

    if len(s) == 0:
        raise ValueError("s must be nonempty")

    pairs = contexts(rule.alphabet, bounds.U)
    exact = len(pairs) <= bounds.budget
    if not exact:
        rng     = np.random.default_rng(bounds.seed)
        indices = sorted(rng.choice(len(pairs), size=min(bounds.N, len(pairs)), replace=False))
        pairs   = [pairs[i] for i in indices]

    inputs = {"v": v, "s": s, "bounds": bounds}
    seed   = None if exact else bounds.seed

    hits = ()
    for u, w in pairs:
        hits     = _hits(rule, v.extend(u, w), s, bounds.T_max, bounds.budget)
        terminal = [t for t in hits if t > bounds.T_max - bounds.K]

        if len(hits) < bounds.K or len(terminal) == 0:
            logger.info("Context %r refutes enabling after %d hits", (u, w), len(hits))

            certificate = Certificate(CertificateKind.EnablingRefuted, (u, w), bounds.T_max, exact, seed, inputs)

            return EnablingResult(EnablingVerdict.RefutedAtBound, (u, w), hits, exact, certificate)

    certificate = Certificate(CertificateKind.EnablingSupported, len(pairs), bounds.T_max, exact, seed, inputs)

    return EnablingResult(EnablingVerdict.Supported, None, hits, exact, certificate)

@replays(CertificateKind.EnablingSupported)
@replays(CertificateKind.EnablingRefuted)
def _replay(certificate, rule):
    inputs = certificate.inputs

    return check_enables(rule, inputs["v"], inputs["s"], inputs["bounds"]).certificate
