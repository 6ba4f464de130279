"""Contains :func:`~.search_forcing_word`."""

import collections
import logging

from .. import util
from ..enums import CertificateKind
from ..errors import HorizonError
from ..automata import Cylinder, image_sets
from ..subshifts import LanguageSample
from .bounds import Bounds
from .certificate import Certificate, replays
from .enabling import contexts

__all__ = [
    "ForcingResult",
    "kill_time",
    "search_forcing_word",
    "forcing_from_empty",
]

logger = logging.getLogger(__name__)

class ForcingResult(collections.namedtuple("ForcingResult", "found cylinder time stuck certificate")):
    """The result of :func:`search_forcing_word`.

    Parameters
    ----------
    found : :class:`bool`
        Whether a forcing cylinder was found.
    cylinder : :class:`~.Cylinder`
        The forcing cylinder, or the last cylinder tried.
    time : :class:`int` or ``None``
        The time from which every forbidden word is absent.
    stuck : :class:`tuple` or ``None``
        The forbidden word no extension removed.
    certificate : :class:`~.Certificate` or ``None``
        The evidence, when found.
    """

    __slots__ = ()

def kill_time(rule, cylinder, word, bounds):
    """Gets when a word stops appearing at 0 in images of a cylinder.

    Returns
    -------
    :class:`int`
        The first ``T`` such that no image at any ``t`` in ``[T, T_max]``
        shows ``word`` at 0. This is ``T_max + 1`` if it shows at ``T_max``.
    """

    last = -1
    for t, words, offset in image_sets(rule, cylinder, bounds.T_max, (0, len(word) - 1), cap=bounds.budget):
        if words.contains_at(word, offset):
            last = t

    return last + 1

def search_forcing_word(rule, seed, n, bounds=None, language_oracle=None):
    """Searches for a cylinder whose images avoid every word outside a language.

    The words of length ``n`` missing from ``language_oracle`` are taken in
    lexicographic order. For each one, the current cylinder is extended on
    both sides, trying extensions by total length, then left length, then
    lexicographically, until the word is absent from images for the last
    ``K`` or more steps up to ``T_max``.

    Parameters
    ----------
    rule : :class:`~.LocalRule`
        The local rule.
    seed : :class:`~.Cylinder`
        The cylinder to start from.
    n : :class:`int`
        The word length.
    bounds : :class:`~.Bounds`, optional
        The bounds, ``U`` limiting each extension.
    language_oracle : :class:`~.LanguageSample`
        The words allowed to remain.

    Returns
    -------
    :class:`ForcingResult`
        The cylinder and time, or the word no extension removed.

    Raises
    ------
    :exc:`~.HorizonError`
        If the oracle does not cover length ``n``.
    """

    bounds = util.default(bounds, Bounds())

    if language_oracle is None:
        raise ValueError("A language oracle is required")

    if n > language_oracle.max_length:
        raise HorizonError(f"Oracle covers lengths up to {language_oracle.max_length}, not {n}")

    allowed   = language_oracle.words(n)
    forbidden = [u for u in rule.alphabet.words(n) if u not in allowed]
    cylinder  = Cylinder(rule.alphabet.check_word(seed.word), seed.position)

    extensions = contexts(rule.alphabet, bounds.U)
    latest     = bounds.T_max - bounds.K + 1

    for u in forbidden:
        if kill_time(rule, cylinder, u, bounds) <= latest:
            continue

        for left, right in extensions:
            candidate = cylinder.extend(left, right)

            if kill_time(rule, candidate, u, bounds) <= latest:
                logger.debug("Extension %r removes %r", (left, right), u)

                cylinder = candidate
                break
        else:
            logger.info("No extension removes %r", u)

            return ForcingResult(False, cylinder, None, u, None)

    time = max([kill_time(rule, cylinder, u, bounds) for u in forbidden], default=0)

    inputs = {"seed": seed, "n": n, "bounds": bounds, "allowed": frozenset(allowed)}
    certificate = Certificate(CertificateKind.Forcing, cylinder, time, True, None, inputs)

    return ForcingResult(True, cylinder, time, None, certificate)

def forcing_from_empty(rule, n, bounds=None, language_oracle=None):
    """Runs :func:`search_forcing_word` from the empty cylinder, which is all of ``A^Z``.

    Examples
    --------
    >>> import glimca
    >>> rule   = glimca.LocalRule.from_builtin("min")
    >>> zeros  = glimca.LanguageSample.from_words(rule.alphabet, [tuple("00")])
    >>> bounds = glimca.Bounds(U=2, T_max=4, K=2)
    >>> result = glimca.forcing_from_empty(rule, 2, bounds, zeros)
    >>> result.cylinder.word, result.time
    (('1', '0'), 1)
    """

    return search_forcing_word(rule, Cylinder((), 0), n, bounds, language_oracle)

@replays(CertificateKind.Forcing)
def _replay(certificate, rule):
    inputs = certificate.inputs
    oracle = LanguageSample.from_words(rule.alphabet, inputs["allowed"], max_length=inputs["n"])

    return search_forcing_word(rule, inputs["seed"], inputs["n"], inputs["bounds"], oracle).certificate
