"""Contains :func:`~.restriction_classifier`."""

import collections
import fractions
import logging

from .. import util
from ..enums import CertificateKind, RestrictionKind
from ..errors import AlphabetError
from ..automata import determined_image
from .bounds import Bounds
from .certificate import Certificate, replays

__all__ = [
    "Classification",
    "minimal_neighborhood",
    "restriction_classifier",
]

logger = logging.getLogger(__name__)

class Classification(collections.namedtuple("Classification", "kind shift period oblique neighborhoods certificate")):
    """The result of :func:`restriction_classifier`.

    Parameters
    ----------
    kind : :class:`~.RestrictionKind`
        The strongest class found.
    shift : :class:`int` or ``None``
        ``k`` when the restriction is ``sigma^k``.
    period : :class:`tuple` or ``None``
        ``(k, p)`` when ``f^(k+p) = f^k`` on the subshift.
    oblique : :class:`int` or ``None``
        The first power whose neighborhood can be taken
        strictly on one side of 0.
    neighborhoods : :class:`dict`
        The minimal neighborhood ``(a, b)`` of each power, ``None``
        when the power is constant.
    certificate : :class:`~.Certificate`
        The evidence.
    """

    __slots__ = ()

    @property
    def rates(self):
        """The neighborhood of each power, divided by the power."""

        return {
            m: None if nb is None else (fractions.Fraction(nb[0], m), fractions.Fraction(nb[1], m))
            for m, nb in self.neighborhoods.items()
        }

    def describe(self):
        """Gets a short description of the class."""

        if self.kind == RestrictionKind.Shift:
            text = f"shift({self.shift})"
        elif self.kind == RestrictionKind.EventuallyPeriodic:
            text = f"eventually-periodic(k={self.period[0]}, p={self.period[1]})"
        else:
            text = self.kind.value

        if self.oblique is not None and self.kind != RestrictionKind.EventuallyOblique:
            text += ", eventually-oblique"

        return text

def _images(rule, sft, m):
    return {w: determined_image(rule, w, m)[0] for w in sft.language(2 * rule.radius * m + 1)}

def _determined_by(images, reach, a, b):
    seen = {}
    for w, image in images.items():
        key = w[a + reach:b + reach + 1]

        if seen.setdefault(key, image) != image:
            return False

    return True

def minimal_neighborhood(rule, sft, m):
    """Gets the smallest interval of cells that determines ``f^m`` on a subshift.

    Returns
    -------
    :class:`tuple` or ``None``
        The interval ``(a, b)``, the first by width then by ``a``.
        ``None`` when ``f^m`` is constant on the subshift.
    """

    images = _images(rule, sft, m)
    reach  = rule.radius * m

    if len(set(images.values())) <= 1:
        return None

    for width in range(1, 2 * reach + 2):
        for a in range(-reach, reach - width + 2):
            if _determined_by(images, reach, a, a + width - 1):
                return (a, a + width - 1)

    return (-reach, reach)

def _find_shift(rule, sft):
    images = _images(rule, sft, 1)
    r      = rule.radius

    for k in sorted(range(-r, r + 1), key=abs):
        if all(image == w[r + k] for w, image in images.items()):
            return k

    return None

def _find_period(rule, sft, m_max):
    r = rule.radius

    for total in range(1, m_max + 1):
        images = _images(rule, sft, total)

        for k in range(total):
            p = total - k

            if all(
                image == (determined_image(rule, w[r * p:len(w) - r * p], k)[0] if k > 0 else w[r * total])

                for w, image in images.items()
            ):
                return (k, p)

    return None

def _find_oblique(rule, sft, m_max):
    for m in range(1, m_max + 1):
        reach = rule.radius * m
        if reach == 0:
            continue

        images = _images(rule, sft, m)
        if _determined_by(images, reach, 1, reach) or _determined_by(images, reach, -reach, -1):
            return m

    return None

def restriction_classifier(rule, sft, m_max=None, *, bounds=None):
    """Classifies the restriction of a cellular automaton to a subshift.

    Parameters
    ----------
    rule : :class:`~.LocalRule`
        The local rule.
    sft : :class:`~.Sft`
        The subshift, whose symbols must be in the rule's alphabet.
    m_max : :class:`int`, optional
        The largest power examined, defaulting to the bounds' ``m_max``.
    bounds : :class:`~.Bounds`, optional
        The bounds.

    Returns
    -------
    :class:`Classification`
        Identity or ``shift(k)`` when ``f`` acts as ``sigma^k``,
        eventually periodic when ``f^(k+p) = f^k`` with
        ``k + p <= m_max``, eventually oblique when some power's
        neighborhood lies on one side of 0, and other otherwise.

    Examples
    --------
    >>> import glimca
    >>> rule = glimca.LocalRule.from_builtin("shift")
    >>> full = glimca.Sft.full_shift(rule.alphabet)
    >>> glimca.restriction_classifier(rule, full, 2).describe()
    'shift(1), eventually-oblique'
    """

    bounds = util.default(bounds, Bounds())
    m_max  = util.default(m_max, bounds.m_max)

    for symbol in sft.alphabet:
        if symbol not in rule.alphabet:
            raise AlphabetError(f"Subshift symbol {symbol!r} is not in the rule's alphabet")

    sft._check_nonempty()

    neighborhoods = {m: minimal_neighborhood(rule, sft, m) for m in range(1, m_max + 1)}

    shift   = _find_shift(rule, sft)
    period  = _find_period(rule, sft, m_max)
    oblique = _find_oblique(rule, sft, m_max)

    if shift == 0:
        kind = RestrictionKind.Identity
    elif shift is not None:
        kind = RestrictionKind.Shift
    elif period is not None:
        kind = RestrictionKind.EventuallyPeriodic
    elif oblique is not None:
        kind = RestrictionKind.EventuallyOblique
    else:
        kind = RestrictionKind.Other

    logger.debug("Restriction of %s is %s", rule.name, kind.value)

    certificate = Certificate(
        CertificateKind.Classification,
        (kind, shift, period, oblique),
        m_max,
        True,
        None,
        {"sft": sft, "m_max": m_max},
    )

    return Classification(kind, shift, period, oblique, neighborhoods, certificate)

@replays(CertificateKind.Classification)
def _replay(certificate, rule):
    return restriction_classifier(rule, certificate.inputs["sft"], certificate.inputs["m_max"]).certificate
