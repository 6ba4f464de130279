"""Enums shared across glimca."""

import enum

class Move(enum.Enum):
    """A Turing machine head move."""

    Left  = "L"
    Right = "R"
    Stay  = "S"

class ProvenanceKind(enum.Enum):
    """How a :class:`~.LanguageSample` was gathered."""

    Exact   = "exact"
    Sampled = "sampled"

class EnablingVerdict(enum.Enum):
    """The verdict of :func:`~.check_enables`."""

    Supported      = "supported"
    RefutedAtBound = "refuted-at-bound"

class ObstructionKind(enum.Enum):
    """The verdict of :func:`~.periodic_factor_obstruction`."""

    Obstructed   = "obstructed"
    Clear        = "clear"
    Inconclusive = "inconclusive"

class CertificateKind(enum.Enum):
    """What a :class:`~.Certificate` certifies."""

    Forcing           = "forcing"
    EnablingSupported = "enabling-supported"
    EnablingRefuted   = "enabling-refuted"
    Classification    = "classification"

class RestrictionKind(enum.Enum):
    """The classes reported by :func:`~.restriction_classifier`."""

    Identity           = "identity"
    Shift              = "shift"
    EventuallyPeriodic = "eventually-periodic"
    EventuallyOblique  = "eventually-oblique"
    Other              = "other"

class Signal(enum.Enum):
    """The first-track symbols of the signal automaton outside the machine tracks.

    The values are the printable names used in symbol names.
    """

    Background = "B"
    Eraser     = "E"
    S1         = "S1"
    S2         = "S2"
    S2Prime    = "S2'"
    S3         = "S3"
    Turnstile  = "|-"

class Arrow(enum.Enum):
    """Tape cells of a simulated machine that do not hold the head."""

    Left  = "<-"
    Right = "->"
