"""Contains :class:`~.Certificate`."""

import collections

__all__ = [
    "Certificate",
    "replays",
]

_replayers = {}

def replays(kind):
    """Registers the function that re-runs the checks behind a kind of certificate.

    The decorated function is called as ``func(certificate, rule)`` and
    must return the certificate the checks produce now.
    """

    def decorator(func):
        _replayers[kind] = func

        return func

    return decorator

class Certificate(collections.namedtuple("Certificate", "kind witness horizon exact seed inputs")):
    """The evidence behind a bounded verdict.

    Parameters
    ----------
    kind : :class:`~.CertificateKind`
        What is certified.
    witness
        The witness, whose form depends on ``kind``.
    horizon : :class:`int`
        The time horizon the evidence holds up to.
    exact : :class:`bool`
        Whether every check was exhaustive, rather than sampled.
    seed : :class:`int` or ``None``
        The seed of any sampling.
    inputs : :class:`dict`
        The inputs needed to re-run the checks.
    """

    __slots__ = ()

    def replay(self, rule):
        """Re-runs the cited checks.

        Parameters
        ----------
        rule : :class:`~.LocalRule`
            The rule the certificate is about.

        Returns
        -------
        :class:`bool`
            Whether the checks reproduce this certificate exactly.
        """

        try:
            replayer = _replayers[self.kind]
        except KeyError:
            raise ValueError(f"No way to replay {self.kind}") from None

        return replayer(self, rule) == self
