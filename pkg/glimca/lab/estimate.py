"""Contains :func:`~.estimate_generic_language`."""

import asyncio
import logging
import numpy as np

from .. import util
from ..errors import BudgetExceeded
from ..subshifts import LanguageSample, Provenance
from .bounds import Bounds

__all__ = [
    "sample_states",
    "estimate_generic_language",
    "estimate_generic_language_async",
    "language_profile",
]

logger = logging.getLogger(__name__)

def sample_states(alphabet, bounds, indices):
    """Draws the initial configurations with the given sample indices.

    Sample ``i`` is drawn from its own stream, seeded with
    ``SeedSequence(seed, spawn_key=(i,))``, so a sample does not
    depend on which other samples are drawn alongside it.

    Returns
    -------
    :class:`numpy.ndarray`
        Symbol indices of shape ``(len(indices), period)``.
    """

    rows = [
        np.random.default_rng(np.random.SeedSequence(bounds.seed, spawn_key=(int(i),)))
            .integers(0, alphabet.size, size=bounds.period)

        for i in indices
    ]

    return np.array(rows, dtype=np.int64).reshape(len(rows), bounds.period)

def _window_codes(states, n, base):
    codes = np.zeros(states.shape, dtype=np.int64)
    for k in range(n):
        codes = codes * base + np.roll(states, -k, axis=-1)

    return np.unique(codes)

def _step(rule, states):
    if rule.table() is not None:
        return rule.step_indices(states)

    alphabet = rule.alphabet

    return np.array([alphabet.encode(rule.cyclic_image(alphabet.decode(row))) for row in states], dtype=np.int64)

def _sample_chunk(rule, bounds, indices):
    states = sample_states(rule.alphabet, bounds, indices)
    base   = rule.alphabet.size
    codes  = set()

    for t in range(bounds.T_max + 1):
        if t >= bounds.T0:
            codes.update(int(c) for c in _window_codes(states, bounds.n, base))

        if t < bounds.T_max:
            states = _step(rule, states)

    return codes

def _decode(code, n, alphabet):
    digits = []
    for _ in range(n):
        code, digit = divmod(code, alphabet.size)
        digits.append(digit)

    return alphabet.decode(reversed(digits))

async def estimate_generic_language_async(rule, bounds=None, *, workers=4):
    """Estimates the language of the generic limit set by sampling.

    ``N`` random periodic configurations of period ``period`` are run
    up to ``T_max``, and every word of length ``n`` seen at some time
    in ``[T0, T_max]`` is kept. The samples are split into chunks run
    concurrently, and the result does not depend on the chunking.

    Parameters
    ----------
    rule : :class:`~.LocalRule`
        The local rule.
    bounds : :class:`~.Bounds`, optional
        The bounds.
    workers : :class:`int`
        How many chunks to run at once.

    Returns
    -------
    :class:`~.LanguageSample`
        The factor-closed sample, marked as sampled with its seed.

    Raises
    ------
    :exc:`~.BudgetExceeded`
        If words of length ``n`` cannot be encoded.
    """

    bounds = util.default(bounds, Bounds())

    if rule.alphabet.size ** bounds.n >= 2**62:
        raise BudgetExceeded("window codes", rule.alphabet.size ** bounds.n, 2**62)

    provenance = Provenance.sampled(
        bounds.seed,

        N      = bounds.N,
        T0     = bounds.T0,
        T_max  = bounds.T_max,
        period = bounds.period,
        n      = bounds.n,
    )

    if bounds.n == 0:
        return LanguageSample.from_words(rule.alphabet, [()], max_length=0, provenance=provenance)

    workers = max(1, min(workers, bounds.N))
    chunks  = [c for c in np.array_split(np.arange(bounds.N), workers) if len(c) > 0]

    loop    = asyncio.get_running_loop()
    results = await asyncio.gather(*(
        loop.run_in_executor(None, _sample_chunk, rule, bounds, chunk)
        for chunk in chunks
    ))

    codes = set().union(*results)
    words = [_decode(code, bounds.n, rule.alphabet) for code in sorted(codes)]

    logger.info("Sampled %d words of length %d from %d configurations", len(words), bounds.n, bounds.N)

    return LanguageSample.from_words(rule.alphabet, words, max_length=bounds.n, provenance=provenance)

def estimate_generic_language(rule, bounds=None, *, workers=4):
    """Runs :func:`estimate_generic_language_async` to completion."""

    return asyncio.run(estimate_generic_language_async(rule, bounds, workers=workers))

def language_profile(sample):
    """Gets the number of words of each length in a sample.

    Examples
    --------
    >>> import glimca
    >>> s = glimca.LanguageSample.from_words(glimca.Alphabet("01"), [tuple("011")])
    >>> glimca.language_profile(s)
    (1, 2, 2, 1)
    """

    return tuple(len(sample.words(n)) for n in range(sample.max_length + 1))
