"""Contains :func:`~.realizability_report`."""

import collections
import csv
import io
import logging

from .. import util
from ..enums import RestrictionKind
from ..subshifts import (
    LanguageSample,
    Sft,
    chain_components,
    component_permutation,
    is_chain_transitive,
    is_mixing,
    is_transitive,
    periodic_factor_obstruction,
    sft_approximation,
)
from .bounds import Bounds
from .classifier import restriction_classifier

__all__ = [
    "ReportLine",
    "AnalysisReport",
    "realizability_report",
]

logger = logging.getLogger(__name__)

CANNOT_BE_GENERIC = "cannot be the generic limit set"

class ReportLine(collections.namedtuple("ReportLine", "check hypothesis citation result horizon exact")):
    """One checked hypothesis of an :class:`AnalysisReport`.

    Parameters
    ----------
    check : :class:`str`
        The name of the check.
    hypothesis : :class:`str`
        What was checked.
    citation : :class:`str`
        The known consequence the check bears on.
    result : :class:`str`
        The bounded result.
    horizon : :class:`int`
        The horizon the result holds up to.
    exact : :class:`bool`
        Whether the result was computed from exact words.
    """

    __slots__ = ()

class AnalysisReport(collections.namedtuple("AnalysisReport", "lines exclusions provenance")):
    """The result of :func:`realizability_report`.

    Parameters
    ----------
    lines : :class:`tuple` of :class:`ReportLine`
        The checks, in the order they ran.
    exclusions : :class:`tuple` of :class:`str`
        Why the target cannot be the generic limit set, if it cannot.
    provenance : :class:`~.Provenance`
        Where the target's words came from.
    """

    __slots__ = ()

    @property
    def excluded(self):
        return len(self.exclusions) > 0

    @property
    def evidence(self):
        """``exact``, or the seed and horizons of sampled words."""

        if self.provenance.is_exact:
            return "exact"

        params = self.provenance.params

        return f"seed={self.provenance.seed} T0={params.get('T0')} T_max={params.get('T_max')}"

    def to_text(self):
        """Gets the report as text, one check per line."""

        out = []
        for line in self.lines:
            out.append(f"{line.check}: {line.result} [{line.citation}] horizon={line.horizon} {self.evidence}")

        if self.excluded:
            for reason in self.exclusions:
                out.append(f"excluded: {reason}")
        else:
            out.append("no exclusions")

        return "\n".join(out) + "\n"

    def to_csv(self):
        """Gets the report as CSV, with one row per check."""

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")

        writer.writerow(["check", "hypothesis", "citation", "result", "horizon", "evidence"])
        for line in self.lines:
            writer.writerow([line.check, line.hypothesis, line.citation, line.result, line.horizon, self.evidence])

        for reason in self.exclusions:
            writer.writerow(["exclusion", "", "", reason, "", ""])

        return buffer.getvalue()

def _language_class(classification):
    if classification.kind in (RestrictionKind.Identity, RestrictionKind.EventuallyPeriodic):
        return "equicontinuous restriction gives a Sigma^0_1 language"

    if classification.oblique is not None:
        return "eventually oblique restriction gives a Pi^0_2 language"

    return "every generic limit set has a Sigma^0_3 language"

def realizability_report(target, rule=None, *, horizon=None, bounds=None):
    """Checks the known necessary conditions for being a generic limit set.

    Parameters
    ----------
    target : :class:`~.Sft` or :class:`~.LanguageSample`
        The candidate subshift. A sample is read through its
        approximation at its longest length.
    rule : :class:`~.LocalRule`, optional
        The cellular automaton the target is meant to be the generic
        limit set of. Without it, only rule-independent checks run.
    horizon : :class:`int`, optional
        The longest word length examined for an :class:`~.Sft` target,
        defaulting to the bounds' ``n``.
    bounds : :class:`~.Bounds`, optional
        The bounds.

    Returns
    -------
    :class:`AnalysisReport`
        The checks and any exclusions. Checks that do not apply, such
        as every check on an empty target, are left out.

    Examples
    --------
    >>> import glimca
    >>> sft = glimca.Sft.from_forbidden(glimca.Alphabet("01"), ["00", "11"])
    >>> glimca.realizability_report(sft, horizon=4).exclusions[0]
    'finite chain components with a periodic factor: cannot be the generic limit set (periodic finite factor)'
    """

    bounds = util.default(bounds, Bounds())

    if isinstance(target, LanguageSample):
        sample  = target
        horizon = sample.max_length
        sft     = sft_approximation(sample, horizon) if horizon > 0 else None
    elif isinstance(target, Sft):
        horizon = util.default(horizon, bounds.n)
        sft     = target
        sample  = LanguageSample.from_sft(sft, horizon)
    else:
        raise TypeError(f"Cannot report on {target!r}")

    exact = sample.provenance.is_exact

    lines      = []
    exclusions = []

    def add(check, hypothesis, citation, result):
        lines.append(ReportLine(check, hypothesis, citation, result, horizon, exact))

    if sft is None or sft.is_empty():
        logger.info("Empty target, no checks apply")

        return AnalysisReport((), (), sample.provenance)

    obstruction = periodic_factor_obstruction(sft)
    add(
        "obstruction",
        "finite chain components with a periodic factor",
        "a periodic finite factor excludes every cellular automaton",
        obstruction.describe(),
    )

    if obstruction.obstructed:
        exclusions.append(f"finite chain components with a periodic factor: {CANNOT_BE_GENERIC} (periodic finite factor)")

    transitive = is_transitive(sft)
    mixing     = transitive and is_mixing(sft)
    add(
        "mixing",
        "subshift is mixing",
        "identity restriction forces mixing",
        "mixing" if mixing else ("transitive, not mixing" if transitive else "not transitive"),
    )

    chain = is_chain_transitive(sample, horizon)
    add(
        "chain transitivity",
        "every approximation is transitive",
        "shift restriction forces chain transitivity",
        f"holds up to n={horizon}" if chain.holds else f"fails at n={chain.failing_n}",
    )

    partition = chain_components(sft, sft.window)
    add(
        "chain components",
        f"chain components of order {sft.window}",
        "a cellular automaton permutes the components cyclically",
        f"{len(partition.classes)} components",
    )

    if rule is not None:
        classification = restriction_classifier(rule, sft, bounds.m_max)
        add(
            "classifier",
            f"restriction of {rule.name} up to power {bounds.m_max}",
            _language_class(classification),
            classification.describe(),
        )

        if classification.kind == RestrictionKind.Identity and not mixing:
            exclusions.append(f"identity restriction forces mixing: {CANNOT_BE_GENERIC} for {rule.name}")

        if classification.kind == RestrictionKind.Shift and not chain.holds:
            exclusions.append(f"shift restriction forces chain transitivity: {CANNOT_BE_GENERIC} for {rule.name}")

        permutation = component_permutation(rule, sft, sft.window)
        if permutation.is_permutation:
            result = "cyclic" if permutation.is_cyclic else f"cycle type {permutation.cycle_type}"
        else:
            result = f"not a permutation, unmatched {permutation.unmatched}"

        add(
            "component permutation",
            f"{rule.name} maps the chain components onto each other",
            "a cellular automaton permutes the components cyclically",
            result,
        )

        if permutation.is_permutation and not permutation.is_cyclic:
            exclusions.append(f"components are not cyclically permuted: {CANNOT_BE_GENERIC} for {rule.name}")

    for line in lines:
        logger.debug("%s: %s", line.check, line.result)

    return AnalysisReport(tuple(lines), tuple(exclusions), sample.provenance)
