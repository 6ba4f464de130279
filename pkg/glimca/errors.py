"""Exceptions raised by glimca.

Every error derives from :exc:`GlimcaError`. Errors caused by bad input
also derive from :exc:`ValueError`, so callers that only care about
"the input was wrong" can keep catching that.
"""

class GlimcaError(Exception):
    """Base class for all glimca errors."""

class AlphabetError(GlimcaError, ValueError):
    """A symbol or alphabet does not match what an operation expects."""

class HorizonError(GlimcaError, ValueError):
    """A word, window or horizon is too small for the requested operation."""

class PreconditionError(GlimcaError, ValueError):
    """A documented precondition of an operation does not hold."""

class EmptySubshiftError(GlimcaError, ValueError):
    """A graph decision was requested on an empty subshift."""

class PredicateRangeError(GlimcaError, ValueError):
    """A tabulated predicate does not cover the arguments a machine can reach."""

class ParseError(GlimcaError, ValueError):
    """A file or literal could not be parsed.

    Parameters
    ----------
    message : :class:`str`
        What went wrong.
    path : :class:`str`, optional
        The file being parsed.
    line : :class:`int`, optional
        The 1-based line number of the offending line.
    """

    def __init__(self, message, *, path=None, line=None):
        self.message = message
        self.path    = path
        self.line    = line

        super().__init__(str(self))

    def __str__(self):
        location = ""

        if self.path is not None:
            location += f"{self.path}:"

        if self.line is not None:
            location += f"{self.line}:"

        if location:
            return f"{location} {self.message}"

        return self.message

class BudgetExceeded(GlimcaError):
    """An exact computation would need more work than the configured cap allows.

    Parameters
    ----------
    what : :class:`str`
        The quantity that exceeded the cap.
    requested : :class:`int`
        How much was needed.
    cap : :class:`int`
        The cap in effect.
    horizon : :class:`int`, optional
        The time horizon at which exactness became unavailable.
    """

    def __init__(self, what, requested, cap, *, horizon=None):
        self.what      = what
        self.requested = requested
        self.cap       = cap
        self.horizon   = horizon

        super().__init__(what, requested, cap)

    def __str__(self):
        message = f"exactness unavailable at this horizon: {self.what} needs {self.requested} > cap {self.cap}"
        if self.horizon is not None:
            message += f" (horizon t={self.horizon})"

        return message

class MachineFault(GlimcaError):
    """A Turing machine tried to move left of its leftmost cell.

    Parameters
    ----------
    report : :class:`~.HaltReport`
        The machine's situation when the fault happened.
    """

    def __init__(self, report):
        self.report = report

        super().__init__(f"left-edge fault in state {report.state!r} after {report.steps} steps")

class MachineTimeout(GlimcaError):
    """A Turing machine did not halt within its step budget.

    Parameters
    ----------
    report : :class:`~.HaltReport`
        The machine's situation when the budget ran out.
    """

    def __init__(self, report):
        self.report = report

        super().__init__(f"no halt within {report.steps} steps (state {report.state!r})")
