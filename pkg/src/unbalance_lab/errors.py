"""Exception types shared across the package."""

from __future__ import annotations


class UnbalanceLabError(Exception):
    """Base class for every error raised by this package."""


class PositiveSequenceZeroError(UnbalanceLabError):
    """Positive-sequence magnitude is numerically zero; sequence ratios are meaningless."""


class DegenerateTripleError(UnbalanceLabError):
    """All three line voltages vanish: the phase voltages are identical."""


class NotRealizableError(UnbalanceLabError):
    """The three line-voltage magnitudes cannot come from any triple of phasors."""


class EmptyBandError(UnbalanceLabError):
    """No grid sample fell inside the requested unbalance band."""


class ParseError(UnbalanceLabError):
    """A data file could not be parsed. Carries file/row diagnostics."""

    def __init__(self, message: str, *, path: str | None = None, row: int | None = None):
        self.path = path
        self.row = row
        where = ""
        if path is not None:
            where = f" [{path}" + (f", row {row}" if row is not None else "") + "]"
        super().__init__(message + where)


class NotRadialError(UnbalanceLabError):
    """The network graph is not a single radial tree."""


class DanglingReferenceError(UnbalanceLabError):
    """A record references a bus or line code that does not exist."""


class NonConvergenceError(UnbalanceLabError):
    """Power flow iterations were exhausted before the voltage update settled."""

    def __init__(self, message: str, *, iterations: int, last_delta_pu: float):
        self.iterations = iterations
        self.last_delta_pu = last_delta_pu
        super().__init__(f"{message} (iterations={iterations}, last delta={last_delta_pu:.3e} p.u.)")


class CollapsedVoltageError(UnbalanceLabError):
    """A bus voltage fell below the collapse threshold during iteration."""


class SharesInfeasibleError(UnbalanceLabError):
    """Requested per-phase shares or total load cannot be realized."""
