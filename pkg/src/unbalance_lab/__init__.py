"""Voltage unbalance toolkit.

Five unbalance indices with cross-validation, numerical bounds of the relative
indices over a realistic voltage envelope, and a three-phase radial feeder
study (load-skew scenarios, PV integration, index-error statistics) driven by
a built-in backward-forward sweep power flow.
"""

from .errors import (
    CollapsedVoltageError,
    DanglingReferenceError,
    DegenerateTripleError,
    EmptyBandError,
    NonConvergenceError,
    NotRadialError,
    NotRealizableError,
    ParseError,
    PositiveSequenceZeroError,
    SharesInfeasibleError,
    UnbalanceLabError,
)
from .metrics import (
    INDEX_KINDS,
    LineVoltageTriple,
    MetricDetail,
    Phasor,
    PhasorTriple,
    SequenceSet,
    absolute_error,
    all_indices,
    cigre_factor,
    line_voltages,
    lvur,
    pvur1,
    pvur2,
    symmetrical_components,
    vuf,
)

__version__ = "0.1.0"
