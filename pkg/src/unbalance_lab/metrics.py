"""Phasor types, symmetrical components, and the five voltage-unbalance indices.

All indices are returned as a :class:`MetricDetail` so callers can inspect the
intermediate quantities (averages, deviations, the triangle parameter of the
line-magnitude factor) next to the headline percentage.

Measurement conventions
-----------------------
Inputs are phase-to-neutral phasors. The sequence-ratio index is identical for
phase and line phasors, so nothing is lost by fixing this convention; the
magnitude-only indices are defined on whichever magnitudes their standard
prescribes (line magnitudes for the NEMA ratio and the line-magnitude factor,
phase magnitudes for the two phase-voltage ratios).

Every operation here is a pure function of immutable values and is safe to
call concurrently.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import DegenerateTripleError, NotRealizableError, PositiveSequenceZeroError

__all__ = [
    "Phasor",
    "PhasorTriple",
    "LineVoltageTriple",
    "SequenceSet",
    "MetricDetail",
    "symmetrical_components",
    "vuf",
    "line_voltages",
    "lvur",
    "cigre_factor",
    "pvur1",
    "pvur2",
    "absolute_error",
    "all_indices",
    "INDEX_KINDS",
]

#: Rotation operator, one third of a turn.
ALPHA: complex = cmath.exp(1j * math.radians(120.0))
ALPHA2: complex = ALPHA * ALPHA

#: Index kinds compared against the sequence-ratio reference, in report order.
INDEX_KINDS: tuple[str, ...] = ("lvur", "cigre", "pvur1", "pvur2")


def _norm_angle_deg(angle: float) -> float:
    """Map an angle in degrees onto (-180, 180]."""
    r = math.fmod(angle, 360.0)
    if r <= -180.0:
        r += 360.0
    elif r > 180.0:
        r -= 360.0
    return r


@dataclass(frozen=True)
class Phasor:
    """A voltage phasor as magnitude (volts or p.u.) and angle in degrees.

    The angle is normalized to (-180, 180] at construction so equal phasors
    always compare equal.
    """

    magnitude: float
    angle_deg: float

    def __post_init__(self) -> None:
        magnitude = float(self.magnitude)
        angle = float(self.angle_deg)
        if not (math.isfinite(magnitude) and math.isfinite(angle)):
            raise ValueError("phasor magnitude and angle must be finite")
        if magnitude < 0.0:
            raise ValueError(f"phasor magnitude must be nonnegative, got {magnitude}")
        object.__setattr__(self, "magnitude", magnitude)
        object.__setattr__(self, "angle_deg", _norm_angle_deg(angle))

    @classmethod
    def from_complex(cls, value: complex) -> "Phasor":
        return cls(abs(value), math.degrees(cmath.phase(value)))

    def to_complex(self) -> complex:
        return cmath.rect(self.magnitude, math.radians(self.angle_deg))


@dataclass(frozen=True)
class PhasorTriple:
    """Three phase-to-neutral voltage phasors. Rejects the all-zero triple."""

    a: Phasor
    b: Phasor
    c: Phasor

    def __post_init__(self) -> None:
        if max(self.a.magnitude, self.b.magnitude, self.c.magnitude) <= 0.0:
            raise ValueError("all three phase magnitudes are zero")

    @classmethod
    def from_polar(
        cls,
        magnitudes: tuple[float, float, float],
        angles_deg: tuple[float, float, float] = (0.0, -120.0, 120.0),
    ) -> "PhasorTriple":
        ma, mb, mc = magnitudes
        aa, ab, ac = angles_deg
        return cls(Phasor(ma, aa), Phasor(mb, ab), Phasor(mc, ac))

    @classmethod
    def from_complex(cls, va: complex, vb: complex, vc: complex) -> "PhasorTriple":
        return cls(Phasor.from_complex(va), Phasor.from_complex(vb), Phasor.from_complex(vc))

    def to_complex(self) -> tuple[complex, complex, complex]:
        return self.a.to_complex(), self.b.to_complex(), self.c.to_complex()

    @property
    def magnitudes(self) -> tuple[float, float, float]:
        return self.a.magnitude, self.b.magnitude, self.c.magnitude


@dataclass(frozen=True)
class LineVoltageTriple:
    """Line (phase-to-phase) voltage magnitudes. At least one must be positive."""

    ab: float
    bc: float
    ca: float

    def __post_init__(self) -> None:
        for name, v in (("ab", self.ab), ("bc", self.bc), ("ca", self.ca)):
            if not math.isfinite(v) or v < 0.0:
                raise ValueError(f"line voltage {name} must be finite and nonnegative, got {v}")
        if max(self.ab, self.bc, self.ca) <= 0.0:
            raise ValueError("all three line voltages are zero")


@dataclass(frozen=True)
class SequenceSet:
    """Zero/positive/negative sequence phasors of a three-phase set."""

    zero: complex
    positive: complex
    negative: complex

    def to_phasor_triple(self) -> PhasorTriple:
        """Inverse transform back to phase quantities."""
        va = self.zero + self.positive + self.negative
        vb = self.zero + ALPHA2 * self.positive + ALPHA * self.negative
        vc = self.zero + ALPHA * self.positive + ALPHA2 * self.negative
        return PhasorTriple.from_complex(va, vb, vc)


@dataclass(frozen=True)
class MetricDetail:
    """An index value in percent plus the intermediates that produced it.

    ``intermediates`` holds exactly the named quantities the defining formula
    consumed, so the value can be re-derived from them for auditing.
    """

    kind: str
    value: float
    intermediates: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.value < 0.0:
            raise ValueError(f"{self.kind} value must be nonnegative, got {self.value}")


def symmetrical_components(v: PhasorTriple) -> SequenceSet:
    """Decompose a phasor triple into zero, positive, and negative sequences.

    positive = (Va + alpha*Vb + alpha^2*Vc) / 3
    negative = (Va + alpha^2*Vb + alpha*Vc) / 3
    zero     = (Va + Vb + Vc) / 3
    """
    va, vb, vc = v.to_complex()
    zero = (va + vb + vc) / 3.0
    positive = (va + ALPHA * vb + ALPHA2 * vc) / 3.0
    negative = (va + ALPHA2 * vb + ALPHA * vc) / 3.0
    return SequenceSet(zero=zero, positive=positive, negative=negative)


def vuf(v: PhasorTriple) -> MetricDetail:
    """Sequence-ratio unbalance factor: 100 * |negative| / |positive|.

    Raises :class:`PositiveSequenceZeroError` when the positive-sequence
    magnitude is below 1e-12 of the largest phase magnitude; the ratio has no
    physical meaning in that frame.
    """
    seq = symmetrical_components(v)
    positive = abs(seq.positive)
    negative = abs(seq.negative)
    scale = max(v.magnitudes)
    if positive < 1e-12 * scale:
        raise PositiveSequenceZeroError(
            f"positive-sequence magnitude {positive:.3e} is zero relative to phase scale {scale:.3e}"
        )
    return MetricDetail(
        kind="vuf",
        value=100.0 * negative / positive,
        intermediates={"positive_mag": positive, "negative_mag": negative},
    )


def line_voltages(v: PhasorTriple) -> LineVoltageTriple:
    """Line voltage magnitudes |Va-Vb|, |Vb-Vc|, |Vc-Va| from phase phasors."""
    va, vb, vc = v.to_complex()
    ab = abs(va - vb)
    bc = abs(vb - vc)
    ca = abs(vc - va)
    if max(ab, bc, ca) < 1e-12:
        raise DegenerateTripleError("all phase voltages are identical; no line voltages exist")
    return LineVoltageTriple(ab=ab, bc=bc, ca=ca)


def lvur(lv: LineVoltageTriple) -> MetricDetail:
    """NEMA ratio: 100 * max deviation of line magnitudes from their average / average."""
    avg = (lv.ab + lv.bc + lv.ca) / 3.0
    dev = max(abs(lv.ab - avg), abs(lv.bc - avg), abs(lv.ca - avg))
    return MetricDetail(
        kind="lvur",
        value=100.0 * dev / avg,
        intermediates={"avg_line_voltage": avg, "max_deviation": dev},
    )


def cigre_factor(lv: LineVoltageTriple) -> MetricDetail:
    """Unbalance factor from line magnitudes via the triangle parameter beta.

    beta = (Vab^4 + Vbc^4 + Vca^4) / (Vab^2 + Vbc^2 + Vca^2)^2 and the factor
    is 100 * sqrt((1 - sqrt(3 - 6*beta)) / (1 + sqrt(3 - 6*beta))). The value
    is evaluated through the algebraically identical form

        spread = 6*beta - 2 = 2*((x-y)^2 + (y-z)^2 + (z-x)^2) / (x+y+z)^2
        factor = 100 * sqrt(spread) / (1 + sqrt(1 - spread))

    with x, y, z the squared line magnitudes; near balance this avoids the
    catastrophic cancellation of 3 - 6*beta and keeps full relative accuracy.

    A radicand 3 - 6*beta below -1e-12 means the three magnitudes cannot close
    any triangle of phasor differences and raises
    :class:`NotRealizableError`; radicands in [-1e-12, 0) are treated as
    floating-point noise and clamped to zero.
    """
    x, y, z = lv.ab * lv.ab, lv.bc * lv.bc, lv.ca * lv.ca
    total = x + y + z
    beta = (x * x + y * y + z * z) / (total * total)
    spread = 2.0 * ((x - y) ** 2 + (y - z) ** 2 + (z - x) ** 2) / (total * total)
    radicand = 1.0 - spread
    if radicand < -1e-12:
        raise NotRealizableError(
            f"radicand 3-6*beta = {radicand:.3e}; magnitudes ({lv.ab}, {lv.bc}, {lv.ca}) "
            "cannot arise from any phasor triple"
        )
    s = math.sqrt(max(radicand, 0.0))
    value = 100.0 * math.sqrt(spread) / (1.0 + s)
    return MetricDetail(
        kind="cigre",
        value=value,
        intermediates={"beta": beta, "radicand": radicand, "spread": spread},
    )


def pvur1(v: PhasorTriple) -> MetricDetail:
    """Phase ratio, first form: 100 * max |phase magnitude - average| / average.

    Blind to phase angles by construction.
    """
    ma, mb, mc = v.magnitudes
    avg = (ma + mb + mc) / 3.0
    dev = max(abs(ma - avg), abs(mb - avg), abs(mc - avg))
    return MetricDetail(
        kind="pvur1",
        value=100.0 * dev / avg,
        intermediates={"avg_phase_voltage": avg, "max_deviation": dev},
    )


def pvur2(v: PhasorTriple) -> MetricDetail:
    """Phase ratio, second form: 100 * (max - min phase magnitude) / average."""
    ma, mb, mc = v.magnitudes
    avg = (ma + mb + mc) / 3.0
    v_max = max(ma, mb, mc)
    v_min = min(ma, mb, mc)
    return MetricDetail(
        kind="pvur2",
        value=100.0 * (v_max - v_min) / avg,
        intermediates={"v_max": v_max, "v_min": v_min, "avg_phase_voltage": avg},
    )


def absolute_error(index_value: float, vuf_value: float) -> float:
    """Absolute estimation error of an index, the sequence ratio being the true value."""
    if not (math.isfinite(index_value) and math.isfinite(vuf_value)):
        raise ValueError("index and reference values must be finite")
    if index_value < 0.0 or vuf_value < 0.0:
        raise ValueError("index and reference values must be nonnegative")
    return abs(index_value - vuf_value)


def all_indices(v: PhasorTriple) -> dict[str, MetricDetail]:
    """All five indices of a phasor triple, keyed by kind ('vuf' plus INDEX_KINDS)."""
    lv = line_voltages(v)
    return {
        "vuf": vuf(v),
        "lvur": lvur(lv),
        "cigre": cigre_factor(lv),
        "pvur1": pvur1(v),
        "pvur2": pvur2(v),
    }
