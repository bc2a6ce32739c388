"""Pulse ansatz and drive protocols.

A pulse consists of a smoothly ramped Rabi envelope (sin^2 ramps, flat top
at omega0 = 1) together with a Gaussian detuning profile characterized by
its amplitude, temporal width and center offset -- the three parameters
the gate calibration optimizes.  Protocols are either a single pulse or
two identical back-to-back pulses whose second half carries a drive phase
jump theta on the Rabi amplitude.
"""

from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

from . import quadrature


@dataclass(frozen=True)
class PulseParams:
    """Parameters of one pulse in natural units (omega0 = 1).

    delta_amp, delta_width and delta_center parameterize the Gaussian
    detuning; duration and ramp_fraction are fixed conventions of the
    calibration, not free parameters.
    """

    delta_amp: float
    delta_width: float
    delta_center: float
    duration: float
    ramp_fraction: float = 0.15

    def __post_init__(self):
        if not (self.duration > 0 and math.isfinite(self.duration)):
            raise ValueError(f"duration must be positive, got {self.duration}")
        if not (self.delta_width > 0 and math.isfinite(self.delta_width)):
            raise ValueError(f"delta_width must be positive, got {self.delta_width}")
        if not 0.0 < self.ramp_fraction < 0.5:
            raise ValueError(
                f"ramp_fraction must lie in (0, 0.5), got {self.ramp_fraction}"
            )


class ProtocolKind(Enum):
    SINGLE_PULSE = "single"
    DOUBLE_PULSE = "double"


@dataclass(frozen=True)
class ProtocolSpec:
    """A drive protocol: one pulse, or two identical pulses with phase jump.

    For the double pulse, ``pulse`` describes each half and ``theta`` is the
    phase jump applied to the Rabi amplitude of the second half,
    Omega(t) -> Omega(t) * exp(i theta).  theta is ignored for single pulses.
    """

    kind: ProtocolKind
    pulse: PulseParams
    theta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "theta", float(self.theta) % (2 * math.pi))

    @property
    def total_duration(self):
        n = 2 if self.kind is ProtocolKind.DOUBLE_PULSE else 1
        return n * self.pulse.duration

    def segments(self):
        """Drive segments as (t_start, t_end, phase_factor) triples.

        Within a segment the drive is the single-pulse shape evaluated at
        the local time t - t_start, multiplied by phase_factor.  Integrators
        split at segment boundaries so the detuning seam of the double pulse
        never falls inside a step.
        """
        T = self.pulse.duration
        if self.kind is ProtocolKind.SINGLE_PULSE:
            return [(0.0, T, 1.0 + 0.0j)]
        return [(0.0, T, 1.0 + 0.0j), (T, 2 * T, np.exp(1j * self.theta))]


def _check_domain(t, upper, what="pulse"):
    t = np.asarray(t, dtype=float)
    if np.any(t < -1e-12) or np.any(t > upper + 1e-12):
        raise ValueError(f"time outside the {what} domain [0, {upper}]")
    return np.clip(t, 0.0, upper)


def rabi_envelope(p, t):
    """Rabi amplitude at time t in [0, T]: sin^2 ramps around a flat top.

    Zero at both ends, omega0 = 1 on the flat top, C^1-smooth across the
    ramp edges at ramp_fraction * T from either end.
    """
    t = _check_domain(t, p.duration)
    ramp = p.ramp_fraction * p.duration
    up = np.sin(0.5 * np.pi * np.minimum(t, ramp) / ramp) ** 2
    down = np.sin(0.5 * np.pi * np.minimum(p.duration - t, ramp) / ramp) ** 2
    out = np.minimum(up, down)
    return out if out.ndim else float(out)


def detuning(p, t):
    """Gaussian detuning at time t in [0, T], peaked at T/2 + delta_center."""
    t = _check_domain(t, p.duration)
    arg = (t - 0.5 * p.duration - p.delta_center) / p.delta_width
    out = p.delta_amp * np.exp(-0.5 * arg**2)
    return out if out.ndim else float(out)


def pulse_breakpoints(p, offset=0.0):
    """Times where the envelope's smoothness degrades, for quadrature panels."""
    ramp = p.ramp_fraction * p.duration
    return [offset + ramp, offset + p.duration - ramp]


def protocol_drive(spec, t):
    """Drive values (omega, delta) of a protocol at time t.

    omega is complex: the second half of a double pulse carries the factor
    exp(i theta).  t may be a scalar or an array within [0, total_duration];
    times at or past the half-way seam use the second half's local clock.
    """
    T = spec.pulse.duration
    t = _check_domain(t, spec.total_duration, what="protocol")
    if spec.kind is ProtocolKind.SINGLE_PULSE:
        omega = rabi_envelope(spec.pulse, t) + 0.0j
        return omega, detuning(spec.pulse, t)
    scalar = np.ndim(t) == 0
    t = np.atleast_1d(t)
    local = np.where(t >= T, t - T, t)
    phase = np.where(t >= T, np.exp(1j * spec.theta), 1.0 + 0.0j)
    omega = rabi_envelope(spec.pulse, local) * phase
    delta = detuning(spec.pulse, local)
    if scalar:
        return complex(omega[0]), float(delta[0])
    return omega, delta


def protocol_breakpoints(spec):
    """Panel breakpoints of the full protocol (ramp edges and the seam)."""
    pts = pulse_breakpoints(spec.pulse)
    if spec.kind is ProtocolKind.DOUBLE_PULSE:
        T = spec.pulse.duration
        pts += [T] + pulse_breakpoints(spec.pulse, offset=T)
    return pts


def accumulated_phase(spec, t, t0):
    """Integrated detuning phi(t, t0) of a protocol, by panel quadrature.

    Accepts a ProtocolSpec or a bare PulseParams (treated as one pulse).
    """
    if isinstance(spec, PulseParams):
        spec = ProtocolSpec(ProtocolKind.SINGLE_PULSE, spec)
    if t < t0:
        raise ValueError(f"reversed limits: t0={t0} > t={t}")
    upper = spec.total_duration
    if not (-1e-12 <= t0 and t <= upper + 1e-12):
        raise ValueError(f"phase limits outside the protocol domain [0, {upper}]")

    def delta_of(times):
        return protocol_drive(spec, times)[1]

    return quadrature.integrate(delta_of, t0, t, protocol_breakpoints(spec))


def phase_jump_theta(p):
    """Drive phase jump for the echo protocol: the detuning integral of one
    half-pulse, reduced mod 2 pi.

    Sign conventions leave a pi ambiguity in the destructive-interference
    condition; select_phase_jump() in the perturbative module validates this
    value against first-order cancellation and reports whether the pi offset
    is required.
    """
    theta = accumulated_phase(p, p.duration, 0.0)
    return theta % (2 * math.pi)
