"""Geometric mmWave channel primitives for a BS -> RIS -> MS link.

All arrays are uniform linear arrays (ULA). Steering vectors are
parameterized by the directional sine (sin of the physical angle), which
is the quantity every phase progression actually depends on; functions
accept a raw spatial frequency in [-2, 2] as well, so callers never have
to go through asin.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class UlaGeometry:
    """Uniform linear array: element count and spacing in wavelengths."""

    n_elements: int
    spacing_over_wavelength: float = 0.5

    def __post_init__(self):
        if self.n_elements < 1:
            raise ValueError(f"n_elements must be >= 1, got {self.n_elements}")
        if not self.spacing_over_wavelength > 0:
            raise ValueError("spacing_over_wavelength must be > 0")

    @property
    def phase_rates(self) -> np.ndarray:
        """Per-element phase rate 2*pi*(d/lambda)*(k-1), k = 1..N."""
        return TWO_PI * self.spacing_over_wavelength * np.arange(self.n_elements)

    @property
    def sine_period(self) -> float:
        """Period of the steering vector in the directional-sine variable."""
        return 1.0 / self.spacing_over_wavelength


@dataclass(frozen=True)
class LinkGeometry:
    """Array geometries of the three terminals."""

    bs: UlaGeometry
    ms: UlaGeometry
    ris: UlaGeometry

    @classmethod
    def default(cls, n_bs: int = 32, n_ms: int = 32, n_ris: int = 64,
                spacing: float = 0.5) -> "LinkGeometry":
        return cls(UlaGeometry(n_bs, spacing), UlaGeometry(n_ms, spacing),
                   UlaGeometry(n_ris, spacing))


@dataclass(frozen=True)
class PathComponent:
    """One propagation path: complex gain, departure and arrival angle (rad)."""

    gain: complex
    aod: float
    aoa: float

    def __post_init__(self):
        half_pi = np.pi / 2
        if not (-half_pi <= self.aod <= half_pi and -half_pi <= self.aoa <= half_pi):
            raise ValueError("path angles must lie in [-pi/2, pi/2]")


@dataclass(frozen=True)
class ScenarioTruth:
    """Ground-truth parameters of the two LoS hops.

    theta_br / phi_br: AoD at the BS / AoA at the RIS of the BS-RIS hop.
    theta_rm / phi_rm: AoD at the RIS / AoA at the MS of the RIS-MS hop.
    rho_br / rho_rm: the per-hop path gains.
    """

    theta_br: float
    phi_br: float
    theta_rm: float
    phi_rm: float
    rho_br: complex
    rho_rm: complex

    def __post_init__(self):
        half_pi = np.pi / 2
        for name in ("theta_br", "phi_br", "theta_rm", "phi_rm"):
            if not -half_pi <= getattr(self, name) <= half_pi:
                raise ValueError(f"{name} must lie in [-pi/2, pi/2]")

    @property
    def cascade_gain(self) -> complex:
        """Product of the two hop gains (the only identifiable gain)."""
        return self.rho_br * self.rho_rm

    @property
    def sine_diff(self) -> float:
        """sin(AoA at the RIS) - sin(AoD at the RIS), in [-2, 2].

        This is the single spatial frequency the RIS phase pattern couples
        to; it is what the second estimation stage recovers.
        """
        return float(np.sin(self.phi_br) - np.sin(self.theta_rm))


@dataclass(frozen=True)
class RisPhaseVector:
    """Phases of the RIS reflection coefficients, one per element."""

    phases: np.ndarray

    def __post_init__(self):
        phases = np.asarray(self.phases, dtype=float)
        if phases.ndim != 1:
            raise ValueError("phases must be a 1-D real vector")
        if not np.all(np.isfinite(phases)):
            raise ValueError("phases must be finite")
        if np.any(phases < -np.pi) or np.any(phases > np.pi):
            raise ValueError("phases must lie in [-pi, pi]")
        object.__setattr__(self, "phases", phases)

    def __len__(self) -> int:
        return self.phases.shape[0]

    @property
    def coefficients(self) -> np.ndarray:
        """Unit-modulus diagonal entries exp(j*omega_k) (reflection a = 1)."""
        return np.exp(1j * self.phases)


def steering_vector(geom: UlaGeometry, sine: float) -> np.ndarray:
    """ULA array response at a directional sine (or raw spatial frequency).

    Entry k (1-based) is exp(j*2*pi*(d/lambda)*(k-1)*sine); the first entry
    is always 1.
    """
    return np.exp(1j * geom.phase_rates * sine)


def steering_derivative(geom: UlaGeometry, sine: float) -> np.ndarray:
    """Entrywise derivative of steering_vector with respect to the sine."""
    rates = geom.phase_rates
    return 1j * rates * np.exp(1j * rates * sine)


def multipath_channel(geom_rx: UlaGeometry, geom_tx: UlaGeometry,
                      paths: list[PathComponent]) -> np.ndarray:
    """Sum-of-paths channel matrix sum_l rho_l a_rx(phi_l) a_tx(theta_l)^H."""
    if not paths:
        raise ValueError("need at least one path component")
    h = np.zeros((geom_rx.n_elements, geom_tx.n_elements), dtype=complex)
    for p in paths:
        a_rx = steering_vector(geom_rx, np.sin(p.aoa))
        a_tx = steering_vector(geom_tx, np.sin(p.aod))
        h += p.gain * np.outer(a_rx, a_tx.conj())
    return h


def effective_gain(truth: ScenarioTruth, phases: RisPhaseVector,
                   geom_ris: UlaGeometry) -> complex:
    """Scalar gain of the cascaded LoS link under a given RIS phase pattern.

    Equals q * a(theta_rm)^H diag(e^{j omega}) a(phi_br), i.e. the cascade
    gain times the RIS array factor at the sine difference.
    """
    if len(phases) != geom_ris.n_elements:
        raise ValueError(
            f"phase vector length {len(phases)} != RIS size {geom_ris.n_elements}")
    array_factor = phases.coefficients @ steering_vector(geom_ris, truth.sine_diff)
    return truth.cascade_gain * array_factor


def composite_channel(truth: ScenarioTruth, phases: RisPhaseVector,
                      geoms: LinkGeometry) -> np.ndarray:
    """LoS-only end-to-end channel g * a_ms(phi_rm) a_bs(theta_br)^H.

    The result is rank 1 and matches the explicit product of the two hop
    matrices through the RIS phase matrix.
    """
    g = effective_gain(truth, phases, geoms.ris)
    a_ms = steering_vector(geoms.ms, np.sin(truth.phi_rm))
    a_bs = steering_vector(geoms.bs, np.sin(truth.theta_br))
    return g * np.outer(a_ms, a_bs.conj())
