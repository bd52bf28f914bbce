"""Per-block random sounding: training, combining, RIS phases, received signal.

Each block t uses fresh random unit-modulus training and combining matrices
and a fresh random RIS phase pattern; the received matrix is
Y_t = W_t^H H(Omega_t) X_t + W_t^H N_t.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import (LinkGeometry, RisPhaseVector, ScenarioTruth,
                      effective_gain, steering_vector)


@dataclass(frozen=True)
class SoundingBlock:
    """One training block: BS training X, MS combining W, RIS phases."""

    x: np.ndarray  # (N_BS, N_X), entries of modulus 1/sqrt(N_BS)
    w: np.ndarray  # (N_MS, N_W), entries of modulus 1/sqrt(N_MS)
    phases: RisPhaseVector

    def __post_init__(self):
        n_bs = self.x.shape[0]
        n_ms = self.w.shape[0]
        if not np.allclose(np.abs(self.x), 1.0 / np.sqrt(n_bs), atol=1e-9):
            raise ValueError("training entries must have modulus 1/sqrt(N_BS)")
        if not np.allclose(np.abs(self.w), 1.0 / np.sqrt(n_ms), atol=1e-9):
            raise ValueError("combining entries must have modulus 1/sqrt(N_MS)")


@dataclass(frozen=True)
class Observation:
    """Received matrix for one block, shape (N_W, N_X)."""

    y: np.ndarray

    def __post_init__(self):
        if not np.all(np.isfinite(self.y.view(float))):
            raise ValueError("observation entries must be finite")


@dataclass(frozen=True)
class NoiseModel:
    """Per-entry complex noise variance; 0 selects the noiseless test mode."""

    sigma2: float

    def __post_init__(self):
        if self.sigma2 < 0:
            raise ValueError("sigma2 must be >= 0")


def _unit_modulus(rng: np.random.Generator, shape: tuple, scale: float) -> np.ndarray:
    return scale * np.exp(1j * rng.uniform(-np.pi, np.pi, size=shape))


def generate_blocks(geoms: LinkGeometry, n_x: int, n_w: int, t_blocks: int,
                    rng: np.random.Generator | int) -> list[SoundingBlock]:
    """Draw t_blocks independent sounding blocks; deterministic given a seed."""
    if t_blocks < 1:
        raise ValueError("need at least one sounding block")
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    n_bs, n_ms, n_ris = geoms.bs.n_elements, geoms.ms.n_elements, geoms.ris.n_elements
    blocks = []
    for _ in range(t_blocks):
        x = _unit_modulus(rng, (n_bs, n_x), 1.0 / np.sqrt(n_bs))
        w = _unit_modulus(rng, (n_ms, n_w), 1.0 / np.sqrt(n_ms))
        omega = rng.uniform(-np.pi, np.pi, size=n_ris)
        blocks.append(SoundingBlock(x=x, w=w, phases=RisPhaseVector(omega)))
    return blocks


def observe(truth: ScenarioTruth, block: SoundingBlock, noise: NoiseModel,
            rng: np.random.Generator, geoms: LinkGeometry) -> Observation:
    """Received signal W^H H(Omega) X + W^H N for one block.

    The channel term uses the factored LoS form
    g * (W^H a_ms)(a_bs^H X); noise entries are i.i.d. circular complex
    Gaussian with variance sigma2.
    """
    y = noiseless_observation(truth, block, geoms)
    if noise.sigma2 > 0:
        n_ms, n_x = block.w.shape[0], block.x.shape[1]
        n_mat = np.sqrt(noise.sigma2 / 2) * (
            rng.standard_normal((n_ms, n_x)) + 1j * rng.standard_normal((n_ms, n_x)))
        y = y + block.w.conj().T @ n_mat
    return Observation(y=y)


def noiseless_observation(truth: ScenarioTruth, block: SoundingBlock,
                          geoms: LinkGeometry) -> np.ndarray:
    """Noise-free received matrix g * (W^H a_ms)(a_bs^H X)."""
    g = effective_gain(truth, block.phases, geoms.ris)
    a_ms = steering_vector(geoms.ms, np.sin(truth.phi_rm))
    a_bs = steering_vector(geoms.bs, np.sin(truth.theta_br))
    left = block.w.conj().T @ a_ms          # (N_W,)
    right = a_bs.conj() @ block.x           # (N_X,)
    return g * np.outer(left, right)


def phase_matrix(blocks: list[SoundingBlock]) -> np.ndarray:
    """Stack the per-block RIS coefficients row-wise, shape (T, N_RIS)."""
    return np.stack([b.phases.coefficients for b in blocks])
