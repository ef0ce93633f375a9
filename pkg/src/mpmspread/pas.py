"""Power angular spectrum at the Rx as a weighted sample set.

The AOA density is a mixture: local scattering around the Rx (von Mises)
carries the zero-delay tap, each delayed tap contributes the arrivals from
its ellipse with departure angles drawn from the Tx pattern density, and an
optional LOS atom takes a Rice-factor share of the zero-delay tap.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import antenna
from .antenna import AntennaPattern
from .geometry import Ellipse, EllipseSet, departure_to_arrival, wrap_deg
from .sampling import FoldedInverseCdf, component_rng, symmetric_offsets

DEFAULT_SAMPLES = 200_000
LOCAL = "local"
LOS = "los"


@dataclass(frozen=True)
class LocalScatterConfig:
    kappa: float = 50.0
    mu_deg: float = 0.0

    def __post_init__(self) -> None:
        if not self.kappa >= 0:
            raise ValueError(f"kappa must be >= 0, got {self.kappa!r}")


@dataclass(frozen=True)
class LosConfig:
    rice_k: float
    los_angle_deg: float = 0.0

    def __post_init__(self) -> None:
        if not self.rice_k >= 0:
            raise ValueError(f"Rice factor must be >= 0, got {self.rice_k!r}")


@dataclass(frozen=True)
class PAS:
    """Weighted arrival-angle samples.

    ``component`` indexes into ``labels`` for every sample.
    """

    angles: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    component: np.ndarray = field(repr=False)
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not (self.angles.shape == self.weights.shape == self.component.shape):
            raise ValueError("angles, weights and component must align")

    def __len__(self) -> int:
        return self.angles.size

    @property
    def total_weight(self) -> float:
        return float(self.weights.sum())

    def normalized(self) -> "PAS":
        total = self.total_weight
        if not total > 0:
            raise ValueError("zero total weight")
        return PAS(self.angles, self.weights / total, self.component, self.labels)

    def component_masses(self) -> dict[str, float]:
        mass = np.bincount(self.component, weights=self.weights, minlength=len(self.labels))
        return {lab: float(m) for lab, m in zip(self.labels, mass)}

    @classmethod
    def single(cls, angles, label: str, mass: float = 1.0) -> "PAS":
        angles = wrap_deg(angles)
        n = angles.size
        return cls(angles, np.full(n, mass / n), np.zeros(n, dtype=np.intp), (label,))

    @classmethod
    def concat(cls, parts: list["PAS"]) -> "PAS":
        labels: list[str] = []
        comps = []
        for p in parts:
            comps.append(p.component + len(labels))
            labels.extend(p.labels)
        return cls(
            np.concatenate([p.angles for p in parts]),
            np.concatenate([p.weights for p in parts]),
            np.concatenate(comps),
            tuple(labels),
        )


def _von_mises_sampler(kappa: float) -> FoldedInverseCdf:
    if kappa == 0:
        return FoldedInverseCdf.from_function(np.ones_like, antenna.GRID_STEP_DEG)
    sigma = np.degrees(1.0 / np.sqrt(kappa))
    upper = min(180.0, 50.0 * sigma)
    step = min(antenna.GRID_STEP_DEG, sigma / 20.0)
    # exp(kappa (cos d - 1)): peak-normalized, no overflow for large kappa
    return FoldedInverseCdf.from_function(
        lambda d: np.exp(kappa * (np.cos(np.radians(d)) - 1.0)), step, upper
    )


def local_component(cfg: LocalScatterConfig, n: int, rng: np.random.Generator) -> PAS:
    if n < 1:
        raise ValueError("need at least one sample")
    offsets = symmetric_offsets(_von_mises_sampler(cfg.kappa), n, rng)
    return PAS.single(cfg.mu_deg + offsets, LOCAL)


def delayed_component(ellipse: Ellipse, tx_pattern: AntennaPattern, n: int,
                      rng: np.random.Generator) -> PAS:
    if n < 1:
        raise ValueError("need at least one sample")
    theta_t = antenna.sample_directions(tx_pattern, n, rng)
    return PAS.single(departure_to_arrival(ellipse, theta_t), f"tap_{ellipse.tap_index}")


def compose_pas(ellipses: EllipseSet, tx_pattern: AntennaPattern,
                local_cfg: LocalScatterConfig | None = None, los_cfg: LosConfig | None = None,
                n_per_component: int = DEFAULT_SAMPLES, seed: int = 42) -> PAS:
    """Reception-point PAS.

    Component masses are the normalized tap powers; the pattern reshapes the
    angular density inside each tap but does not reweight taps.  Component
    ``i`` (0 = local scattering, then ellipses in delay order) draws from its
    own stream derived from ``(seed, i)``.
    """
    local_cfg = local_cfg or LocalScatterConfig()
    w = ellipses.tap_weights.weights
    p0 = float(w[0])
    if not ellipses.ellipses and p0 <= 0:
        raise ValueError("degenerate PDP: no delayed taps and no zero-delay power")
    if len(w) != len(ellipses.ellipses) + 1:
        raise ValueError("tap weights must cover the zero-delay tap plus one per ellipse")

    parts = []
    local_mass = p0
    if los_cfg is not None and los_cfg.rice_k > 0:
        k = los_cfg.rice_k
        los_mass = p0 * k / (k + 1.0)
        local_mass = p0 / (k + 1.0)
        parts.append(PAS.single(np.array([los_cfg.los_angle_deg]), LOS, los_mass))
    if local_mass > 0:
        parts.append(PAS.single(
            local_component(local_cfg, n_per_component, component_rng(seed, 0)).angles, LOCAL, local_mass
        ))
    for i, (ell, mass) in enumerate(zip(ellipses.ellipses, w[1:]), 1):
        comp = delayed_component(ell, tx_pattern, n_per_component, component_rng(seed, i))
        parts.append(PAS.single(comp.angles, comp.labels[0], float(mass)))
    return PAS.concat(parts)


def apply_rx_pattern(pas: PAS, rx_pattern: AntennaPattern) -> PAS:
    """Weight every sample by the Rx power gain toward its arrival angle."""
    w = pas.weights * antenna.power_gain(rx_pattern, pas.angles)
    total_in = pas.total_weight
    if not w.sum() >= 1e-9 * total_in:
        raise ValueError("beam captures no energy: Rx pattern points at a PAS null")
    return PAS(pas.angles, w / w.sum(), pas.component, pas.labels)
