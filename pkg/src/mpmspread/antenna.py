"""Parametric azimuth power patterns.

The main lobe is a Gaussian in angle, ``g(d) = exp(-ln2 * (2 d / HPBW)^2)``,
so ``g(+/-HPBW/2) = 1/2``.  Gain in dBi is kept as metadata only: the
normalized angular density depends on the pattern shape alone.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace

import numpy as np

from .geometry import wrap_deg
from .metrics import weighted_angle_spread
from .sampling import FoldedInverseCdf, symmetric_offsets

GRID_STEP_DEG = 0.05
LN2 = float(np.log(2.0))


class PatternKind(enum.Enum):
    OMNI = "omni"
    GAUSSIAN = "gaussian"


@dataclass(frozen=True)
class AntennaPattern:
    kind: PatternKind = PatternKind.OMNI
    hpbw_deg: float | None = None
    gain_dbi: float = 0.0
    boresight_deg: float = 0.0
    sidelobe_floor_db: float | None = None
    name: str = ""

    def __post_init__(self) -> None:
        if self.kind is PatternKind.GAUSSIAN:
            if self.hpbw_deg is None or not (0.0 < self.hpbw_deg < 360.0):
                raise ValueError(f"Gaussian beam needs 0 < HPBW < 360, got {self.hpbw_deg!r}")
        if self.sidelobe_floor_db is not None and self.sidelobe_floor_db > 0:
            raise ValueError("sidelobe floor is relative to boresight and must be <= 0 dB")
        object.__setattr__(self, "boresight_deg", float(wrap_deg(self.boresight_deg)))

    @property
    def is_omni(self) -> bool:
        return self.kind is PatternKind.OMNI

    def pointed(self, boresight_deg: float) -> "AntennaPattern":
        return replace(self, boresight_deg=boresight_deg)

    def offset_gain(self, delta):
        """Gain versus offset from boresight (already wrapped)."""
        delta = np.asarray(delta, dtype=float)
        if self.is_omni:
            return np.ones_like(delta)
        g = np.exp(-LN2 * (2.0 * delta / self.hpbw_deg) ** 2)
        if self.sidelobe_floor_db is not None:
            g = np.maximum(g, 10.0 ** (self.sidelobe_floor_db / 10.0))
        return g


def omni() -> AntennaPattern:
    return AntennaPattern(PatternKind.OMNI, name="omni")


def gaussian_beam(hpbw_deg: float, gain_dbi: float = 0.0, boresight_deg: float = 0.0,
                  sidelobe_floor_db: float | None = None, name: str = "custom") -> AntennaPattern:
    return AntennaPattern(PatternKind.GAUSSIAN, hpbw_deg, gain_dbi, boresight_deg, sidelobe_floor_db, name)


# narrow- and wide-beam horn presets
NBA = gaussian_beam(7.8, 25.0, name="nba")
WBA = gaussian_beam(49.4, 13.3, name="wba")
PRESETS = {"nba": NBA, "wba": WBA, "omni": omni()}


def power_gain(pattern: AntennaPattern, phi_deg):
    """Relative power gain in [0, 1] toward ``phi_deg``."""
    return pattern.offset_gain(wrap_deg(np.asarray(phi_deg, dtype=float) - pattern.boresight_deg))


@dataclass(frozen=True)
class AngularDensity:
    """Density sampled on a uniform grid over (-180, 180]; ``sum(density) * step == 1``."""

    angles_deg: np.ndarray
    density: np.ndarray
    step_deg: float

    def integral(self) -> float:
        return float(self.density.sum() * self.step_deg)


def angle_grid(step_deg: float = GRID_STEP_DEG) -> np.ndarray:
    n = int(round(360.0 / step_deg))
    return -180.0 + step_deg * np.arange(1, n + 1)


def pattern_density(pattern: AntennaPattern, step_deg: float = GRID_STEP_DEG) -> AngularDensity:
    grid = angle_grid(step_deg)
    g = power_gain(pattern, grid)
    return AngularDensity(grid, g / (g.sum() * step_deg), step_deg)


def pattern_angle_spread(pattern: AntennaPattern) -> float:
    d = pattern_density(pattern)
    return weighted_angle_spread(d.angles_deg, d.density).sigma_phi_deg


def offset_sampler(pattern: AntennaPattern) -> FoldedInverseCdf:
    """Inverse CDF for ``|theta - boresight|`` under the pattern density."""
    step = GRID_STEP_DEG if pattern.is_omni else min(GRID_STEP_DEG, pattern.hpbw_deg / 200.0)
    return FoldedInverseCdf.from_function(pattern.offset_gain, step)


def sample_directions(pattern: AntennaPattern, n: int, rng: np.random.Generator) -> np.ndarray:
    return wrap_deg(pattern.boresight_deg + symmetric_offsets(offset_sampler(pattern), n, rng))
