"""Confocal multi-elliptical scatterer geometry.

Coordinates: Tx at ``(-f, 0)``, Rx at ``(+f, 0)``, ``f = D/2``.  Departure
angles ``theta_t`` are measured CCW from the Tx->Rx axis; arrival angles
``phi_r`` CCW from the Rx->Tx axis.  All angles are degrees wrapped to
(-180, 180].
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tdl import NormalizedWeights, TapDelayLine, normalize_powers

SPEED_OF_LIGHT = 299_792_458.0  # m/s


def wrap_deg(angle):
    """Wrap degrees to (-180, 180]."""
    x = np.asarray(angle, dtype=float)
    if x.ndim and x.size and x.min() > -180.0 and x.max() <= 180.0:
        return x
    return x - 360.0 * np.ceil((x - 180.0) / 360.0)


@dataclass(frozen=True)
class Ellipse:
    a: float
    f: float
    tap_index: int = 0
    delay_ns: float = float("nan")

    def __post_init__(self) -> None:
        if not (self.a > self.f > 0):
            raise ValueError(f"need a > f > 0, got a={self.a!r}, f={self.f!r}")

    @property
    def b(self) -> float:
        return float(np.sqrt((self.a - self.f) * (self.a + self.f)))

    @property
    def e(self) -> float:
        return self.f / self.a


@dataclass(frozen=True)
class EllipseSet:
    """One ellipse per delayed tap; ``tap_weights`` cover every tap,
    the zero-delay tap first."""

    distance_m: float
    ellipses: tuple[Ellipse, ...]
    tap_weights: NormalizedWeights

    @property
    def local_weight(self) -> float:
        return self.tap_weights[0]


def ellipse_for_delay(distance_m: float, delay_ns: float, tap_index: int = 0) -> Ellipse:
    if delay_ns < 0:
        raise ValueError(f"negative delay: {delay_ns!r}")
    path = distance_m + SPEED_OF_LIGHT * delay_ns * 1e-9
    return Ellipse(a=path / 2.0, f=distance_m / 2.0, tap_index=tap_index, delay_ns=delay_ns)


def build_ellipses(scaled_tdl: TapDelayLine, distance_m: float) -> EllipseSet:
    """Delays are excess over the direct path; the zero-delay tap makes no
    ellipse (it feeds local scattering at the Rx)."""
    if not distance_m > 0:
        raise ValueError(f"distance must be positive, got {distance_m!r}")
    if any(d < 0 for d in scaled_tdl.delays):
        raise ValueError("negative tap delay")
    ellipses = tuple(
        ellipse_for_delay(distance_m, d, idx)
        for d, idx in zip(scaled_tdl.delays, scaled_tdl.tap_indices)
        if d > 0
    )
    return EllipseSet(distance_m, ellipses, normalize_powers(scaled_tdl))


def focal_radius(ellipse: Ellipse, theta_t):
    """Distance from the Tx focus to the ellipse along ``theta_t``."""
    e = ellipse.e
    c = np.cos(np.radians(theta_t))
    return ellipse.a * (1.0 - e * e) / (1.0 - e * c)


def scatterer_position(ellipse: Ellipse, theta_t):
    th = np.radians(theta_t)
    r = focal_radius(ellipse, theta_t)
    return -ellipse.f + r * np.cos(th), r * np.sin(th)


def departure_to_arrival(ellipse: Ellipse, theta_t):
    """Map departure angle at the Tx to arrival angle at the Rx via the
    single scatterer on ``ellipse``."""
    sx, sy = scatterer_position(ellipse, theta_t)
    # Rx->S measured from the Rx->Tx axis, i.e. from the -x direction
    return wrap_deg(np.degrees(np.arctan2(-sy, ellipse.f - sx)))
