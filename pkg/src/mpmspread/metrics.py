"""RMS angle spread from weighted angular samples.

The spread is the square root of the plain (linear, non-circular) second
central moment of angles wrapped to (-180, 180], integrated over that
interval exactly as written.  Consequently it is not rotation invariant:
mass near +/-180 deg is counted as two far-apart lumps.  ``mean_phi_deg``
is reported so callers can spot such wrap-dominated cases.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import wrap_deg


@dataclass(frozen=True)
class ASResult:
    sigma_phi_deg: float
    mean_phi_deg: float
    n_effective: float


def _check(angles, weights) -> tuple[np.ndarray, np.ndarray, float]:
    phi = wrap_deg(angles)
    w = np.asarray(weights, dtype=float)
    if phi.shape != w.shape:
        raise ValueError("angles and weights differ in shape")
    if np.any(w < 0):
        raise ValueError("negative weight")
    total = float(w.sum())
    if not total > 0:
        raise ValueError("zero total weight")
    return phi, w, total


def weighted_angle_spread(angles, weights) -> ASResult:
    phi, w, total = _check(angles, weights)
    mean = float(np.dot(w, phi) / total)
    # centered form avoids cancellation in m2 - m1^2
    var = float(np.dot(w, (phi - mean) ** 2) / total)
    n_eff = total ** 2 / float(np.dot(w, w))
    return ASResult(float(np.sqrt(max(var, 0.0))), mean, n_eff)


def weighted_mean_angle(angles, weights) -> float:
    phi, w, total = _check(angles, weights)
    return float(np.dot(w, phi) / total)


def angle_spread(pas) -> ASResult:
    """RMS angle spread of a PAS (anything with ``angles`` and ``weights``)."""
    return weighted_angle_spread(pas.angles, pas.weights)


def mean_angle(pas) -> float:
    return weighted_mean_angle(pas.angles, pas.weights)


def bootstrap_stderr(pas, rng: np.random.Generator, n_resamples: int = 50,
                     max_draw: int = 50_000) -> float:
    """Bootstrap standard error of the angle spread.

    Resamples (angle, weight) pairs with replacement.  For large sample sets
    each resample draws only ``max_draw`` pairs and the spread of the
    resulting estimates is rescaled by ``sqrt(max_draw / N)``.  Stratified
    sampling makes the true error smaller than this i.i.d. yardstick.
    """
    phi, w, _ = _check(pas.angles, pas.weights)
    n = phi.size
    m = min(n, max_draw)
    est = np.empty(n_resamples)
    for k in range(n_resamples):
        idx = rng.integers(0, n, size=m)
        ws = w[idx]
        if not ws.sum() > 0:
            est[k] = np.nan
            continue
        est[k] = weighted_angle_spread(phi[idx], ws).sigma_phi_deg
    est = est[np.isfinite(est)]
    if est.size < 2:
        return float("nan")
    return float(est.std(ddof=1) * np.sqrt(m / n))
