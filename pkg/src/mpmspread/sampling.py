"""Seeding and inverse-CDF sampling helpers.

Every angular density in this package is symmetric about a center
direction, so samples are drawn as ``center +/- |offset|`` where ``|offset|``
comes from the folded density on [0, 180].  Strata are randomized
(one uniform per stratum), which keeps the estimator unbiased while
cutting the variance of the moment estimates well below i.i.d. draws.
"""
from __future__ import annotations

import hashlib
from typing import Callable

import numpy as np


def derive_seed(*keys) -> np.random.SeedSequence:
    """Deterministic seed sequence from arbitrary hashable keys.

    ``hash()`` is salted per process, so keys are digested explicitly.
    """
    digest = hashlib.sha256(repr(keys).encode("utf-8")).digest()
    return np.random.SeedSequence([int.from_bytes(digest[i:i + 4], "little") for i in range(0, 16, 4)])


def component_rng(base_seed: int, component_index: int) -> np.random.Generator:
    return np.random.default_rng(derive_seed(int(base_seed), "component", int(component_index)))


def stratified_uniforms(n: int, rng: np.random.Generator) -> np.ndarray:
    return (np.arange(n) + rng.random(n)) / n


class FoldedInverseCdf:
    """Inverse CDF of a density on ``|offset|`` in [0, ``upper``] degrees.

    The CDF is built from the trapezoid rule on ``nodes``; sampling inverts
    it by linear interpolation, i.e. it samples the piecewise-linear-CDF
    approximation of the density.
    """

    def __init__(self, nodes: np.ndarray, pdf: np.ndarray):
        nodes = np.asarray(nodes, dtype=float)
        pdf = np.asarray(pdf, dtype=float)
        cdf = np.concatenate([[0.0], np.cumsum(0.5 * (pdf[1:] + pdf[:-1]) * np.diff(nodes))])
        if not cdf[-1] > 0:
            raise ValueError("density has no mass")
        self.nodes = nodes
        self.cdf = cdf / cdf[-1]

    @classmethod
    def from_function(cls, fn: Callable[[np.ndarray], np.ndarray], step: float, upper: float = 180.0):
        n = max(int(np.ceil(upper / step)), 1)
        nodes = np.linspace(0.0, upper, n + 1)
        return cls(nodes, fn(nodes))

    def __call__(self, u: np.ndarray) -> np.ndarray:
        return np.interp(u, self.cdf, self.nodes)


def symmetric_offsets(inv: FoldedInverseCdf, n: int, rng: np.random.Generator) -> np.ndarray:
    """``n`` offsets, mirror-paired so the sample set is symmetric about 0.

    For odd ``n`` the extra sample is drawn from the central stratum
    around 0 rather than paired.
    """
    half = n // 2
    mags = inv(stratified_uniforms(half, rng)) if half else np.empty(0)
    out = np.concatenate([mags, -mags])
    if n % 2:
        out = np.concatenate([out, [0.0]])
    return out
