"""Experiment orchestration: single points, direction and delay-spread
sweeps, and the 11-scenario x 2-profile x 2-antenna tables.

Antenna directions here use one global azimuth frame at both ends:
0 deg points from the Rx toward the Tx.  ``alpha_r = 0`` aims the Rx at the
Tx and ``alpha_t = 180`` aims the Tx at the Rx.  The geometry module
measures departure angles from the Tx->Rx axis instead, so the Tx
boresight handed to the pattern is ``alpha_t + 180``.
"""
from __future__ import annotations

import functools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from .antenna import NBA, WBA, AntennaPattern, omni
from .geometry import build_ellipses, wrap_deg
from .metrics import ASResult, angle_spread, bootstrap_stderr
from .pas import DEFAULT_SAMPLES, LocalScatterConfig, LosConfig, apply_rx_pattern, compose_pas
from .sampling import derive_seed
from .tdl import (
    DATA_DIR_ENV, ProfileId, Scenario, get_scenario, load_tdl_profile, scale_delays, scenario_catalog,
)

MIN_SAMPLES = 1_000
BOOTSTRAP_RESAMPLES = 50


def tx_boresight(alpha_t_deg: float) -> float:
    """Tx boresight in the departure-angle frame for a global-frame ``alpha_t``."""
    return float(wrap_deg(alpha_t_deg + 180.0))


@dataclass(frozen=True)
class RunConfig:
    scenario_id: str = "Sc1"
    tdl_profile: ProfileId = ProfileId.TDL_A
    tx: AntennaPattern = NBA
    rx: AntennaPattern = field(default_factory=omni)
    alpha_t_deg: float = 180.0
    alpha_r_deg: float = 0.0
    local: LocalScatterConfig = field(default_factory=LocalScatterConfig)
    los: LosConfig | None = None
    n_per_component: int = DEFAULT_SAMPLES
    base_seed: int = 42
    ds_ns: float | None = None
    distance_m: float | None = None
    bootstrap_resamples: int = BOOTSTRAP_RESAMPLES

    def __post_init__(self) -> None:
        object.__setattr__(self, "tdl_profile", ProfileId.parse(self.tdl_profile))
        get_scenario(self.scenario_id)
        if self.n_per_component < MIN_SAMPLES:
            raise ValueError(f"n_per_component must be >= {MIN_SAMPLES}")

    @property
    def scenario(self) -> Scenario:
        return get_scenario(self.scenario_id)

    @property
    def effective_ds_ns(self) -> float:
        return self.ds_ns if self.ds_ns is not None else self.scenario.ds_ns

    @property
    def effective_distance_m(self) -> float:
        return self.distance_m if self.distance_m is not None else self.scenario.distance_m


@dataclass(frozen=True)
class RunResult:
    config: RunConfig
    reception: ASResult
    rx_output: ASResult | None
    stderr_reception: float
    stderr_rx_output: float | None

    @property
    def as_reception_deg(self) -> float:
        return self.reception.sigma_phi_deg

    @property
    def as_rx_output_deg(self) -> float | None:
        return None if self.rx_output is None else self.rx_output.sigma_phi_deg

    @property
    def mean_reception_deg(self) -> float:
        return self.reception.mean_phi_deg

    @property
    def mean_rx_output_deg(self) -> float | None:
        return None if self.rx_output is None else self.rx_output.mean_phi_deg


@functools.lru_cache(maxsize=16)
def _profile(profile: ProfileId, data_dir: str | None):
    return load_tdl_profile(profile, data_dir)


def run_point(cfg: RunConfig) -> RunResult:
    tdl = _profile(cfg.tdl_profile, os.environ.get(DATA_DIR_ENV))
    ellipses = build_ellipses(scale_delays(tdl, cfg.effective_ds_ns), cfg.effective_distance_m)
    tx = cfg.tx.pointed(tx_boresight(cfg.alpha_t_deg))
    pas = compose_pas(ellipses, tx, cfg.local, cfg.los, cfg.n_per_component, cfg.base_seed)
    boot = np.random.default_rng(derive_seed(cfg.base_seed, "bootstrap"))

    reception = angle_spread(pas)
    se = bootstrap_stderr(pas, boot, cfg.bootstrap_resamples)
    rx_out = se_out = None
    if not cfg.rx.is_omni:
        filtered = apply_rx_pattern(pas, cfg.rx.pointed(cfg.alpha_r_deg))
        rx_out = angle_spread(filtered)
        se_out = bootstrap_stderr(filtered, boot, cfg.bootstrap_resamples)
    return RunResult(cfg, reception, rx_out, se, se_out)


def run_many(configs: Iterable[RunConfig], max_workers: int | None = None) -> list[RunResult]:
    """Evaluate independent points; output order follows input order."""
    configs = list(configs)
    if max_workers is None or max_workers <= 1:
        return [run_point(c) for c in configs]
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(run_point, configs))


def sweep_alpha_t(cfg: RunConfig, alpha_grid: Sequence[float],
                  max_workers: int | None = None) -> list[tuple[float, RunResult]]:
    if len(alpha_grid) == 0:
        raise ValueError("empty alpha_t grid")
    results = run_many((replace(cfg, alpha_t_deg=float(a)) for a in alpha_grid), max_workers)
    return list(zip((float(a) for a in alpha_grid), results))


def sweep_ds(cfg: RunConfig, ds_list: Sequence[float], distance_m: float | None = None,
             max_workers: int | None = None) -> list[tuple[float, RunResult]]:
    """AS versus delay spread with everything else fixed.

    The Tx-Rx distance defaults to the scenario's own distance.
    """
    if len(ds_list) == 0:
        raise ValueError("empty delay-spread list")
    if any(not ds > 0 for ds in ds_list):
        raise ValueError("delay spreads must be positive")
    d = distance_m if distance_m is not None else cfg.distance_m
    results = run_many((replace(cfg, ds_ns=float(ds), distance_m=d) for ds in ds_list), max_workers)
    return list(zip((float(ds) for ds in ds_list), results))


@dataclass(frozen=True)
class TableCell:
    scenario: Scenario
    profile: ProfileId
    antenna: str
    result: RunResult


TABLE_ANTENNAS = {"nba": NBA, "wba": WBA}


def _table(base: RunConfig, rx_output: bool, max_workers: int | None) -> list[TableCell]:
    keys, configs = [], []
    for sc in scenario_catalog():
        for profile in ProfileId:
            for name, pattern in TABLE_ANTENNAS.items():
                keys.append((sc, profile, name))
                configs.append(replace(
                    base, scenario_id=sc.id, tdl_profile=profile, tx=pattern,
                    rx=pattern if rx_output else omni(),
                    alpha_t_deg=180.0, alpha_r_deg=0.0, ds_ns=None, distance_m=None,
                ))
    results = run_many(configs, max_workers)
    return [TableCell(sc, p, a, r) for (sc, p, a), r in zip(keys, results)]


def table_reception(base: RunConfig | None = None, max_workers: int | None = None) -> list[TableCell]:
    """Reception-point AS, antennas facing each other, omni observation."""
    return _table(base or RunConfig(), False, max_workers)


def table_rx_output(base: RunConfig | None = None, max_workers: int | None = None) -> list[TableCell]:
    """AS at the Rx antenna output; Rx uses the same beam type as the Tx."""
    return _table(base or RunConfig(), True, max_workers)


def max_relative_error(cells: Iterable[TableCell], targets: dict[str, float]) -> float:
    errs = [abs(c.result.as_reception_deg - targets[c.scenario.id]) / targets[c.scenario.id]
            for c in cells if c.scenario.id in targets]
    if not errs:
        raise ValueError("no cell matches a target")
    return max(errs)


def calibrate_kappa(targets: dict[str, float], kappas: Sequence[float], base: RunConfig | None = None,
                    profile: ProfileId = ProfileId.TDL_B, tx: AntennaPattern = NBA,
                    max_workers: int | None = None) -> tuple[float, dict[float, float]]:
    """Pick the single local-scattering ``kappa`` minimizing the worst relative
    error of reception-point AS against ``targets`` (scenario id -> degrees).

    Returns the best kappa and the worst-case error for every candidate.
    """
    if len(kappas) == 0:
        raise ValueError("empty kappa grid")
    base = base or RunConfig()
    scenarios = [sc for sc in scenario_catalog() if sc.id in targets]
    score = {}
    for kappa in kappas:
        local = replace(base.local, kappa=float(kappa))
        configs = [replace(base, scenario_id=sc.id, tdl_profile=profile, tx=tx, rx=omni(), local=local,
                           alpha_t_deg=180.0, ds_ns=None, distance_m=None) for sc in scenarios]
        results = run_many(configs, max_workers)
        cells = [TableCell(sc, profile, tx.name, r) for sc, r in zip(scenarios, results)]
        score[float(kappa)] = max_relative_error(cells, targets)
    best = min(score, key=lambda k: (score[k], k))
    return best, score
