"""Tapped-delay-line profiles, delay scaling and the 39 GHz scenario catalog.

The TDL tap tables are read from plain-text files (``data/tdl_a.txt`` and
``data/tdl_b.txt``) so the transcription from 3GPP TR 38.901 can be audited
line by line.  Set ``MPM_DATA_DIR`` to read them from another directory.
"""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

DATA_DIR_ENV = "MPM_DATA_DIR"


class TdlFormatError(ValueError):
    """Malformed TDL data file."""


class ProfileId(enum.Enum):
    TDL_A = "TDL-A"
    TDL_B = "TDL-B"

    @classmethod
    def parse(cls, value: "ProfileId | str") -> "ProfileId":
        if isinstance(value, cls):
            return value
        key = str(value).strip().upper().replace("_", "-")
        if key in ("A", "B"):
            key = "TDL-" + key
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown profile: {value!r}")

    @property
    def filename(self) -> str:
        return "tdl_" + self.value[-1].lower() + ".txt"


@dataclass(frozen=True)
class TapDelayLine:
    """Taps sorted by delay.

    ``delays`` are normalized (unitless) for a freshly loaded profile and in
    ns after :func:`scale_delays`; ``ds_ns`` records the applied scale.
    ``tap_indices`` keep the 1-based row numbers of the source table.
    """

    profile_id: ProfileId
    delays: tuple[float, ...]
    powers_db: tuple[float, ...]
    tap_indices: tuple[int, ...] = ()
    ds_ns: float | None = None

    def __post_init__(self) -> None:
        if not self.delays:
            raise ValueError("a TDL needs at least one tap")
        if len(self.delays) != len(self.powers_db):
            raise ValueError("delays and powers differ in length")
        if not self.tap_indices:
            object.__setattr__(self, "tap_indices", tuple(range(1, len(self.delays) + 1)))
        if self.delays[0] != 0.0:
            raise ValueError("first tap must have zero delay")
        d = np.asarray(self.delays)
        if np.any(np.diff(d) <= 0.0):
            raise ValueError("tap delays must be strictly increasing")

    def __len__(self) -> int:
        return len(self.delays)


@dataclass(frozen=True)
class NormalizedWeights:
    weights: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        w = np.asarray(self.weights, dtype=float)
        if w.ndim != 1 or w.size == 0 or np.any(w < 0):
            raise ValueError("weights must be a nonempty nonnegative vector")
        if abs(w.sum() - 1.0) > 1e-12:
            raise ValueError(f"weights sum to {w.sum()!r}, not 1")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    def __len__(self) -> int:
        return self.weights.size

    def __getitem__(self, i: int) -> float:
        return float(self.weights[i])


def _data_path(profile: ProfileId, data_dir: str | os.PathLike | None) -> Path:
    root = data_dir or os.environ.get(DATA_DIR_ENV)
    if root:
        return Path(root) / profile.filename
    return Path(str(resources.files("mpmspread").joinpath("data", profile.filename)))


def parse_tdl_text(text: str, profile: ProfileId, source: str = "<string>") -> TapDelayLine:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise TdlFormatError(f"{source}:{lineno}: expected 3 fields, got {len(parts)}")
        try:
            idx, delay, power = int(parts[0]), float(parts[1]), float(parts[2])
        except ValueError as exc:
            raise TdlFormatError(f"{source}:{lineno}: {exc}") from None
        if not (np.isfinite(delay) and np.isfinite(power)) or delay < 0:
            raise TdlFormatError(f"{source}:{lineno}: invalid delay/power")
        rows.append((delay, idx, power, lineno))
    if not rows:
        raise TdlFormatError(f"{source}: no taps")
    # 3GPP lists taps by cluster, not by delay
    rows.sort(key=lambda r: (r[0], r[1]))
    for prev, cur in zip(rows, rows[1:]):
        if cur[0] == prev[0]:
            raise TdlFormatError(f"{source}:{cur[3]}: duplicate delay {cur[0]}")
    if rows[0][0] != 0.0:
        raise TdlFormatError(f"{source}: no zero-delay tap")
    return TapDelayLine(
        profile_id=profile,
        delays=tuple(r[0] for r in rows),
        powers_db=tuple(r[2] for r in rows),
        tap_indices=tuple(r[1] for r in rows),
    )


def load_tdl_profile(profile_id: ProfileId | str, data_dir: str | os.PathLike | None = None) -> TapDelayLine:
    profile = ProfileId.parse(profile_id)
    path = _data_path(profile, data_dir)
    return parse_tdl_text(path.read_text(encoding="utf-8"), profile, source=str(path))


def scale_delays(tdl: TapDelayLine, ds_ns: float) -> TapDelayLine:
    """Multiply every delay by the rms delay spread ``ds_ns``."""
    if not ds_ns > 0:
        raise ValueError(f"delay spread must be positive, got {ds_ns!r}")
    return TapDelayLine(
        profile_id=tdl.profile_id,
        delays=tuple(d * ds_ns for d in tdl.delays),
        powers_db=tdl.powers_db,
        tap_indices=tdl.tap_indices,
        ds_ns=ds_ns * (tdl.ds_ns or 1.0),
    )


def normalize_powers(tdl: TapDelayLine) -> NormalizedWeights:
    p = np.asarray(tdl.powers_db, dtype=float)
    lin = 10.0 ** ((p - p.max()) / 10.0)
    return NormalizedWeights(lin / lin.sum())


class Environment(enum.Enum):
    INDOOR_OFFICE = "IndoorOffice"
    UMI_STREET_CANYON = "UMiStreetCanyon"
    UMA = "UMa"
    O2I = "O2I"


class PdpFlavor(enum.Enum):
    SHORT = "ShortDelay"
    NORMAL = "NormalDelay"
    LONG = "LongDelay"


DISTANCE_M = {
    Environment.INDOOR_OFFICE: 50.0,
    Environment.UMI_STREET_CANYON: 100.0,
    Environment.UMA: 200.0,
    Environment.O2I: 100.0,
}


@dataclass(frozen=True)
class Scenario:
    id: str
    environment: Environment
    pdp_flavor: PdpFlavor
    ds_ns: float
    distance_m: float
    frequency_ghz: float = 39.0

    @property
    def number(self) -> int:
        return int(self.id[2:])


_TABLE = [
    (Environment.INDOOR_OFFICE, PdpFlavor.SHORT, 16),
    (Environment.INDOOR_OFFICE, PdpFlavor.NORMAL, 18),
    (Environment.INDOOR_OFFICE, PdpFlavor.LONG, 41),
    (Environment.UMI_STREET_CANYON, PdpFlavor.SHORT, 30),
    (Environment.UMI_STREET_CANYON, PdpFlavor.NORMAL, 61),
    (Environment.UMI_STREET_CANYON, PdpFlavor.LONG, 297),
    (Environment.UMA, PdpFlavor.SHORT, 78),
    (Environment.UMA, PdpFlavor.NORMAL, 249),
    (Environment.UMA, PdpFlavor.LONG, 786),
    (Environment.O2I, PdpFlavor.NORMAL, 240),
    (Environment.O2I, PdpFlavor.LONG, 616),
]


def scenario_catalog() -> list[Scenario]:
    return [
        Scenario(f"Sc{i}", env, flavor, float(ds), DISTANCE_M[env])
        for i, (env, flavor, ds) in enumerate(_TABLE, 1)
    ]


def get_scenario(scenario_id: str) -> Scenario:
    key = str(scenario_id).strip().lower()
    for sc in scenario_catalog():
        if sc.id.lower() == key:
            return sc
    raise KeyError(f"unknown scenario: {scenario_id!r}")


def environment_families() -> dict[Environment, list[Scenario]]:
    """Catalog grouped by environment, each group ordered by delay spread."""
    out: dict[Environment, list[Scenario]] = {}
    for sc in scenario_catalog():
        out.setdefault(sc.environment, []).append(sc)
    return {k: sorted(v, key=lambda s: s.ds_ns) for k, v in out.items()}
