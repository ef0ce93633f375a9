"""Angular dispersion of received signals from a multi-elliptical
scattering model driven by 3GPP tapped-delay-line profiles."""

from .antenna import NBA, WBA, AntennaPattern, gaussian_beam, omni, pattern_angle_spread, power_gain
from .geometry import build_ellipses, departure_to_arrival, focal_radius, wrap_deg
from .metrics import ASResult, angle_spread, mean_angle
from .pas import PAS, LocalScatterConfig, LosConfig, apply_rx_pattern, compose_pas
from .runner import RunConfig, RunResult, run_point, sweep_alpha_t, sweep_ds, table_reception, table_rx_output
from .tdl import ProfileId, load_tdl_profile, normalize_powers, scale_delays, scenario_catalog

__version__ = "0.1.0"
