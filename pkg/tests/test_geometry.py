import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mpmspread.geometry import (
    Ellipse, build_ellipses, departure_to_arrival, ellipse_for_delay, focal_radius, scatterer_position,
    wrap_deg,
)
from mpmspread.tdl import ProfileId, TapDelayLine, load_tdl_profile, scale_delays

from oracles import ray_ellipse_hit

# D = 100 m, tau = 100 ns: L = 129.979 m (hand computation)
A_100, B_100, E_100 = 64.9896, 41.5169, 0.76935


def _tdl(delays):
    return TapDelayLine(ProfileId.TDL_A, tuple(delays), tuple(0.0 for _ in delays))


def test_ellipse_dimensions_example():
    es = build_ellipses(_tdl((0.0, 100.0)), 100.0)
    (ell,) = es.ellipses
    assert ell.a == pytest.approx(A_100, abs=1e-3)
    assert ell.b == pytest.approx(B_100, abs=1e-3)
    assert ell.e == pytest.approx(E_100, abs=1e-3)
    assert ell.f == 50.0


def test_zero_delay_tap_makes_no_ellipse():
    es = build_ellipses(_tdl((0.0,)), 100.0)
    assert es.ellipses == ()
    assert es.local_weight == 1.0


def test_negative_delay_rejected():
    with pytest.raises(ValueError):
        ellipse_for_delay(100.0, -1.0)
    with pytest.raises(ValueError):
        build_ellipses(_tdl((0.0, 1.0)), 0.0)


def test_ellipse_invariants():
    with pytest.raises(ValueError):
        Ellipse(a=10.0, f=10.0)
    ell = ellipse_for_delay(100.0, 100.0)
    assert ell.b == pytest.approx(math.sqrt(ell.a ** 2 - ell.f ** 2), rel=1e-9)
    assert 0 < ell.e < 1


def test_focal_radius_vertices_and_latus_rectum():
    ell = ellipse_for_delay(100.0, 100.0)
    assert focal_radius(ell, 0.0) == pytest.approx(ell.a * (1 + ell.e))
    assert focal_radius(ell, 180.0) == pytest.approx(ell.a * (1 - ell.e))
    assert focal_radius(ell, 90.0) == pytest.approx(26.522, abs=1e-2)


def test_axial_arrivals():
    ell = ellipse_for_delay(100.0, 100.0)
    assert departure_to_arrival(ell, 180.0) == pytest.approx(0.0, abs=1e-9)
    assert abs(departure_to_arrival(ell, 0.0)) == pytest.approx(180.0)
    assert departure_to_arrival(ell, 0.0) == 180.0  # wrap keeps +180


def test_co_vertex_scatterer():
    ell = ellipse_for_delay(100.0, 100.0)
    theta = math.degrees(math.atan2(ell.b, ell.f))
    assert theta == pytest.approx(39.71, abs=0.01)
    assert departure_to_arrival(ell, theta) == pytest.approx(-39.71, abs=0.01)
    sx, sy = scatterer_position(ell, theta)
    assert sx == pytest.approx(0.0, abs=1e-9)
    assert sy == pytest.approx(ell.b, rel=1e-12)


@settings(max_examples=300)
@given(st.floats(1.0, 1000.0), st.floats(0.01, 5000.0), st.floats(-180.0, 180.0))
def test_matches_ray_intersection_oracle(D, tau, theta):
    ell = ellipse_for_delay(D, tau)
    s_ref, phi_ref = ray_ellipse_hit(D, tau, theta)
    sx, sy = scatterer_position(ell, theta)
    scale = ell.a
    assert abs(sx - s_ref[0]) <= 1e-7 * scale and abs(sy - s_ref[1]) <= 1e-7 * scale
    diff = float(wrap_deg(departure_to_arrival(ell, theta) - phi_ref))
    assert abs(diff) < 1e-6


def test_path_sum_oracle_vectorized():
    rng = np.random.default_rng(7)
    n = 100_000
    D = rng.uniform(1, 1000, n)
    tau = rng.uniform(0.01, 8000, n)
    theta = rng.uniform(-180, 180, n)
    a = (D + 299_792_458.0 * tau * 1e-9) / 2
    f = D / 2
    e = f / a
    r = a * (1 - e ** 2) / (1 - e * np.cos(np.radians(theta)))
    sx = -f + r * np.cos(np.radians(theta))
    sy = r * np.sin(np.radians(theta))
    total = np.hypot(sx + f, sy) + np.hypot(sx - f, sy)
    assert np.max(np.abs(total - 2 * a) / (2 * a)) < 1e-9


@given(st.floats(1.0, 1000.0), st.floats(0.01, 5000.0), st.floats(-179.999, 179.999))
def test_mirror_symmetry(D, tau, theta):
    ell = ellipse_for_delay(D, tau)
    # compared modulo 360: phi = 180 is its own mirror image
    total = departure_to_arrival(ell, -theta) + departure_to_arrival(ell, theta)
    assert wrap_deg(total) == 0.0


@pytest.mark.parametrize("tau", [1.0, 100.0, 5000.0])
def test_map_is_a_bijection_of_the_circle(tau):
    ell = ellipse_for_delay(100.0, tau)
    theta = np.linspace(-180.0, 180.0, 20001)
    phi = departure_to_arrival(ell, theta)
    # theta = -180 lands on phi = 0 (behind the Tx); unwrapping must advance
    # monotonically by exactly one turn
    unwrapped = np.degrees(np.unwrap(np.radians(phi)))
    steps = np.diff(unwrapped)
    assert np.all(steps < 0) or np.all(steps > 0)
    assert abs(unwrapped[-1] - unwrapped[0]) == pytest.approx(360.0, abs=1e-6)


def test_larger_delay_encloses_smaller():
    tdl = scale_delays(load_tdl_profile("TDL-A"), 100.0)
    es = build_ellipses(tdl, 100.0)
    a = [e.a for e in es.ellipses]
    b = [e.b for e in es.ellipses]
    assert all(x < y for x, y in zip(a, a[1:]))
    assert all(x < y for x, y in zip(b, b[1:]))
    assert len({e.f for e in es.ellipses}) == 1


def test_wrap_range():
    x = np.array([-540.0, -180.0, -179.0, 0.0, 180.0, 181.0, 720.0])
    np.testing.assert_array_equal(wrap_deg(x), [180.0, 180.0, -179.0, 0.0, 180.0, -179.0, 0.0])
