import numpy as np
import pytest
from hypothesis import given, strategies as st

from mpmspread.sampling import (
    FoldedInverseCdf, component_rng, derive_seed, stratified_uniforms, symmetric_offsets,
)


def test_derived_seeds_are_stable_and_distinct():
    a = derive_seed(42, "component", 1).generate_state(4)
    b = derive_seed(42, "component", 1).generate_state(4)
    c = derive_seed(42, "component", 2).generate_state(4)
    np.testing.assert_array_equal(a, b)
    assert not np.array_equal(a, c)


def test_component_streams_reproduce():
    x = component_rng(7, 3).random(5)
    y = component_rng(7, 3).random(5)
    np.testing.assert_array_equal(x, y)


@given(st.integers(1, 5000), st.integers(0, 2**32 - 1))
def test_one_uniform_per_stratum(n, seed):
    u = stratified_uniforms(n, np.random.default_rng(seed))
    np.testing.assert_array_equal(np.floor(u * n), np.arange(n))


def test_inverse_cdf_of_uniform_is_linear():
    inv = FoldedInverseCdf.from_function(np.ones_like, 0.5)
    np.testing.assert_allclose(inv(np.array([0.0, 0.25, 1.0])), [0.0, 45.0, 180.0])


def test_inverse_cdf_rejects_massless_density():
    with pytest.raises(ValueError):
        FoldedInverseCdf.from_function(np.zeros_like, 1.0)


@given(st.integers(1, 2001))
def test_offsets_are_mirror_paired(n):
    inv = FoldedInverseCdf.from_function(np.ones_like, 1.0)
    off = symmetric_offsets(inv, n, np.random.default_rng(0))
    assert off.size == n
    np.testing.assert_array_equal(np.sort(off), np.sort(-off))
