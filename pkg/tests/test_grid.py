import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lplab.errors import GridMismatchError, InvalidParameterError, InvalidRangeError
from lplab.grid import (GridSpec, Signal, indicator, inner_product, lp_norm,
                        restricted_lp_norm)
from lplab.spectral import band_signal, project


def test_gridspec_geometry(grid):
    assert grid.size == 2 * 4096 * 32 == 2 ** 18
    assert grid.dx * grid.size == 2 * grid.half_width
    assert grid.x[0] == -4096 and grid.x[-1] == 4096 - grid.dx
    assert grid.dxi * grid.size == grid.samples_per_unit


@pytest.mark.parametrize("W, s", [(3, 32), (4096, 24), (0, 8), (1, 1)])
def test_gridspec_rejects_bad_shapes(W, s):
    with pytest.raises(InvalidParameterError):
        GridSpec(W, s)


def test_signal_is_immutable(small_grid):
    sig = Signal.zeros(small_grid)
    with pytest.raises(ValueError):
        sig.samples[0] = 1.0


def test_signal_rejects_nonfinite_and_wrong_length(small_grid):
    with pytest.raises(InvalidParameterError):
        Signal(small_grid, np.full(small_grid.size, np.nan))
    with pytest.raises(GridMismatchError):
        Signal(small_grid, np.zeros(3))


@pytest.mark.parametrize("s", [1, 4, 32])
def test_indicator_norm_is_exactly_one(s):
    g = GridSpec(16, s)
    assert lp_norm(indicator(g, 0, 1), 3) == 1.0


def test_band_signal_norms(grid):
    assert lp_norm(band_signal(grid, 0, 1), 2) == pytest.approx(1.0, abs=5e-3)
    assert lp_norm(band_signal(grid, 0, 4), 2) == pytest.approx(2.0, abs=1e-2)
    assert lp_norm(band_signal(grid, 0, 1, "sampled"), 2) == pytest.approx(1.0, abs=5e-3)


@pytest.mark.parametrize("p", [0.5, 1.0, np.inf, np.nan])
def test_lp_norm_rejects_bad_exponents(small_grid, p):
    with pytest.raises(InvalidParameterError):
        lp_norm(indicator(small_grid, 0, 1), p)


def test_restricted_norm_examples(small_grid):
    chi = indicator(small_grid, 0, 1)
    assert restricted_lp_norm(chi, 2, 0, 0.5) == pytest.approx(0.5 ** 0.5, rel=1e-15)
    assert restricted_lp_norm(chi, 2, 2, 3) == 0.0
    W = small_grid.half_width
    assert restricted_lp_norm(chi, 2.5, -W, W) == lp_norm(chi, 2.5)
    with pytest.raises(InvalidRangeError):
        restricted_lp_norm(chi, 2, -W - 1, 0)


def test_inner_product_examples(small_grid, f4):
    chi01 = indicator(small_grid, 0, 1)
    assert inner_product(chi01, chi01) == pytest.approx(lp_norm(chi01, 2) ** 2)
    assert inner_product(chi01, indicator(small_grid, 2, 3)) == 0
    a, b = project(f4, (1, 2)), project(f4, (2, 3))
    assert abs(inner_product(a, b)) <= 1e-6 * lp_norm(f4, 2) ** 2
    with pytest.raises(GridMismatchError):
        inner_product(chi01, f4)


@given(st.floats(-50, 50).filter(lambda c: abs(c) > 1e-3),
       st.sampled_from([1.25, 1.5, 2.0, 3.0, 7.0]))
@settings(max_examples=30, deadline=None)
def test_lp_norm_scaling(c, p):
    g = GridSpec(8, 8)
    f = band_signal(g, -0.5, 1.75)
    assert lp_norm(c * f, p) == pytest.approx(abs(c) * lp_norm(f, p), rel=1e-14)


@given(st.floats(-7.9, 7.0), st.floats(0.1, 8.0), st.sampled_from([1.5, 2.0, 4.0]))
@settings(max_examples=30, deadline=None)
def test_restricted_norm_is_monotone(a, width, p):
    g = GridSpec(8, 8)
    f = band_signal(g, 0, 2)
    b = min(a + width, 8.0)
    assert restricted_lp_norm(f, p, a, b) <= lp_norm(f, p)


@pytest.mark.parametrize("p", [4 / 3, 2.0, 3.0])
def test_refinement_stability(p):
    # doubling the sampling rate moves ||f_1||_p by well under the 1% quadrature budget
    coarse = lp_norm(band_signal(GridSpec(1024, 16), 0, 1, "sampled"), p)
    fine = lp_norm(band_signal(GridSpec(1024, 32), 0, 1, "sampled"), p)
    assert abs(fine - coarse) / fine < 1e-3
