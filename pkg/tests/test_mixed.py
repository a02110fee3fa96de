import numpy as np
import pytest

from conftest import sup_rel
from lplab.analytic import cascade_g, cascade_pointwise_bound, modulus_band
from lplab.errors import EngineError, EngineMismatchError, InvalidParameterError, WindowTooSmallError
from lplab.families import cascade, custom, unit
from lplab.grid import GridSpec, Signal, lp_norm
from lplab.mixed import conjecture_ratio, g_function, mixed_norm, relative_discrepancy
from lplab.spectral import band_signal

CASCADE_3_2_AT_0 = 1.3228756555322954


def test_unit_family_g_is_twice_f1(grid, f4, f1):
    g = g_function(f4, unit(0, 3), 2.0, "fft")
    assert sup_rel(g.samples, 2 * np.abs(f1.samples)) <= 1e-3


@pytest.mark.parametrize("engine", ["fft", "analytic", "both"])
@pytest.mark.parametrize("q", [1.5, 2.0, 4.0])
def test_single_full_interval_returns_modulus(grid, f4, engine, q):
    g = g_function(f4, custom([(0, 4)]), q, engine)
    if engine == "fft":
        assert sup_rel(g.samples, np.abs(f4.samples)) <= 1e-12
    else:
        assert sup_rel(g.samples, modulus_band(4.0, grid.x)) <= 1e-12


def test_analytic_cascade_at_origin(grid):
    f3 = band_signal(grid, 0, 3)
    g = g_function(f3, cascade(3), 2.0, "analytic")
    origin = grid.size // 2
    assert grid.x[origin] == 0
    assert g.samples[origin] == pytest.approx(CASCADE_3_2_AT_0, rel=1e-14)


def test_generic_analytic_path_matches_cascade_closed_form(grid):
    # a cascade(3) family applied to f_4 takes the width-grouping path
    f4 = band_signal(grid, 0, 4)
    g = g_function(f4, cascade(3), 3.0, "analytic")
    x = grid.x
    expected = (cascade_g(3, 3.0, x) ** 3) ** (1 / 3)
    np.testing.assert_allclose(np.real(g.samples), expected, rtol=1e-13)


def test_analytic_engine_needs_band_signal(small_grid):
    plain = Signal(small_grid, np.ones(small_grid.size))
    with pytest.raises(EngineError):
        g_function(plain, unit(0, 1), 2.0, "analytic")
    with pytest.raises(EngineError):
        g_function(plain, unit(0, 1), 2.0, "spectral")


@pytest.mark.parametrize("q", [1.0, 0.5, np.inf])
def test_rejects_degenerate_q(small_grid, q):
    with pytest.raises(InvalidParameterError):
        g_function(band_signal(small_grid, 0, 1), unit(0, 0), q)


def test_both_engine_raises_on_disagreement(small_grid):
    # the closed form assumes a spectrum exactly equal to the band indicator
    bad = Signal(small_grid, band_signal(small_grid, 0, 2).samples * 1.01, band=(0.0, 2.0))
    with pytest.raises(EngineMismatchError):
        g_function(bad, unit(0, 1), 2.0, "both")


def test_mixed_norm_examples(grid, f4):
    assert mixed_norm(f4, unit(0, 3), 2, 2) == pytest.approx(2.0, abs=1e-2)
    for N, fam in ((3, cascade(3)), (5, custom([(0, 0.3), (0.3, 2), (2, 2.25), (2.25, 5)]))):
        f = band_signal(grid, 0, N)
        assert mixed_norm(f, fam, 2, 2) == pytest.approx(N ** 0.5, abs=1e-2)


@pytest.mark.slow
@pytest.mark.parametrize("engine", ["analytic", "fft"])
def test_mixed_norm_cascade_eight_exceeds_bound(grid, engine):
    f8 = band_signal(grid, 0, 8)
    assert mixed_norm(f8, cascade(8), 2, 2, engine) >= 1.060039


@pytest.mark.parametrize("fam", [unit(0, 3), cascade(4), custom([(0, 0.125), (0.125, 3), (3, 4)])])
def test_plancherel_exactness(f4, fam):
    assert mixed_norm(f4, fam, 2, 2) == pytest.approx(lp_norm(f4, 2), rel=1e-6)


def test_lq_monotonicity_fft(f4):
    gs = [g_function(f4, cascade(4), q, "fft").samples.real for q in (1.5, 2.0, 3.0, 6.0)]
    for a, b in zip(gs, gs[1:]):
        assert np.all(a >= b * (1 - 1e-12))
    norms = [mixed_norm(f4, cascade(4), q, 1.5) for q in (1.5, 2.0, 3.0, 6.0)]
    assert norms == sorted(norms, reverse=True)


@pytest.mark.parametrize("p", [4 / 3, 1.5, 2.0])
@pytest.mark.parametrize("N", [3, 8])
def test_pointwise_refutation_chain(grid, p, N):
    g = g_function(band_signal(grid, 0, N), cascade(N), p / (p - 1), "analytic").samples.real
    x = grid.x
    region = (np.abs(x) >= 0.25) & (np.abs(x) <= 2.0 ** N / 4)
    assert np.all(g[region] >= cascade_pointwise_bound(p, x[region]) - 1e-12)


@pytest.mark.parametrize("p", [4 / 3, 3 / 2])
@pytest.mark.parametrize("N", [2, 4, 8])
def test_unit_family_consistency(grid, p, N):
    f = band_signal(grid, 0, N)
    ratio = mixed_norm(f, unit(0, N - 1), p / (p - 1), p) / lp_norm(f, p)
    assert ratio == pytest.approx(1.0, abs=0.02)


@pytest.mark.parametrize("N, q, tol", [(1, 2.0, 1e-4), (3, 2.0, 1e-4), (4, 4.0, 1e-4),
                                       (6, 2.0, 1e-3), (6, 4.0, 1e-3)])
def test_engine_agreement(grid, N, q, tol):
    f = band_signal(grid, 0, N)
    exact = g_function(f, cascade(N), q, "analytic").samples
    approx = g_function(f, cascade(N), q, "fft").samples
    assert relative_discrepancy(approx, exact) <= tol


def test_single_interval_engine_gap_is_the_dirichlet_factor(grid, f1):
    # only difference left at N = 1: |sin| / (2W sin(pi x / 2W)) versus |sin| / (pi x)
    exact = g_function(f1, cascade(1), 2.0, "analytic").samples
    approx = g_function(f1, cascade(1), 2.0, "fft").samples
    assert relative_discrepancy(approx, exact) <= (1 - 2 / np.pi) / (2 * grid.half_width)


def test_parallel_g_function_is_bit_identical(grid, f4):
    serial = g_function(f4, cascade(4), 3.0, "fft").samples
    threaded = g_function(f4, cascade(4), 3.0, "fft", n_jobs=4).samples
    np.testing.assert_array_equal(serial, threaded)


def test_conjecture_ratio_examples(grid):
    for p in (4 / 3, 1.5):
        rec = conjecture_ratio(1, p, "analytic", grid)
        assert rec.ratio == pytest.approx(1.0, rel=1e-14)
        assert rec.q == pytest.approx(p / (p - 1))
    rec = conjecture_ratio(8, 2.0, "analytic", grid)
    assert rec.norm_g >= 1.060039 * 0.99 and rec.holds
    assert conjecture_ratio(8, 4 / 3).ratio > conjecture_ratio(4, 4 / 3).ratio


def test_conjecture_ratio_engines_agree(grid):
    a = conjecture_ratio(4, 4 / 3, "analytic", grid)
    f = conjecture_ratio(4, 4 / 3, "fft", grid)
    assert f.ratio == pytest.approx(a.ratio, rel=5e-3)
    assert f.norm_g_region == pytest.approx(a.norm_g_region, rel=1e-6)


def test_conjecture_ratio_window_guard():
    with pytest.raises(WindowTooSmallError):
        conjecture_ratio(8, 4 / 3, "analytic", GridSpec(32, 32))
    conjecture_ratio(8, 4 / 3, "analytic", GridSpec(32, 32), margin=0.5)
