"""Pointwise l^q aggregation of frequency projections and mixed L^p(l^q) norms."""

from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import analytic
from .errors import EngineError, EngineMismatchError, WindowTooSmallError
from .families import cascade as cascade_family
from .grid import GridSpec, Signal, lp_norm, restricted_lp_norm
from .spectral import MIN_BINS, band_signal, check_projectable, forward, inverse, project_spectrum
from .summation import ArrayAccumulator
from .validation import check_exponent, check_positive_int, conjugate_exponent

ENGINES = ("fft", "analytic", "both")
CROSS_TOL = 1e-3


def check_engine(engine):
    if engine not in ENGINES:
        raise EngineError(f"engine must be one of {ENGINES}, got {engine!r}")
    return engine


def _fft_g(f, family, q, min_bins, strict, n_jobs):
    for iv in family:
        check_projectable(iv, f.grid, min_bins, strict)
    spec = forward(f)

    def power(iv):
        return np.abs(inverse(project_spectrum(spec, iv)).samples) ** q

    acc = ArrayAccumulator(f.grid.size)
    if n_jobs == 1:
        for iv in family:
            acc.add(power(iv))
    else:
        # map preserves family order, so the sum is schedule independent
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            for term in pool.map(power, family):
                acc.add(term)
    return acc.result() ** (1.0 / q)


def band_widths(family, band):
    """Widths of ``I ∩ [a, b)`` grouped by value, widest first, with multiplicities."""
    a, b = band
    groups = OrderedDict()
    for iv in family:
        w = iv.intersection_length(a, b)
        if w > 0:
            groups[w] = groups.get(w, 0) + 1
    widths = sorted(groups, reverse=True)
    return widths, [float(groups[w]) for w in widths]


def _analytic_g(f, family, q):
    if f.band is None:
        raise EngineError(
            "the analytic engine needs a band signal (one built by band_signal)")
    a, b = f.band
    if family.kind == "cascade" and (a, b) == (0.0, float(family.params.get("N", -1))):
        return analytic.cascade_g(family.params["N"], q, f.grid.x)
    widths, counts = band_widths(family, f.band)
    if not widths:
        return np.zeros(f.grid.size)
    return analytic.weighted_band_sum(widths, counts, q, f.grid.x)


def relative_discrepancy(values, reference):
    """``max |values - reference| / max |reference|``."""
    scale = float(np.max(np.abs(reference)))
    diff = float(np.max(np.abs(np.asarray(values) - np.asarray(reference))))
    return diff / scale if scale > 0 else diff


def g_function(f, family, q, engine="fft", *, min_bins=MIN_BINS, strict=True,
               n_jobs=1, cross_tol=CROSS_TOL):
    """Pointwise ``(sum_I |S_I f(x_k)|^q)^(1/q)`` over ``family``.

    With ``engine="both"`` the closed-form result is returned after checking
    that the FFT path agrees to ``cross_tol`` (relative to the peak value);
    disagreement raises EngineMismatchError.
    """
    q = check_exponent(q, "q")
    check_engine(engine)
    if engine == "fft":
        values = _fft_g(f, family, q, min_bins, strict, n_jobs)
    elif engine == "analytic":
        values = _analytic_g(f, family, q)
    else:
        values = _analytic_g(f, family, q)
        err = relative_discrepancy(_fft_g(f, family, q, min_bins, strict, n_jobs), values)
        if err > cross_tol:
            raise EngineMismatchError(
                f"fft and analytic g-functions differ by {err:.3e} (> {cross_tol:.1e})")
    return Signal(f.grid, values)


def mixed_norm(f, family, q, p, engine="fft", **kwargs):
    """``|| (sum_I |S_I f|^q)^(1/q) ||_p``."""
    p = check_exponent(p)
    return lp_norm(g_function(f, family, q, engine, **kwargs), p)


@dataclass(frozen=True)
class ConjectureRecord:
    N: int
    p: float
    q: float
    engine: str
    norm_f: float
    norm_g: float
    norm_g_region: float
    lower_bound: float
    ratio: float
    holds: bool


def conjecture_ratio(N, p, engine="analytic", grid=None, *, margin=4.0, tolerance=0.01,
                     q=None, n_jobs=1):
    """Compare ``||g_{p'}(f_N)||_p`` over the cascade family with ``||f_N||_p``.

    ``q`` overrides the aggregation exponent, which defaults to ``p' = p/(p-1)``.

    ``norm_g`` is taken over the whole window, ``norm_g_region`` over
    ``[-2^N/4, 2^N/4)`` (clipped to the window) where the pointwise lower
    bound lives. ``holds``
    records whether ``norm_g >= lower_bound * (1 - tolerance)``.
    """
    N = check_positive_int(N, "N")
    p = check_exponent(p, upper=2.0, include_upper=True)
    check_engine(engine)
    grid = grid or GridSpec()
    reach = 2.0 ** N / 4.0
    if grid.half_width < reach * margin:
        raise WindowTooSmallError(
            f"window half-width {grid.half_width} < 2^N/4 * margin = {reach * margin}")
    q = conjugate_exponent(p) if q is None else check_exponent(q, "q")
    family = cascade_family(N)
    f = band_signal(grid, 0.0, N)
    if engine == "fft":
        norm_f = lp_norm(f, p)
    else:
        norm_f = lp_norm(Signal(grid, analytic.modulus_band(float(N), grid.x)), p)
    g = g_function(f, family, q, engine, n_jobs=n_jobs)
    norm_g = lp_norm(g, p)
    edge = min(reach, grid.half_width)
    region = restricted_lp_norm(g, p, -edge, edge)
    bound = analytic.cascade_norm_bound(p, N)
    return ConjectureRecord(N, p, q, engine, norm_f, norm_g, region, bound,
                            norm_g / norm_f, norm_g >= bound * (1.0 - tolerance))
