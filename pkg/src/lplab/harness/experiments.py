"""Experiment runners. Each takes an ExperimentConfig and returns a Report."""

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

import numpy as np

from .. import analytic, families
from ..errors import MembershipError, ResolutionError
from ..grid import Signal, indicator, lp_norm
from ..mixed import conjecture_ratio, g_function, relative_discrepancy
from ..moments import (Decomposition, finite_j_sum, in_D, mean_correct, moment,
                       moment_bound_check)
from ..spectral import Spectrum, band_signal, bin_slice, bins_in, inverse
from ..validation import conjugate_exponent
from .report import Report, Row

CASCADE_FFT_MAX_N = 6
UNIT_TOL = 0.02
BOUND_TOL = 0.01
CROSS_TOL = 1e-3
CROSS_MIN_BINS = 32
SANITY_BRACKET = (0.05, 20.0)
N_EXPONENTIALS = 32


def _engines(cfg):
    return ("analytic", "fft") if cfg.engine == "both" else (cfg.engine,)


def _run_cells(cfg, func, cells):
    """Evaluate ``func(cell) -> list[Row]`` over cells, in a pool when ``cfg.jobs > 1``."""

    def timed(cell):
        start = time.perf_counter()
        rows = func(cell)
        if cfg.timing:
            ms = (time.perf_counter() - start) * 1e3
            rows = [replace(r, wall_ms=ms) for r in rows]
        return rows

    if cfg.jobs == 1:
        batches = [timed(c) for c in cells]
    else:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            batches = list(pool.map(timed, cells))
    return Report(r for batch in batches for r in batch)


def _row(cfg, experiment, engine, passed, **values):
    return Row(experiment=experiment, engine=engine, W=cfg.grid.half_width,
               s=cfg.grid.samples_per_unit, passed=passed, **values)


def _closed_form_norm(grid, width, p):
    return lp_norm(Signal(grid, analytic.modulus_band(float(width), grid.x)), p)


# unit-interval family -------------------------------------------------------

def run_unit_experiment(cfg):
    """``||f_N||_p`` scaling and the unit-family square functions with q = 2 and q = p'."""
    grid = cfg.grid
    Ns = cfg.N or (1, 2, 4, 8)
    signals = {N: band_signal(grid, 0.0, N) for N in sorted(set(Ns) | {1})}

    def cell(args):
        N, p, engine = args
        pd = conjugate_exponent(p)
        f = signals[N]
        if engine == "fft":
            base, norm_f = lp_norm(signals[1], p), lp_norm(f, p)
        else:
            base, norm_f = _closed_form_norm(grid, 1, p), _closed_form_norm(grid, N, p)
        fam = families.unit(0, N - 1)
        g2 = lp_norm(g_function(f, fam, 2.0, engine), p)
        gd = lp_norm(g_function(f, fam, pd, engine), p)
        scaled = analytic.band_norm_scaling(N, p, base)
        tol = cfg.tol(UNIT_TOL)
        out = []
        for name, q, norm_g, predicted, measured in (
                ("unit/scaling", None, None, scaled, norm_f),
                ("unit/square_q2", 2.0, g2, math.sqrt(N) * base, g2),
                ("unit/square_dual", pd, gd, norm_f, gd)):
            ratio = measured / predicted
            out.append(_row(cfg, name, engine, abs(ratio - 1.0) <= tol, N=N, p=p, q=q,
                            norm_f=norm_f, norm_g=norm_g, predicted=predicted, ratio=ratio))
        return out

    cells = [(N, p, e) for N in Ns for p in cfg.p for e in _engines(cfg)]
    return _run_cells(cfg, cell, cells)


# cascade family -------------------------------------------------------------

def _cascade_engines(cfg, N):
    if cfg.engine == "both":
        return ("analytic", "fft") if N <= CASCADE_FFT_MAX_N else ("analytic",)
    return (cfg.engine,)


def pointwise_scan(N, p, grid, q=None):
    """Smallest ``g(x) - bound(x)`` and ``g(x) / bound(x)`` over grid points with
    ``1/4 <= |x| <= 2^N / 4``."""
    x = grid.x
    lo, hi = 0.25, 2.0 ** N / 4.0
    pts = x[(np.abs(x) >= lo) & (np.abs(x) <= hi)]
    g = analytic.cascade_g(N, q or conjugate_exponent(p), pts)
    bound = analytic.cascade_pointwise_bound(p, pts)
    return float(np.min(g - bound)), float(np.min(g / bound))


def run_cascade_experiment(cfg):
    """Cascade-family ratios, the norm and pointwise lower bounds, and the trend in N."""
    grid = cfg.grid
    Ns = sorted(cfg.N or (1, 2, 4, 8))
    fixed_q = cfg.q if isinstance(cfg.q, tuple) else (None,)

    def cell(args):
        N, p, q, engine = args
        rec = conjecture_ratio(N, p, engine, grid, margin=cfg.margin,
                               tolerance=cfg.tol(BOUND_TOL), q=q)
        floor = rec.lower_bound * (1.0 - cfg.tol(BOUND_TOL))
        rows = [
            _row(cfg, "cascade/ratio", engine, rec.holds, N=N, p=p, q=rec.q,
                 norm_f=rec.norm_f, norm_g=rec.norm_g, paper_bound=rec.lower_bound,
                 ratio=rec.ratio),
            _row(cfg, "cascade/region_norm", engine, rec.norm_g_region >= floor, N=N, p=p,
                 q=rec.q, norm_g=rec.norm_g_region, paper_bound=rec.lower_bound,
                 ratio=rec.norm_g_region / rec.lower_bound),
        ]
        if engine == "analytic" and q is None:
            gap, worst = pointwise_scan(N, p, grid)
            rows.append(_row(cfg, "cascade/pointwise", engine, gap >= -1e-12, N=N, p=p,
                             q=rec.q, ratio=worst))
        return rows

    cells = [(N, p, q, e) for N in Ns for p in cfg.p for q in fixed_q
             for e in _cascade_engines(cfg, N)]
    report = _run_cells(cfg, cell, cells)
    return report + _trend_rows(cfg, report)


def _trend_rows(cfg, report):
    rows = []
    ratios = {}
    for r in report:
        if r.experiment == "cascade/ratio":
            ratios.setdefault((r.p, r.q, r.engine), []).append((r.N, r.ratio))
    for (p, q, engine), series in ratios.items():
        series.sort()
        if len(series) < 2:
            continue
        values = [v for _, v in series]
        if p < 2.0:
            steps = [b / a for a, b in zip(values, values[1:])]
            rows.append(_row(cfg, "cascade/monotone", engine, all(s > 1.0 for s in steps),
                             p=p, q=q, ratio=min(steps)))
        else:
            spread = max(values) / min(values)
            rows.append(_row(cfg, "cascade/control", engine, spread <= cfg.tol(3.0),
                             p=p, q=q, ratio=spread))
    return Report(rows)


def log_slope(Ns, values):
    """Least-squares slope of ``log(values)`` against ``log(Ns)``."""
    return float(np.polyfit(np.log(np.asarray(Ns, float)), np.log(np.asarray(values)), 1)[0])


# dyadic family --------------------------------------------------------------

def random_band_signal(grid, family, rng, n_terms=N_EXPONENTIALS):
    """Sum of ``n_terms`` complex exponentials at bin frequencies drawn uniformly
    from the union of ``family``, with amplitudes uniform on the unit disc."""
    lengths = np.array([iv.length for iv in family])
    picks = rng.choice(len(family), size=n_terms, p=lengths / lengths.sum())
    bins = np.zeros(grid.size, dtype=np.complex128)
    for k in picks:
        sl = bin_slice(family[k], grid)
        j = sl.start + int(rng.integers(sl.stop - sl.start))
        radius = math.sqrt(rng.random())
        angle = 2.0 * math.pi * rng.random()
        # inverse() scales by dxi, so a bin value of a/dxi yields a * exp(2 pi i xi x)
        bins[j] += radius * complex(math.cos(angle), math.sin(angle)) / grid.dxi
    return inverse(Spectrum(grid, bins))


def run_dyadic_experiment(cfg):
    """Empirical brackets for ``||S_D f||_p / ||f||_p`` over random dyadic-band signals."""
    grid = cfg.grid
    fam = families.dyadic(cfg.dyadic_min, cfg.resolved_dyadic_max)
    rng = np.random.default_rng(cfg.seed)
    start = time.perf_counter()
    trials = [random_band_signal(grid, fam, rng) for _ in range(cfg.trials)]

    def cell(f):
        g = g_function(f, fam, 2.0, "fft")
        return [lp_norm(g, p) / lp_norm(f, p) for p in cfg.p]

    if cfg.jobs == 1:
        ratios = np.array([cell(f) for f in trials])
    else:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            ratios = np.array(list(pool.map(cell, trials)))
    ms = (time.perf_counter() - start) * 1e3 if cfg.timing else None
    rows = []
    for i, p in enumerate(cfg.p):
        lo, hi = float(ratios[:, i].min()), float(ratios[:, i].max())
        if p == 2.0:
            ok = max(abs(lo - 1.0), abs(hi - 1.0)) <= cfg.tol(1e-6)
        else:
            ok = SANITY_BRACKET[0] < lo and hi < SANITY_BRACKET[1]
        rows.append(_row(cfg, "dyadic/min", "fft", ok, p=p, q=2.0, ratio=lo, wall_ms=ms))
        rows.append(_row(cfg, "dyadic/max", "fft", ok, p=p, q=2.0, ratio=hi, wall_ms=ms))
    return Report(rows)


# moments --------------------------------------------------------------------

def random_bump(grid, rng, n_bumps=4):
    """Seeded smooth test function: a few Gaussian bumps with random centres and phases."""
    w = min(grid.half_width, 32.0)
    x = grid.x
    out = np.zeros(grid.size, dtype=np.complex128)
    for _ in range(n_bumps):
        c = rng.uniform(-w / 2, w / 2)
        width = rng.uniform(0.3, 3.0)
        amp = rng.normal() + 1j * rng.normal()
        out += amp * np.exp(-((x - c) / width) ** 2)
    return Signal(grid, out)


def run_moment_demo(cfg):
    """Vanishing moments of finite J-sums, sharpness of the moment bound, and the
    separation witness ``chi_[0,1)``."""
    grid = cfg.grid
    rng = np.random.default_rng(cfg.seed)
    rows = []
    clock = [time.perf_counter()]

    def add(name, passed, **values):
        now = time.perf_counter()
        if cfg.timing:
            values["wall_ms"] = (now - clock[0]) * 1e3
        clock[0] = now
        rows.append(_row(cfg, name, "analytic", passed, **values))

    empty = finite_j_sum([], grid=grid)
    add("moments/jsum_empty", empty.moments.max_abs() == 0.0
        and not np.any(empty.sum.samples), ratio=empty.moments.max_abs())

    single = finite_j_sum([(mean_correct(random_bump(grid, rng)), 1.0)])
    worst = single.moments.max_abs() / single.scale
    add("moments/jsum_single", worst <= cfg.tol(1e-10), ratio=worst)

    terms = [(mean_correct(random_bump(grid, rng)), 2.0 ** k) for k in range(-2, 3)]
    multi = finite_j_sum(terms)
    worst = multi.moments.max_abs() / multi.scale
    add("moments/jsum_multi", worst <= cfg.tol(1e-10), ratio=worst)

    chi = indicator(grid, 0.0, 1.0)
    zero = Signal.zeros(grid)
    for name, d in (("moments/sharp_l1", Decomposition(chi, zero)),
                    ("moments/sharp_l2", Decomposition(zero, chi))):
        chk = moment_bound_check(d, 0)
        add(name, chk.holds and abs(chk.lhs - chk.rhs) <= cfg.tol(1e-10),
            norm_f=chk.lhs, predicted=chk.rhs, ratio=chk.lhs / chk.rhs)

    v, w = random_bump(grid, rng), random_bump(grid, rng)
    d = Decomposition(v, w)
    checks = [moment_bound_check(d, n) for n in range(-8, 8)]
    add("moments/bound_random", all(c.holds for c in checks),
        ratio=max(c.lhs / c.rhs for c in checks))

    member = in_D(chi)
    norms_one = all(abs(lp_norm(chi, p) - 1.0) <= 1e-12 for p in cfg.p)
    add("moments/separation_witness",
        (not member) and member.offending == (0,) and norms_one,
        norm_f=lp_norm(chi, 2.0), ratio=abs(moment(chi, 0)))

    try:
        finite_j_sum([(chi, 1.0)])
        rejected = False
    except MembershipError as exc:
        rejected = exc.index == 0 and 0 in exc.cells
    add("moments/rejects_indicator", rejected)
    return Report(rows)


# engine cross-validation ----------------------------------------------------

def cross_validate(cfg):
    """Largest pointwise gap between FFT and closed-form cascade g-functions."""
    grid = cfg.grid
    Ns = cfg.N or tuple(range(1, CASCADE_FFT_MAX_N + 1))
    qs = cfg.q if isinstance(cfg.q, tuple) else (2.0, 4.0)
    for N in Ns:
        smallest = bins_in((0.0, 2.0 ** -(N - 1)), grid)
        if N > CASCADE_FFT_MAX_N or smallest < CROSS_MIN_BINS:
            raise ResolutionError(
                f"cross-validation needs N <= {CASCADE_FFT_MAX_N} and >= {CROSS_MIN_BINS} "
                f"bins per cascade interval; N={N} gives {smallest}")

    def cell(args):
        N, q = args
        f = band_signal(grid, 0.0, N)
        fam = families.cascade(N)
        exact = g_function(f, fam, q, "analytic").samples
        approx = g_function(f, fam, q, "fft").samples
        err = relative_discrepancy(approx, exact)
        return [_row(cfg, "validate", "both", err <= cfg.tol(CROSS_TOL), N=N, q=q,
                     ratio=err)]

    return _run_cells(cfg, cell, [(N, q) for N in Ns for q in qs])
