"""Property checks run by the ``selftest`` command."""

import time

import numpy as np

from .. import analytic, families
from ..grid import inner_product, lp_norm
from ..mixed import g_function
from ..spectral import band_signal, project
from .experiments import random_band_signal, run_dyadic_experiment
from .report import Report, Row, emit


def _rel(a, b):
    scale = float(np.max(np.abs(b)))
    return float(np.max(np.abs(a - b))) / (scale or 1.0)


def run_selftest(cfg):
    grid = cfg.grid
    rng = np.random.default_rng(cfg.seed)
    # band signal plus a random trigonometric polynomial on [0, 4)
    f = band_signal(grid, 0.0, 4.0) + random_band_signal(grid, families.unit(0, 3), rng)
    I, J = (1.0, 2.0), (2.5, 3.0)
    rows = []
    clock = [time.perf_counter()]

    def add(name, value, limit, **extra):
        now = time.perf_counter()
        if cfg.timing:
            extra["wall_ms"] = (now - clock[0]) * 1e3
        clock[0] = now
        rows.append(Row(experiment=f"selftest/{name}", engine=extra.pop("engine", "fft"),
                        W=grid.half_width, s=grid.samples_per_unit,
                        passed=value <= cfg.tol(limit), ratio=value, **extra))

    once = project(f, I)
    add("idempotence", _rel(project(once, I).samples, once.samples), 1e-12)

    energy = lp_norm(f, 2) ** 2
    for fam in (families.unit(0, 3), families.cascade(4)):
        total = sum((project(f, iv) for iv in fam), start=0 * f)
        add(f"additivity_{fam.kind}", _rel(total.samples, f.samples), 1e-10)
        parts = sum(lp_norm(project(f, iv), 2) ** 2 for iv in fam)
        add(f"energy_split_{fam.kind}", abs(parts - energy) / energy, 1e-10)
        g = g_function(f, fam, 2.0, "fft")
        add(f"plancherel_{fam.kind}", abs(lp_norm(g, 2) - energy ** 0.5) / energy ** 0.5,
            1e-6, p=2.0, q=2.0)

    add("orthogonality", abs(inner_product(project(f, I), project(f, J))) / energy, 1e-10)

    c = 64 * grid.dxi
    shifted = project(f.modulate(c), (I[0] + c, I[1] + c))
    add("modulation", _rel(np.abs(shifted.samples), np.abs(once.samples)), 1e-10)

    fam = families.cascade(4)
    band = band_signal(grid, 0.0, 4.0)
    worst = 0.0
    for engine in ("fft", "analytic"):
        gs = [np.real(g_function(band, fam, q, engine).samples) for q in (2.0, 3.0, 4.0, 8.0)]
        worst = max([worst] + [float(np.max(b - a)) for a, b in zip(gs, gs[1:])])
    x = grid.x
    for q1, q2 in ((1.5, 2.0), (2.0, 4.0)):
        worst = max(worst, float(np.max(analytic.cascade_g(8, q2, x)
                                        - analytic.cascade_g(8, q1, x))))
    add("lq_nesting", max(worst, 0.0), 1e-12, engine="both")

    small = cfg.with_(kind="dyadic", trials=3, timing=False)
    same = emit(run_dyadic_experiment(small)) == emit(run_dyadic_experiment(small))
    add("determinism", 0.0 if same else 1.0, 0.0)
    return Report(rows)
