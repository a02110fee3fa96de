"""Numerical Littlewood-Paley laboratory.

Frequency projections by interval indicators, pointwise l^q square
functions over interval families, mixed L^p(l^q) norms, closed forms for
band-limited test signals, and cell-moment probes.
"""

from .analytic import (BandSpec, CascadeBounds, band_norm_scaling, cascade_g,
                       cascade_norm_bound, cascade_pointwise_bound, eval_band, modulus_band,
                       unit_g)
from .errors import LPLabError
from .estimators import FrequencyProjector, SquareFunction
from .families import Interval, IntervalFamily, cascade, custom, dyadic, unit, validate
from .grid import GridSpec, Signal, indicator, inner_product, lp_norm, restricted_lp_norm
from .mixed import conjecture_ratio, g_function, mixed_norm
from .moments import (Decomposition, JWeight, finite_j_sum, in_D, j_weight, mean_correct,
                      moment, moment_bound_check)
from .spectral import Spectrum, band_signal, bins_in, forward, inverse, project

__version__ = "0.1.0"

__all__ = [
    "BandSpec", "CascadeBounds", "Decomposition", "FrequencyProjector", "GridSpec",
    "Interval", "IntervalFamily", "JWeight", "LPLabError", "Signal", "Spectrum",
    "SquareFunction", "band_norm_scaling", "band_signal", "bins_in", "cascade", "cascade_g",
    "cascade_norm_bound", "cascade_pointwise_bound", "conjecture_ratio", "custom", "dyadic",
    "eval_band", "finite_j_sum", "forward", "g_function", "in_D", "indicator",
    "inner_product", "inverse", "j_weight", "lp_norm", "mean_correct", "mixed_norm",
    "modulus_band", "moment", "moment_bound_check", "project", "restricted_lp_norm",
    "unit", "unit_g", "validate",
]
