"""scikit-learn compatible wrappers around the projection and square-function operators.

Rows of ``X`` are signals sampled on a fixed grid (``2 * half_width *
samples_per_unit`` columns). ``fit`` resolves the interval family and
precomputes the bin ranges; ``transform`` applies them.
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from . import families
from .errors import EngineError, InvalidParameterError
from .grid import GridSpec, Signal, lp_norm
from .mixed import check_engine, g_function
from .spectral import MIN_BINS, Spectrum, bin_slice, check_projectable, forward, inverse
from .validation import check_exponent, check_samples, conjugate_exponent


def resolve_family(family):
    """Accept an IntervalFamily, ``("cascade", N)``, ``("unit", lo, hi)``,
    ``("dyadic", lo, hi)``, or a sequence of ``(lo, hi)`` pairs."""
    if isinstance(family, families.IntervalFamily):
        return family
    if isinstance(family, tuple) and family and isinstance(family[0], str):
        kind, *args = family
        builders = {"cascade": families.cascade, "unit": families.unit,
                    "dyadic": families.dyadic}
        if kind not in builders:
            raise InvalidParameterError(f"unknown family kind {kind!r}")
        return builders[kind](*args)
    if family is None:
        raise InvalidParameterError("family is required")
    return families.custom(family)


class _GridMixin:
    def _grid(self):
        return GridSpec(self.half_width, self.samples_per_unit)

    def _check_fitted(self):
        if not hasattr(self, "family_"):
            raise NotFittedError(f"{type(self).__name__} is not fitted yet; call fit first")


class FrequencyProjector(_GridMixin, TransformerMixin, BaseEstimator):
    """Filter bank of indicator multipliers, one output channel per interval.

    ``transform`` returns an array of shape (n_signals, n_intervals, n_samples).
    ``inverse_transform`` sums the channels, which recovers the input when
    the family covers its spectral support.
    """

    def __init__(self, family=("cascade", 3), half_width=4096.0, samples_per_unit=32,
                 min_bins=MIN_BINS):
        self.family = family
        self.half_width = half_width
        self.samples_per_unit = samples_per_unit
        self.min_bins = min_bins

    def fit(self, X=None, y=None):
        grid = self._grid()
        fam = resolve_family(self.family)
        for iv in fam:
            check_projectable(iv, grid, self.min_bins)
        if X is not None:
            check_samples(X, grid.size)
        self.grid_ = grid
        self.family_ = fam
        self.slices_ = [bin_slice(iv, grid) for iv in fam]
        self.n_features_in_ = grid.size
        return self

    def transform(self, X):
        self._check_fitted()
        arr = check_samples(X, self.grid_.size)
        out = np.empty((arr.shape[0], len(self.slices_), self.grid_.size), dtype=np.complex128)
        for i, row in enumerate(arr):
            spec = forward(Signal(self.grid_, row))
            for k, sl in enumerate(self.slices_):
                bins = np.zeros(self.grid_.size, dtype=np.complex128)
                bins[sl] = spec.bins[sl]
                out[i, k] = inverse(Spectrum(self.grid_, bins)).samples
        return out

    def inverse_transform(self, Y):
        self._check_fitted()
        return np.asarray(Y).sum(axis=1)


class SquareFunction(_GridMixin, TransformerMixin, BaseEstimator):
    """Pointwise l^q aggregate ``(sum_I |S_I f|^q)^(1/q)`` over an interval family.

    Parameters
    ----------
    family : IntervalFamily, tuple or sequence of pairs
        See :func:`resolve_family`.
    q : float or "dual"
        Aggregation exponent; ``"dual"`` uses ``p / (p - 1)``.
    p : float
        Lebesgue exponent used by :meth:`norm` (and by ``q="dual"``).
    engine : {"fft", "analytic", "both"}
        ``"analytic"`` needs band signals, i.e. :class:`~lplab.grid.Signal`
        inputs built by :func:`~lplab.spectral.band_signal`.
    """

    def __init__(self, family=("cascade", 3), q=2.0, p=2.0, engine="fft",
                 half_width=4096.0, samples_per_unit=32, min_bins=MIN_BINS):
        self.family = family
        self.q = q
        self.p = p
        self.engine = engine
        self.half_width = half_width
        self.samples_per_unit = samples_per_unit
        self.min_bins = min_bins

    def fit(self, X=None, y=None):
        grid = self._grid()
        check_engine(self.engine)
        p = check_exponent(self.p)
        self.q_ = conjugate_exponent(p) if self.q == "dual" else check_exponent(self.q, "q")
        fam = resolve_family(self.family)
        if self.engine != "analytic":
            for iv in fam:
                check_projectable(iv, grid, self.min_bins)
        if X is not None:
            self._signals(X, grid)
        self.grid_ = grid
        self.family_ = fam
        self.n_features_in_ = grid.size
        return self

    def _signals(self, X, grid):
        if isinstance(X, Signal):
            X = [X]
        if isinstance(X, (list, tuple)) and X and all(isinstance(s, Signal) for s in X):
            if any(s.grid != grid for s in X):
                raise InvalidParameterError("signal grid differs from the estimator grid")
            return list(X)
        if self.engine != "fft":
            raise EngineError("the analytic engine needs Signal inputs carrying a band")
        return [Signal(grid, row) for row in check_samples(X, grid.size)]

    def transform(self, X):
        self._check_fitted()
        sigs = self._signals(X, self.grid_)
        return np.stack([
            np.real(g_function(s, self.family_, self.q_, self.engine,
                               min_bins=self.min_bins).samples)
            for s in sigs])

    def norm(self, X):
        """Mixed L^p(l^q) norm of every input signal."""
        g = self.transform(X)
        p = check_exponent(self.p)
        return np.array([lp_norm(Signal(self.grid_, row), p) for row in g])
