"""Uniformly sampled functions on a symmetric window and their norms.

A :class:`GridSpec` discretises the line as ``x_k = -W + k/s`` for
``k = 0 .. 2*W*s - 1``. Integrals are left-endpoint rectangle sums
``dx * sum(...)``; this matches the DFT convention in :mod:`lplab.spectral`
exactly, so spatial and spectral bookkeeping agree to rounding.
"""

from dataclasses import dataclass, field
from functools import cached_property
from numbers import Number

import numpy as np

from .errors import GridMismatchError, InvalidParameterError, InvalidRangeError
from .summation import compensated_sum
from .validation import check_exponent, is_power_of_two


@dataclass(frozen=True)
class GridSpec:
    """Window ``[-half_width, half_width)`` sampled ``samples_per_unit`` times per unit."""

    half_width: float = 4096.0
    samples_per_unit: int = 32

    def __post_init__(self):
        if not is_power_of_two(self.half_width):
            raise InvalidParameterError(
                f"half_width must be a positive power of two, got {self.half_width}")
        s = self.samples_per_unit
        if isinstance(s, bool) or int(s) != s or not is_power_of_two(s):
            raise InvalidParameterError(
                f"samples_per_unit must be a positive power-of-two integer, got {s}")
        object.__setattr__(self, "half_width", float(self.half_width))
        object.__setattr__(self, "samples_per_unit", int(s))
        m = 2.0 * self.half_width * self.samples_per_unit
        if m < 4 or m != int(m):
            raise InvalidParameterError(f"grid must hold at least 4 samples, got {m}")

    @property
    def size(self):
        """Sample count M = 2 W s (a power of two)."""
        return int(2 * self.half_width * self.samples_per_unit)

    @property
    def dx(self):
        return 1.0 / self.samples_per_unit

    @property
    def dxi(self):
        """Frequency bin spacing 1 / (2 W)."""
        return 1.0 / (2.0 * self.half_width)

    @property
    def nyquist(self):
        return self.samples_per_unit / 2.0

    @cached_property
    def x(self):
        pts = -self.half_width + np.arange(self.size) * self.dx
        pts.flags.writeable = False
        return pts

    @cached_property
    def xi(self):
        """Centred bin frequencies ``k / (2W)`` for ``k = -M/2 .. M/2 - 1``."""
        m = self.size
        freqs = (np.arange(m) - m // 2) * self.dxi
        freqs.flags.writeable = False
        return freqs

    def index_range(self, a, b):
        """Half-open index slice of sample points with ``a <= x_k < b``."""
        lo = int(np.searchsorted(self.x, a, side="left"))
        hi = int(np.searchsorted(self.x, b, side="left"))
        return slice(lo, hi)


def _frozen(arr):
    arr = np.array(arr, copy=True)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class Signal:
    """Samples of a function on ``grid``.

    ``band`` is set when the signal is known to be the inverse transform of
    the indicator of ``[a, b)``; the closed-form engine relies on it.
    """

    grid: GridSpec
    samples: np.ndarray
    band: tuple = field(default=None)

    def __post_init__(self):
        arr = np.asarray(self.samples)
        if arr.dtype.kind not in "fc":
            arr = arr.astype(np.float64)
        elif arr.dtype.kind == "c":
            arr = arr.astype(np.complex128, copy=False)
        else:
            arr = arr.astype(np.float64, copy=False)
        if arr.shape != (self.grid.size,):
            raise GridMismatchError(
                f"expected {self.grid.size} samples, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise InvalidParameterError("signal samples must be finite")
        object.__setattr__(self, "samples", _frozen(arr))
        if self.band is not None:
            object.__setattr__(self, "band", (float(self.band[0]), float(self.band[1])))

    @classmethod
    def zeros(cls, grid):
        return cls(grid, np.zeros(grid.size))

    @classmethod
    def from_function(cls, grid, func):
        """Sample a vectorised callable at the grid points."""
        return cls(grid, func(grid.x))

    @property
    def x(self):
        return self.grid.x

    def _check_same_grid(self, other):
        if other.grid != self.grid:
            raise GridMismatchError(f"grids differ: {self.grid} vs {other.grid}")

    def __add__(self, other):
        if isinstance(other, Signal):
            self._check_same_grid(other)
            return Signal(self.grid, self.samples + other.samples)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Signal):
            self._check_same_grid(other)
            return Signal(self.grid, self.samples - other.samples)
        return NotImplemented

    def __neg__(self):
        return Signal(self.grid, -self.samples)

    def __mul__(self, other):
        if isinstance(other, Signal):
            self._check_same_grid(other)
            return Signal(self.grid, self.samples * other.samples)
        if isinstance(other, Number):
            return Signal(self.grid, self.samples * other)
        return NotImplemented

    __rmul__ = __mul__

    def __abs__(self):
        return Signal(self.grid, np.abs(self.samples))

    def modulate(self, c):
        """Multiply by ``exp(2 pi i c x)``; shifts the spectrum by ``c``."""
        return Signal(self.grid, self.samples * np.exp(2j * np.pi * c * self.grid.x))


def indicator(grid, a, b):
    """Samples of the indicator of ``[a, b)``."""
    return Signal(grid, ((grid.x >= a) & (grid.x < b)).astype(np.float64))


def lp_norm(f, p):
    """``(dx * sum |f(x_k)|^p)^(1/p)`` with compensated summation."""
    p = check_exponent(p)
    return _norm_of(np.abs(f.samples), p, f.grid.dx)


def restricted_lp_norm(f, p, a, b):
    """L^p norm of ``f`` over the sample points in ``[a, b)``."""
    p = check_exponent(p)
    w = f.grid.half_width
    if not (-w <= a < b <= w):
        raise InvalidRangeError(f"[{a}, {b}) is not a nonempty subrange of [{-w}, {w})")
    sl = f.grid.index_range(a, b)
    return _norm_of(np.abs(f.samples[sl]), p, f.grid.dx)


def _norm_of(mod, p, dx):
    peak = float(mod.max()) if mod.size else 0.0
    if peak == 0.0:
        return 0.0
    # scaling by the peak keeps |f|^p away from overflow/underflow
    return peak * (dx * compensated_sum((mod / peak) ** p)) ** (1.0 / p)


def inner_product(f, g):
    """``dx * sum f(x_k) conj(g(x_k))``."""
    if f.grid != g.grid:
        raise GridMismatchError(f"grids differ: {f.grid} vs {g.grid}")
    prod = f.samples * np.conj(g.samples)
    re = compensated_sum(np.real(prod))
    im = compensated_sum(np.imag(prod))
    return complex(f.grid.dx * re, f.grid.dx * im)
