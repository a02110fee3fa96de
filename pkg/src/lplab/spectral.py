"""Discrete Fourier analysis with the ``exp(-2 pi i x xi)`` convention.

The continuous transform ``F(xi) = integral f(x) exp(-2 pi i x xi) dx`` is
approximated at the bin centres ``xi_j = j / (2W)`` by ``dx`` times a DFT.
The window starts at ``-W``, which contributes the phase ``exp(2 pi i W xi_j)
= (-1)^j``. With these scalings the forward/inverse pair is exactly
inverse and Parseval reads ``dxi * sum |F|^2 = dx * sum |f|^2``.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (BandLimitError, GridMismatchError, InvalidParameterError,
                     ResolutionError, ResolutionWarning)
from .grid import GridSpec, Signal

MIN_BINS = 8


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Bin values in centred order, ``bins[j + M/2] ~ F(j / (2W))``."""

    grid: GridSpec
    bins: np.ndarray

    def __post_init__(self):
        arr = np.array(self.bins, dtype=np.complex128, copy=True)
        if arr.shape != (self.grid.size,):
            raise GridMismatchError(
                f"expected {self.grid.size} bins, got shape {arr.shape}")
        arr.flags.writeable = False
        object.__setattr__(self, "bins", arr)

    @property
    def xi(self):
        return self.grid.xi

    def energy(self):
        from .summation import compensated_sum
        return self.grid.dxi * compensated_sum(np.abs(self.bins) ** 2)


def _phase(m):
    # (-1)^j for j = -M/2 .. M/2-1; M/2 is even for every valid grid
    ph = np.ones(m)
    ph[1::2] = -1.0
    return ph


def forward(f):
    """Spectrum of ``f`` sampled at the grid's bin frequencies."""
    m = f.grid.size
    bins = f.grid.dx * _phase(m) * np.fft.fftshift(np.fft.fft(f.samples))
    return Spectrum(f.grid, bins)


def inverse(spectrum):
    """Signal whose :func:`forward` transform is ``spectrum``."""
    grid = spectrum.grid
    m = grid.size
    # dxi * M = s, and ifft already divides by M
    samples = grid.samples_per_unit * np.fft.ifft(np.fft.ifftshift(spectrum.bins * _phase(m)))
    return Signal(grid, samples)


def bin_slice(interval, grid):
    """Slice of centred bin indices ``j`` with ``xi_j`` in ``[lo, hi)``."""
    lo, hi = _endpoints(interval)
    m = grid.size
    two_w = 2.0 * grid.half_width
    start = min(max(math.ceil(lo * two_w) + m // 2, 0), m)
    stop = min(max(math.ceil(hi * two_w) + m // 2, 0), m)
    return slice(start, max(start, stop))


def bins_in(interval, grid):
    """Number of bin centres inside the half-open interval."""
    sl = bin_slice(interval, grid)
    return sl.stop - sl.start


def _endpoints(interval):
    if hasattr(interval, "lo"):
        return float(interval.lo), float(interval.hi)
    lo, hi = interval
    return float(lo), float(hi)


def check_projectable(interval, grid, min_bins=MIN_BINS, strict=True):
    """Raise unless ``interval`` sits inside the Nyquist band with enough bins."""
    lo, hi = _endpoints(interval)
    if lo >= hi:
        raise InvalidParameterError(f"empty interval [{lo}, {hi})")
    if lo < -grid.nyquist or hi > grid.nyquist:
        raise BandLimitError(
            f"[{lo}, {hi}) leaves the Nyquist band [{-grid.nyquist}, {grid.nyquist})")
    n = bins_in((lo, hi), grid)
    if n < min_bins:
        msg = f"[{lo}, {hi}) holds {n} bins, fewer than {min_bins}"
        if strict:
            raise ResolutionError(msg)
        warnings.warn(msg, ResolutionWarning, stacklevel=3)
    return n


def project_spectrum(spectrum, interval):
    """Keep the bins in ``interval``; zero the rest."""
    sl = bin_slice(interval, spectrum.grid)
    bins = np.zeros(spectrum.grid.size, dtype=np.complex128)
    bins[sl] = spectrum.bins[sl]
    return Spectrum(spectrum.grid, bins)


def project(f, interval, min_bins=MIN_BINS, strict=True):
    """Fourier multiplier by the indicator of the half-open ``interval``.

    Parameters
    ----------
    f : Signal
    interval : Interval or (lo, hi)
    min_bins : int
        Resolution guard: intervals covering fewer bins are rejected.
    strict : bool
        If False, an under-resolved interval only emits a ResolutionWarning.
    """
    check_projectable(interval, f.grid, min_bins, strict)
    return inverse(project_spectrum(forward(f), interval))


def band_signal(grid, a, b, construction="spectral"):
    """Signal whose Fourier transform is the indicator of ``[a, b)``.

    ``construction="spectral"`` builds the exactly band-limited grid signal
    (inverse DFT of the bin indicator), whose modulus is a Dirichlet kernel
    ``|sin(pi (b-a) x)| / (2W sin(pi |x| / 2W))`` when the endpoints fall on
    bins. ``"sampled"`` samples the closed form on the line instead; its DFT
    carries truncation leakage of order ``1 / W``.
    """
    if not a < b:
        raise InvalidParameterError(f"need a < b, got [{a}, {b})")
    if construction == "spectral":
        check_projectable((a, b), grid, min_bins=1)
        bins = np.zeros(grid.size, dtype=np.complex128)
        bins[bin_slice((a, b), grid)] = 1.0
        f = inverse(Spectrum(grid, bins))
        return Signal(grid, f.samples, band=(a, b))
    if construction == "sampled":
        from .analytic import eval_band
        return Signal(grid, eval_band(a, b, grid.x), band=(a, b))
    raise InvalidParameterError(f"unknown construction {construction!r}")
