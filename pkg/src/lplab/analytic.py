"""Closed forms for band signals and the cascade square function.

A band signal has Fourier transform equal to the indicator of ``[a, b]``:

    f(x) = (exp(2 pi i b x) - exp(2 pi i a x)) / (2 pi i x)
         = exp(i pi (a + b) x) * sin(pi (b - a) x) / (pi x).

The second form is evaluated through :func:`numpy.sinc`, which has no
cancellation near ``x = 0`` and returns ``b - a`` there. Every projection
of ``f_N`` onto a subinterval of width ``w`` has modulus ``|sin(pi w x) /
(pi x)|``, so square functions over interval families reduce to weighted
sums of a few such moduli.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidIntervalError, InvalidParameterError
from .summation import ArrayAccumulator
from .validation import check_exponent, check_positive_int, conjugate_exponent


def eval_band(a, b, x):
    """Value at ``x`` of the inverse transform of the indicator of ``[a, b]``."""
    if not a < b:
        raise InvalidIntervalError(f"need a < b, got [{a}, {b}]")
    x = np.asarray(x, dtype=np.float64)
    w = b - a
    out = np.exp(1j * np.pi * (a + b) * x) * (w * np.sinc(w * x))
    return out if out.ndim else complex(out)


def modulus_band(w, x):
    """``|sin(pi w x) / (pi x)|``, equal to ``w`` at the origin."""
    if not w > 0:
        raise InvalidParameterError(f"width must be positive, got {w}")
    x = np.asarray(x, dtype=np.float64)
    out = np.abs(w * np.sinc(w * x))
    return out if out.ndim else float(out)


def weighted_band_sum(widths, counts, q, x):
    """``(sum_i counts[i] * modulus_band(widths[i], x)^q)^(1/q)``, summed in the given order."""
    q = check_exponent(q, "q")
    x = np.asarray(x, dtype=np.float64)
    acc = ArrayAccumulator(x.shape)
    for w, c in zip(widths, counts):
        acc.add(c * modulus_band(w, x) ** q)
    out = acc.result() ** (1.0 / q)
    return out if out.ndim else float(out)


def cascade_g(N, q, x):
    """Pointwise l^q sum of ``|S_I f_N|`` over the cascade family truncated at level N.

    Level ``n`` holds ``2^n`` intervals of width ``2^-n``, all giving the same
    modulus, so each level collapses to one weighted term.
    """
    N = check_positive_int(N, "N")
    widths = [2.0 ** -n for n in range(N)]
    counts = [2.0 ** n for n in range(N)]
    return weighted_band_sum(widths, counts, q, x)


def unit_g(N, q, x):
    """Pointwise l^q sum of ``|S_I f_N|`` over the unit intervals ``[n, n+1)``, ``n < N``."""
    N = check_positive_int(N, "N")
    q = check_exponent(q, "q")
    return N ** (1.0 / q) * modulus_band(1.0, x)


def cascade_pointwise_bound(p, x):
    """Lower bound ``2 / (pi (4|x|)^(1/p))`` for the cascade g-function at ``x != 0``.

    Valid for ``1/4 <= |x| <= 2^N / 4`` when the l^q exponent is ``p'``.
    """
    p = check_exponent(p, upper=2.0, include_upper=True)
    x = np.asarray(x, dtype=np.float64)
    if np.any(x == 0):
        raise DomainError("the pointwise bound is undefined at x = 0")
    out = 2.0 / (np.pi * (4.0 * np.abs(x)) ** (1.0 / p))
    return out if out.ndim else float(out)


def cascade_norm_bound(p, N):
    """``(2/pi) (N ln 2 / 2)^(1/p)``: lower bound for the L^p norm of the cascade g-function."""
    p = check_exponent(p, upper=2.0, include_upper=True)
    if not N > 0:
        raise InvalidParameterError(f"N must be positive, got {N}")
    return 2.0 / math.pi * (N * math.log(2.0) / 2.0) ** (1.0 / p)


def band_norm_scaling(N, p, base_norm):
    """Predicted ``||f_N||_p = N^(1/p') ||f_1||_p`` from a measured ``||f_1||_p``."""
    N = check_positive_int(N, "N")
    if not base_norm > 0:
        raise InvalidParameterError(f"base_norm must be positive, got {base_norm}")
    return N ** (1.0 / conjugate_exponent(p)) * base_norm


@dataclass(frozen=True)
class BandSpec:
    """Function whose Fourier transform is the indicator of ``[a, b]``."""

    a: float
    b: float

    def __post_init__(self):
        if not self.a < self.b:
            raise InvalidIntervalError(f"need a < b, got [{self.a}, {self.b}]")

    @property
    def width(self):
        return self.b - self.a

    def __call__(self, x):
        return eval_band(self.a, self.b, x)

    def modulus(self, x):
        return modulus_band(self.width, x)


@dataclass(frozen=True)
class CascadeBounds:
    """Exponent pair and truncation level for the cascade lower bounds."""

    p: float
    N: int

    def __post_init__(self):
        object.__setattr__(self, "p", check_exponent(self.p, upper=2.0, include_upper=True))
        object.__setattr__(self, "N", check_positive_int(self.N, "N"))

    @property
    def p_dual(self):
        return conjugate_exponent(self.p)

    @property
    def region(self):
        """``(1/4, 2^N / 4)``: the range of ``|x|`` where the pointwise bound holds."""
        return 0.25, 2.0 ** self.N / 4.0

    def pointwise(self, x):
        return cascade_pointwise_bound(self.p, x)

    @property
    def norm_lower_bound(self):
        return cascade_norm_bound(self.p, self.N)
