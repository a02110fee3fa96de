"""Input validation helpers shared by the functional API and the estimators."""

import math
from numbers import Real

import numpy as np

from .errors import GridMismatchError, InvalidParameterError


def check_exponent(value, name="p", upper=math.inf, include_upper=False):
    """Return ``value`` as a float if ``1 < value < upper`` (or ``<=``), else raise."""
    if isinstance(value, bool) or not isinstance(value, Real):
        raise InvalidParameterError(f"{name} must be a real number, got {value!r}")
    value = float(value)
    if not math.isfinite(value) or value <= 1.0:
        raise InvalidParameterError(f"{name} must be finite and > 1, got {value}")
    if value > upper or (value == upper and not include_upper):
        bound = "<=" if include_upper else "<"
        raise InvalidParameterError(f"{name} must be {bound} {upper}, got {value}")
    return value


def conjugate_exponent(p):
    """Dual index p' with 1/p + 1/p' = 1."""
    p = check_exponent(p)
    return p / (p - 1.0)


def is_power_of_two(value):
    value = float(value)
    if not math.isfinite(value) or value <= 0:
        return False
    mantissa, _ = math.frexp(value)
    return mantissa == 0.5


def check_positive_int(value, name):
    if isinstance(value, bool) or int(value) != value or value < 1:
        raise InvalidParameterError(f"{name} must be a positive integer, got {value!r}")
    return int(value)


def check_samples(X, n_samples):
    """Coerce ``X`` to a 2-D complex array of shape (n_signals, n_samples).

    Accepts a single sample vector, a 2-D array, or a sequence of
    :class:`~lplab.grid.Signal` objects.
    """
    from .grid import Signal

    if isinstance(X, Signal):
        X = [X]
    if isinstance(X, (list, tuple)) and X and isinstance(X[0], Signal):
        X = np.stack([s.samples for s in X])
    arr = np.asarray(X)
    if arr.ndim == 1:
        arr = arr[np.newaxis, :]
    if arr.ndim != 2:
        raise InvalidParameterError(f"expected a 1-D or 2-D array, got shape {arr.shape}")
    if arr.shape[1] != n_samples:
        raise GridMismatchError(
            f"signals have {arr.shape[1]} samples, the grid has {n_samples}")
    if not np.issubdtype(arr.dtype, np.number):
        raise InvalidParameterError(f"non-numeric input dtype {arr.dtype}")
    arr = arr.astype(np.complex128, copy=False)
    if not np.all(np.isfinite(arr)):
        raise InvalidParameterError("input contains NaN or infinity")
    return arr
