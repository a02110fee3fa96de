"""Cell moments ``M_n u = integral_n^(n+1) u`` and the space of functions where they all vanish.

Every ``M_n`` is bounded on ``L^1 + L^2`` (``|M_n(v + w)| <= ||v||_1 +
||w||_2``, Cauchy-Schwarz on a unit cell), so a sum of functions with
vanishing cell moments again has vanishing cell moments. The J-method
builds interpolation spaces from such sums; finite sums here stand in for
the continuous representation.

The norm used for the vanishing-moment space is the L^1 norm.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import GridMismatchError, InvalidParameterError, InvalidRangeError, MembershipError
from .grid import Signal, lp_norm
from .summation import compensated_sum

MEMBERSHIP_TOL = 1e-10


def l1_norm(u):
    return u.grid.dx * compensated_sum(np.abs(u.samples))


def cell_indices(grid):
    """Integers ``n`` whose cell ``[n, n+1)`` lies inside the window."""
    w = int(grid.half_width) if grid.half_width >= 1 else 0
    return range(-w, w)


def _cell_slice(grid, n):
    if int(n) != n:
        raise InvalidParameterError(f"cell index must be an integer, got {n!r}")
    w = grid.half_width
    if not (-w <= n and n + 1 <= w):
        raise InvalidRangeError(f"cell [{n}, {n + 1}) is outside the window [{-w}, {w})")
    s = grid.samples_per_unit
    start = int((n + w) * s)
    return slice(start, start + s)


def _cell_matrix(u):
    # rows are the complete cells, in increasing n
    s = u.grid.samples_per_unit
    cells = len(cell_indices(u.grid))
    return u.samples[: cells * s].reshape(cells, s)


def moment(u, n):
    """Rectangle-rule integral of ``u`` over ``[n, n+1)``."""
    seg = u.samples[_cell_slice(u.grid, n)]
    re = compensated_sum(np.real(seg))
    im = compensated_sum(np.imag(seg)) if np.iscomplexobj(seg) else 0.0
    return complex(u.grid.dx * re, u.grid.dx * im)


def _all_moments(u):
    # pairwise numpy sums per cell; accurate to ~1e-16 relative for 32-ish samples
    return u.grid.dx * _cell_matrix(u).sum(axis=1)


@dataclass(frozen=True, eq=False)
class MomentProfile:
    signal: Signal
    cells: np.ndarray
    values: np.ndarray

    def __len__(self):
        return len(self.cells)

    def __getitem__(self, n):
        return complex(self.values[int(n) - int(self.cells[0])])

    def max_abs(self):
        return float(np.max(np.abs(self.values))) if len(self.values) else 0.0


def moment_profile(u):
    """All cell moments of ``u``."""
    cells = np.array(list(cell_indices(u.grid)), dtype=np.int64)
    return MomentProfile(u, cells, _all_moments(u))


@dataclass(frozen=True)
class Membership:
    member: bool
    offending: tuple

    def __bool__(self):
        return self.member


def in_D(u, tol=MEMBERSHIP_TOL):
    """Whether every complete cell moment satisfies ``|M_n u| <= tol * max(1, ||u||_1)``."""
    if not tol > 0:
        raise InvalidParameterError(f"tol must be positive, got {tol}")
    prof = moment_profile(u)
    limit = tol * max(1.0, l1_norm(u))
    bad = prof.cells[np.abs(prof.values) > limit]
    return Membership(bad.size == 0, tuple(int(n) for n in bad))


def mean_correct(u):
    """Subtract from ``u`` its mean over each complete cell."""
    mat = _cell_matrix(u)
    corrected = mat - mat.mean(axis=1, keepdims=True)
    # subtracting the mean leaves an O(eps) residual; a second pass removes it
    corrected = corrected - corrected.mean(axis=1, keepdims=True)
    out = np.array(u.samples, copy=True)
    out[: corrected.size] = corrected.ravel()
    return Signal(u.grid, out)


@dataclass(frozen=True, eq=False)
class Decomposition:
    """``u = v + w`` with ``v`` playing the L^1 part and ``w`` the L^2 part."""

    v: Signal
    w: Signal

    def __post_init__(self):
        if self.v.grid != self.w.grid:
            raise GridMismatchError("decomposition parts live on different grids")

    @property
    def total(self):
        return self.v + self.w


@dataclass(frozen=True)
class MomentBound:
    lhs: float
    rhs: float
    holds: bool


def moment_bound_check(d, n):
    """``|M_n(v + w)|`` against ``||v||_1 + ||w||_2``."""
    lhs = abs(moment(d.total, n))
    rhs = l1_norm(d.v) + lp_norm(d.w, 2)
    return MomentBound(lhs, rhs, lhs <= rhs + 1e-10)


@dataclass(frozen=True)
class JWeight:
    theta: float
    q_interp: float
    t: float

    def __post_init__(self):
        if not 0.0 < self.theta < 1.0:
            raise InvalidParameterError(f"theta must lie in (0, 1), got {self.theta}")
        if not (1.0 <= self.q_interp < math.inf):
            raise InvalidParameterError(f"q_interp must lie in [1, inf), got {self.q_interp}")
        if not self.t > 0:
            raise InvalidParameterError(f"t must be positive, got {self.t}")


def j_weight(jw, norm_D, norm_2):
    """``t^-theta * max(norm_D, t * norm_2)``."""
    if norm_D < 0 or norm_2 < 0:
        raise InvalidParameterError("norms must be nonnegative")
    return jw.t ** -jw.theta * max(norm_D, jw.t * norm_2)


@dataclass(frozen=True, eq=False)
class JSum:
    sum: Signal
    moments: MomentProfile
    j_weights: tuple
    scale: float


def finite_j_sum(terms, grid=None, theta=0.5, q_interp=2.0):
    """Add ``(signal, t)`` terms whose cell moments all vanish.

    Each term must pass :func:`in_D` at 1e-10; the first that fails raises
    MembershipError naming its index and offending cells. ``scale`` is the
    sum of the terms' L^1 norms, the natural size for the moments of the sum.
    """
    terms = list(terms)
    if not terms:
        if grid is None:
            raise InvalidParameterError("an empty J-sum needs an explicit grid")
        zero = Signal.zeros(grid)
        return JSum(zero, moment_profile(zero), (), 0.0)
    grid = grid or terms[0][0].grid
    total = np.zeros(grid.size, dtype=np.complex128)
    weights = []
    scale = 0.0
    for k, (u, t) in enumerate(terms):
        if u.grid != grid:
            raise GridMismatchError(f"term {k} lives on a different grid")
        member = in_D(u, MEMBERSHIP_TOL)
        if not member:
            raise MembershipError(
                f"term {k} has nonvanishing moments on cells {member.offending[:5]}",
                index=k, cells=member.offending)
        n1 = l1_norm(u)
        weights.append(j_weight(JWeight(theta, q_interp, t), n1, lp_norm(u, 2)))
        scale += n1
        total += u.samples
    s = Signal(grid, total)
    return JSum(s, moment_profile(s), tuple(weights), scale)
