"""Half-open frequency intervals and the dyadic, unit and cascade families.

Generated endpoints are dyadic rationals ``n + j 2^-n``; for the levels used
here they are exact in binary floating point, so disjointness and coverage
checks on generated families need no tolerance.
"""

import math
from dataclasses import dataclass, field
from pathlib import Path

from .errors import InvalidIntervalError, InvalidParameterError, InvalidRangeError, OverlapError

KINDS = ("dyadic", "unit", "cascade", "custom")


@dataclass(frozen=True, order=True)
class Interval:
    """The half-open interval ``[lo, hi)``."""

    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
            raise InvalidIntervalError(f"need finite lo < hi, got [{self.lo}, {self.hi})")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def length(self):
        return self.hi - self.lo

    def intersection_length(self, lo, hi):
        return max(0.0, min(self.hi, hi) - max(self.lo, lo))

    def shift(self, c):
        return Interval(self.lo + c, self.hi + c)

    def __iter__(self):
        yield self.lo
        yield self.hi


@dataclass(frozen=True)
class IntervalFamily:
    """A finite family of intervals, sorted by left endpoint."""

    kind: str
    intervals: tuple
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParameterError(f"unknown family kind {self.kind!r}")
        ivs = tuple(sorted(iv if isinstance(iv, Interval) else Interval(*iv)
                           for iv in self.intervals))
        object.__setattr__(self, "intervals", ivs)

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __getitem__(self, i):
        return self.intervals[i]

    @property
    def span(self):
        return self.intervals[0].lo, max(iv.hi for iv in self.intervals)

    def level(self, n):
        """Intervals of a cascade family that have length ``2^-n``."""
        if self.kind != "cascade":
            raise InvalidParameterError("levels are defined for cascade families only")
        return tuple(iv for iv in self.intervals if iv.length == 2.0 ** -n)


def _check_range(n_min, n_max):
    if int(n_min) != n_min or int(n_max) != n_max:
        raise InvalidParameterError(f"range bounds must be integers, got {n_min}, {n_max}")
    if n_min > n_max:
        raise InvalidRangeError(f"n_min={n_min} exceeds n_max={n_max}")
    return int(n_min), int(n_max)


def dyadic(n_min, n_max):
    """``[-2^(n+1), -2^n)`` and ``[2^n, 2^(n+1))`` for ``n_min <= n <= n_max``."""
    n_min, n_max = _check_range(n_min, n_max)
    ivs = []
    for n in range(n_min, n_max + 1):
        lo, hi = 2.0 ** n, 2.0 ** (n + 1)
        ivs.append(Interval(lo, hi))
        ivs.append(Interval(-hi, -lo))
    return IntervalFamily("dyadic", tuple(ivs), {"n_min": n_min, "n_max": n_max})


def unit(n_min, n_max):
    """``[n, n+1)`` for ``n_min <= n <= n_max``."""
    n_min, n_max = _check_range(n_min, n_max)
    ivs = tuple(Interval(n, n + 1) for n in range(n_min, n_max + 1))
    return IntervalFamily("unit", ivs, {"n_min": n_min, "n_max": n_max})


def cascade(N):
    """``[n + j 2^-n, n + (j+1) 2^-n)`` for ``0 <= n < N`` and ``0 <= j < 2^n``.

    Level ``n`` tiles ``[n, n+1)``; the family has ``2^N - 1`` intervals and
    tiles ``[0, N)``.
    """
    if isinstance(N, bool) or int(N) != N or N < 1:
        raise InvalidParameterError(f"N must be a positive integer, got {N!r}")
    N = int(N)
    if N > 52:
        raise InvalidParameterError("cascade levels beyond 52 are not exactly representable")
    ivs = []
    for n in range(N):
        step = 2.0 ** -n
        ivs.extend(Interval(n + j * step, n + (j + 1) * step) for j in range(2 ** n))
    return IntervalFamily("cascade", tuple(ivs), {"N": N})


def custom(intervals):
    """Family from arbitrary ``(lo, hi)`` pairs; overlapping input raises OverlapError."""
    fam = IntervalFamily("custom", tuple(intervals))
    if not fam.intervals:
        raise InvalidParameterError("a custom family needs at least one interval")
    report = validate(fam)
    if not report.disjoint:
        i, j = report.overlapping_pairs[0]
        raise OverlapError(
            f"intervals {fam[i]} and {fam[j]} overlap (total overlap {report.overlap_measure})")
    return fam


@dataclass(frozen=True)
class ValidationReport:
    disjoint: bool
    overlap_measure: float
    total_measure: float
    overlapping_pairs: tuple
    covers: bool = None


def validate(family, cover=None):
    """Check pairwise disjointness and, optionally, coverage of ``cover = (a, b)``.

    Coverage is up to measure zero: the union of the family must contain
    ``[a, b)`` except for finitely many points.
    """
    ivs = family.intervals
    pairs = []
    overlap = 0.0
    for i, a in enumerate(ivs):
        for j in range(i + 1, len(ivs)):
            b = ivs[j]
            if b.lo >= a.hi:
                break
            pairs.append((i, j))
            overlap += a.intersection_length(b.lo, b.hi)
    total = math.fsum(iv.length for iv in ivs)

    covers = None
    if cover is not None:
        a, b = float(cover[0]), float(cover[1])
        reach = a
        for iv in ivs:
            if iv.lo > reach:
                break
            reach = max(reach, iv.hi)
            if reach >= b:
                break
        covers = reach >= b
    return ValidationReport(not pairs, overlap, total, tuple(pairs), covers)


def parse_family(text):
    """Parse the text format: one ``lo hi`` pair per line, ``#`` starts a comment."""
    ivs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidParameterError(f"line {lineno}: expected 'lo hi', got {raw!r}")
        try:
            lo, hi = float(parts[0]), float(parts[1])
        except ValueError as exc:
            raise InvalidParameterError(f"line {lineno}: {exc}") from None
        ivs.append(Interval(lo, hi))
    return custom(ivs)


def load_family(path):
    return parse_family(Path(path).read_text())


def format_family(family):
    lines = [f"# {family.kind} family, {len(family)} intervals"]
    lines.extend(f"{iv.lo!r} {iv.hi!r}" for iv in family)
    return "\n".join(lines) + "\n"
