"""Experiment configuration: defaults, key=value files and validation."""

import math
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from pathlib import Path

from ..errors import ConfigError, LPLabError
from ..grid import GridSpec
from ..mixed import ENGINES
from ..validation import check_exponent
from .report import FORMATS

KINDS = ("selftest", "unit", "cascade", "dyadic", "moments", "validate")
DEFAULT_N = (1, 2, 4, 8)
DEFAULT_P = (4 / 3, 3 / 2, 2.0)


@dataclass(frozen=True)
class ExperimentConfig:
    """Parameters of one experiment run.

    ``N`` and ``q`` left as None mean "the experiment's own default".
    ``q`` is either the string ``"dual"`` or a tuple of exponents.
    """

    kind: str = "unit"
    N: tuple = None
    p: tuple = DEFAULT_P
    q: object = None
    window: float = 4096.0
    sps: int = 32
    engine: str = "both"
    out: str = None
    format: str = "csv"
    seed: int = 0
    trials: int = 100
    tolerance_scale: float = 1.0
    margin: float = 4.0
    dyadic_min: int = -4
    dyadic_max: int = None
    jobs: int = 1
    timing: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f"unknown experiment {self.kind!r}; expected one of {KINDS}")
        if self.engine not in ENGINES:
            raise ConfigError(f"engine must be one of {ENGINES}, got {self.engine!r}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got {self.format!r}")
        try:
            self.grid
            for p in self.p:
                check_exponent(p)
            if isinstance(self.q, tuple):
                for q in self.q:
                    check_exponent(q, "q")
        except LPLabError as exc:
            raise ConfigError(str(exc)) from exc
        if self.q is not None and self.q != "dual" and not isinstance(self.q, tuple):
            raise ConfigError(f"q must be 'dual' or a tuple of exponents, got {self.q!r}")
        if self.N is not None and (not self.N or any(n < 1 for n in self.N)):
            raise ConfigError(f"N values must be positive integers, got {self.N}")
        if not self.p:
            raise ConfigError("at least one p is required")
        if self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials}")
        if not (self.tolerance_scale > 0 and math.isfinite(self.tolerance_scale)):
            raise ConfigError(f"tolerance-scale must be positive, got {self.tolerance_scale}")
        if self.margin <= 0:
            raise ConfigError(f"margin must be positive, got {self.margin}")
        if self.jobs < 1:
            raise ConfigError(f"jobs must be >= 1, got {self.jobs}")
        top = self.resolved_dyadic_max
        if self.dyadic_min > top:
            raise ConfigError(f"dyadic-min {self.dyadic_min} exceeds dyadic-max {top}")
        if 2.0 ** (top + 1) > self.grid.nyquist:
            raise ConfigError(f"dyadic-max {top} reaches past the Nyquist frequency")

    @property
    def grid(self):
        try:
            return GridSpec(self.window, self.sps)
        except LPLabError as exc:
            raise ConfigError(str(exc)) from exc

    @property
    def resolved_dyadic_max(self):
        if self.dyadic_max is not None:
            return self.dyadic_max
        return int(math.log2(self.grid.nyquist)) - 1

    def tol(self, value):
        return value * self.tolerance_scale

    def with_(self, **changes):
        return replace(self, **changes)


def _ints(text):
    return tuple(int(v) for v in _split(text))


def _reals(text):
    return tuple(float(Fraction(v)) for v in _split(text))


def _split(text):
    parts = [v.strip() for v in str(text).split(",") if v.strip()]
    if not parts:
        raise ValueError("empty list")
    return parts


def _q(text):
    text = str(text).strip()
    return "dual" if text == "dual" else _reals(text)


def _bool(text):
    low = str(text).strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


PARSERS = {
    "kind": str, "N": _ints, "p": _reals, "q": _q, "window": lambda v: float(Fraction(v)),
    "sps": int, "engine": str, "out": str, "format": str, "seed": int, "trials": int,
    "tolerance_scale": float, "margin": float, "dyadic_min": int, "dyadic_max": int,
    "jobs": int, "timing": _bool,
}
_ALIASES = {"tolerance-scale": "tolerance_scale", "dyadic-min": "dyadic_min",
            "dyadic-max": "dyadic_max", "n": "N"}


def parse_values(raw):
    """Convert a mapping of option names to strings into typed config fields."""
    known = {f.name for f in fields(ExperimentConfig)}
    out = {}
    for key, value in raw.items():
        name = _ALIASES.get(key, key).replace("-", "_")
        if name not in known:
            raise ConfigError(f"unknown configuration key {key!r}")
        try:
            out[name] = PARSERS[name](value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"bad value for {key}: {value!r} ({exc})") from None
    return out


def read_config_file(path):
    """Parse a ``key = value`` file; ``#`` starts a comment."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc.strerror or exc}") from None
    raw = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        raw[key] = value
    return parse_values(raw)


def build_config(kind, file_values=None, flag_values=None):
    """Defaults, then the config file, then command-line flags."""
    merged = dict(file_values or {})
    merged.update(flag_values or {})
    merged["kind"] = kind
    return ExperimentConfig(**merged)
