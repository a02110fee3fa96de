"""Report rows and their CSV / JSON wire formats."""

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, replace
from pathlib import Path

COLUMNS = ("experiment", "N", "p", "q", "engine", "W", "s", "norm_f", "norm_g",
           "predicted", "paper_bound", "ratio", "pass", "wall_ms")
FORMATS = ("csv", "json")
_FLOATS = ("p", "q", "W", "norm_f", "norm_g", "predicted", "paper_bound", "ratio", "wall_ms")


def round_sig(x, digits=9):
    """Round to ``digits`` significant digits (None passes through)."""
    if x is None:
        return None
    x = float(x)
    if not math.isfinite(x):
        return x
    return float(f"{x:.{digits}g}")


@dataclass(frozen=True)
class Row:
    experiment: str
    engine: str
    W: float
    s: int
    passed: bool
    N: int = None
    p: float = None
    q: float = None
    norm_f: float = None
    norm_g: float = None
    predicted: float = None
    paper_bound: float = None
    ratio: float = None
    wall_ms: float = None

    def __post_init__(self):
        for name in _FLOATS:
            object.__setattr__(self, name, round_sig(getattr(self, name)))
        object.__setattr__(self, "passed", bool(self.passed))
        object.__setattr__(self, "s", int(self.s))
        if self.N is not None:
            object.__setattr__(self, "N", int(self.N))

    @property
    def key(self):
        def k(v):
            return (v is not None, v if v is not None else 0)
        return (self.experiment, k(self.N), k(self.p), k(self.q), self.engine)

    def to_record(self):
        rec = asdict(self)
        rec["pass"] = rec.pop("passed")
        return {c: rec[c] for c in COLUMNS}

    @classmethod
    def from_record(cls, rec):
        rec = dict(rec)
        rec["passed"] = rec.pop("pass")
        return cls(**rec)


class Report:
    """Rows sorted by (experiment, N, p, q, engine), independent of execution order."""

    def __init__(self, rows=()):
        self.rows = sorted(rows, key=lambda r: r.key)

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def __eq__(self, other):
        return isinstance(other, Report) and self.rows == other.rows

    def __add__(self, other):
        return Report(self.rows + other.rows)

    @property
    def passed(self):
        return all(r.passed for r in self.rows)

    @property
    def failures(self):
        return [r for r in self.rows if not r.passed]

    def without_timing(self):
        return Report(replace(r, wall_ms=None) for r in self.rows)


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.9g}"
    return str(value)


def emit(report, fmt="csv"):
    """Serialise ``report`` to bytes; headers are always present."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        for row in report:
            rec = row.to_record()
            writer.writerow([_fmt(rec[c]) for c in COLUMNS])
        return buf.getvalue().encode("utf-8")
    if fmt == "json":
        records = [row.to_record() for row in report]
        return (json.dumps(records, indent=1) + "\n").encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def _parse_cell(name, text):
    if text == "":
        return None
    if name == "pass":
        return text == "true"
    if name in ("N", "s"):
        return int(text)
    if name in _FLOATS:
        return float(text)
    return text


def load(data, fmt="csv"):
    """Inverse of :func:`emit`."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    if fmt == "csv":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if tuple(header) != COLUMNS:
            raise ValueError(f"unexpected CSV header {header}")
        return Report(Row.from_record({c: _parse_cell(c, v) for c, v in zip(header, line)})
                      for line in reader if line)
    if fmt == "json":
        return Report(Row.from_record(rec) for rec in json.loads(text))
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def write(report, path, fmt="csv"):
    data = emit(report, fmt)
    path = Path(path)
    try:
        path.write_bytes(data)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc.strerror or exc}") from exc
    return data
