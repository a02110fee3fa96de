"""Command-line entry point: ``lplab <command> [options]``.

Exit status is 0 when every report row passes, 1 when a numerical check
fails and 2 on configuration or precondition errors.
"""

import argparse
import logging
import sys

from ..errors import LPLabError
from . import config as cfgmod
from .experiments import (cross_validate, run_cascade_experiment, run_dyadic_experiment,
                          run_moment_demo, run_unit_experiment)
from .report import emit, write
from .selftest import run_selftest

log = logging.getLogger("lplab")

RUNNERS = {
    "selftest": run_selftest,
    "unit": run_unit_experiment,
    "cascade": run_cascade_experiment,
    "dyadic": run_dyadic_experiment,
    "moments": run_moment_demo,
    "validate": cross_validate,
}
HELP = {
    "selftest": "projection, Plancherel, l^q nesting and determinism properties",
    "unit": "unit-interval family: norm scaling and square functions",
    "cascade": "cascade family: lower bounds and the ratio trend in N",
    "dyadic": "empirical Littlewood-Paley brackets on random signals",
    "moments": "vanishing cell moments of finite J-sums",
    "validate": "FFT versus closed-form g-functions",
}


def _shared():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--N", help="comma-separated truncation levels, e.g. 1,2,4,8")
    p.add_argument("--p", help="comma-separated exponents; fractions allowed, e.g. 4/3,2")
    p.add_argument("--q", help="'dual' or comma-separated l^q exponents")
    p.add_argument("--window", help="half-width W of the window [-W, W)")
    p.add_argument("--sps", help="samples per unit length")
    p.add_argument("--engine", choices=("fft", "analytic", "both"))
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--seed")
    p.add_argument("--trials")
    p.add_argument("--tolerance-scale", dest="tolerance_scale")
    p.add_argument("--margin", help="window safety margin for cascade runs")
    p.add_argument("--dyadic-min", dest="dyadic_min")
    p.add_argument("--dyadic-max", dest="dyadic_max")
    p.add_argument("--jobs", help="worker threads for experiment cells")
    p.add_argument("--timing", action="store_const", const="true",
                   help="record wall time per row (makes output run-dependent)")
    p.add_argument("--config", help="key=value file; flags override its values")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def build_parser():
    parser = argparse.ArgumentParser(prog="lplab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    shared = _shared()
    for name in RUNNERS:
        sub.add_parser(name, parents=[shared], help=HELP[name])
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")

    flags = {k: v for k, v in vars(args).items()
             if v is not None and k not in ("command", "config", "verbose")}
    try:
        file_values = cfgmod.read_config_file(args.config) if args.config else {}
        cfg = cfgmod.build_config(args.command, file_values, cfgmod.parse_values(flags))
        report = RUNNERS[args.command](cfg)
    except LPLabError as exc:
        print(f"lplab {args.command}: error: {exc}", file=sys.stderr)
        return 2

    try:
        if cfg.out:
            write(report, cfg.out, cfg.format)
        else:
            sys.stdout.buffer.write(emit(report, cfg.format))
            sys.stdout.flush()
    except OSError as exc:
        print(f"lplab {args.command}: error: {exc}", file=sys.stderr)
        return 2

    for row in report.failures:
        log.warning("FAIL %s N=%s p=%s q=%s engine=%s ratio=%s", row.experiment, row.N,
                    row.p, row.q, row.engine, row.ratio)
    print(f"lplab {args.command}: {len(report)} rows, {len(report.failures)} failed",
          file=sys.stderr)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
