"""Experiment orchestration, reports and the command-line interface."""

from .config import ExperimentConfig, build_config, read_config_file
from .experiments import (cross_validate, run_cascade_experiment, run_dyadic_experiment,
                          run_moment_demo, run_unit_experiment)
from .report import COLUMNS, Report, Row, emit, load
from .selftest import run_selftest

__all__ = [
    "COLUMNS", "ExperimentConfig", "Report", "Row", "build_config", "cross_validate",
    "emit", "load", "read_config_file", "run_cascade_experiment", "run_dyadic_experiment",
    "run_moment_demo", "run_selftest", "run_unit_experiment",
]
