"""
:mod:`pyradcool.cli`
====================

This module holds the ``pyradcool`` command line: scenario files, the full
synthetic experiment, the data files and the records that make every run
reproducible.

Available Classes
-----------------

:class:`~pyradcool.cli.Scenario`
    A complete description of a synthetic experiment
:class:`~pyradcool.cli.ExperimentResult`
    The outcome of a synthetic experiment
:class:`~pyradcool.cli.RunRecord`
    What a command was given and what it produced
:class:`~pyradcool.cli.ScenarioError`
    An error raised when a scenario is malformed
:class:`~pyradcool.cli.ConvergenceError`
    An error raised when a fit did not converge
:class:`~pyradcool.cli.ReplayMismatchError`
    An error raised when a replay does not reproduce a record

"""

from .scenario import Scenario, ScenarioError, DEFAULTS
from .pipeline import ExperimentResult, ConvergenceError, run_experiment, \
    run_experiments, calibrate_chain
from .run_record import RunRecord, ReplayMismatchError, file_digest
from .spectrum_io import (write_table,
                          read_table,
                          write_spectrum,
                          read_spectrum,
                          write_sweep,
                          read_sweep,
                          DataFormatError)
from .commands import execute, replay, oracle_report, measured_crossing, \
    regime

__all__ = ["Scenario",
           "ScenarioError",
           "DEFAULTS",
           "ExperimentResult",
           "ConvergenceError",
           "run_experiment",
           "run_experiments",
           "calibrate_chain",
           "RunRecord",
           "ReplayMismatchError",
           "file_digest",
           "write_table",
           "read_table",
           "write_spectrum",
           "read_spectrum",
           "write_sweep",
           "read_sweep",
           "DataFormatError",
           "execute",
           "replay",
           "oracle_report",
           "measured_crossing",
           "regime"]
