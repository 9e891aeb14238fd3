"""
The pyradcool command line
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from .. import __version__
from ..estimation.noise_thermometry import InconsistentCalibrationError
from ..physics.domain_error import PhysicalDomainError, PreconditionError
from ..physics.spectrum import GridMismatchError
from .commands import execute, replay
from .pipeline import ConvergenceError
from .run_record import ReplayMismatchError
from .scenario import Scenario, ScenarioError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIGURATION = 1
EXIT_CONVERGENCE = 2
EXIT_INCONSISTENT = 3

OUTPUT_VARIABLE = "PYRADCOOL_OUTPUT_DIR"
DEFAULT_OUTPUT = "pyradcool-output"


class _Parser(argparse.ArgumentParser):
    """ A parser whose usage errors are configuration errors """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIGURATION, f"{self.prog}: error: {message}\n")


def default_output_dir() -> Path:
    """ The output directory when --out is not given """
    return Path(os.environ.get(OUTPUT_VARIABLE) or DEFAULT_OUTPUT)


def build_parser() -> argparse.ArgumentParser:
    """ Builds the parser of the command line """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scenario", help="scenario file, the measured "
                                           "setup by default")
    common.add_argument("--out", help=f"output directory, ${OUTPUT_VARIABLE}"
                                      f" or ./{DEFAULT_OUTPUT} by default")
    common.add_argument("--seed", type=int, help="overrides run.seed")
    common.add_argument("--format", choices=("csv",), default="csv",
                        help="format of the data files")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for progress, -vv for details")
    parser = _Parser(prog="pyradcool",
                     description="Radiative cooling of a superconducting "
                                 "resonator: simulation and estimation")
    parser.add_argument("--version", action="version",
                        version=f"pyradcool {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)
    simulate = commands.add_parser(
        "simulate", parents=[common],
        help="write the ideal spectra of each source temperature")
    simulate.add_argument("--measure", action="store_true",
                          help="also write synthetic measurements")
    calibrate = commands.add_parser(
        "calibrate", parents=[common],
        help="calibrate the chain from thermometry sweeps")
    calibrate.add_argument("sweeps", nargs="+", help="sweep files")
    extract = commands.add_parser(
        "extract", parents=[common],
        help="deduce the mode occupancy from on and off spectra")
    extract.add_argument("--on", required=True,
                         help="on-resonance spectrum file")
    extract.add_argument("--off", required=True,
                         help="off-resonance spectrum file")
    extract.add_argument("--resonator", required=True,
                         help="resonator file written by simulate --measure")
    extract.add_argument("--calibration",
                         help="calibration file, needed for raw spectra")
    for name, text in (("sweep", "run the full experiment at each source "
                                 "temperature"),
                       ("oracle", "compare Langevin trajectories with the "
                                  "closed forms")):
        command = commands.add_parser(name, parents=[common], help=text)
        command.add_argument("--workers", type=int, default=1,
                             help="number of processes")
    again = commands.add_parser(
        "replay", parents=[common],
        help="re-run a record and compare its outputs")
    again.add_argument("record", help="run.json or its directory")
    return parser


def configure_logging(verbosity: int):
    """ Configures the root logger once for the command line """
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level,
                        format="%(levelname)s %(name)s: %(message)s")


def _load_scenario(args: argparse.Namespace) -> Scenario:
    if args.scenario:
        scenario = Scenario.from_file(args.scenario)
    else:
        scenario = Scenario.default()
    if args.seed is not None:
        scenario = scenario.with_seed(args.seed)
    return scenario


def _arguments(args: argparse.Namespace) -> Dict[str, Any]:
    if args.command == "simulate":
        return {"measure": args.measure}
    if args.command == "calibrate":
        return {"sweeps": list(args.sweeps)}
    if args.command == "extract":
        return {"on": args.on, "off": args.off, "resonator": args.resonator,
                "calibration": args.calibration}
    return {"workers": args.workers}


def main(argv: Optional[List[str]] = None) -> int:
    """ Runs the command line

    Parameters
    ----------
    argv : list of str, optional
        The arguments, those of the process by default

    Returns
    ----------
    code : int
        0 on success, 1 for a configuration error, 2 when a fit did not
        converge, 3 for inconsistent data
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    out_dir = Path(args.out) if args.out else default_output_dir()
    try:
        if args.command == "replay":
            replay(args.record, out_dir)
        else:
            execute(args.command, _load_scenario(args), out_dir,
                    **_arguments(args))
    except (GridMismatchError, InconsistentCalibrationError,
            ReplayMismatchError) as error:
        logger.error("%s", error)
        return EXIT_INCONSISTENT
    except ConvergenceError as error:
        logger.error("%s", error)
        return EXIT_CONVERGENCE
    except (ScenarioError, PhysicalDomainError, PreconditionError,
            OSError) as error:
        logger.error("%s", error)
        return EXIT_CONFIGURATION
    return EXIT_OK


def run():
    """ The entry point of the console script """
    sys.exit(main())
