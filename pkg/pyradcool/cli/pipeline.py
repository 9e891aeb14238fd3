"""
The full synthetic experiment: measure, calibrate, extract, deduce
"""

import logging
from multiprocessing import Pool
from typing import Any, Dict, List, Sequence, Tuple

from ..estimation.calibration_result import CalibrationResult, \
    RESONATOR_OUTPUT, SOURCE_OUTPUT
from ..estimation.fit_report import FitReport
from ..estimation.noise_thermometry import fit_noise_thermometry, \
    link_transmission, to_quanta
from ..estimation.occupancy_estimate import OccupancyEstimate
from ..estimation.occupancy_extraction import extract_delta_n, \
    deduce_mode_occupancy
from ..estimation.reflection_fit import fit_reflection
from ..estimation.uncertain_value import UncertainValue
from ..instrument.measurement import probe_reflection, thermometry_sweep, \
    on_resonance_spectrum, off_resonance_spectrum
from ..instrument.thermal_scenario import ThermalScenario
from ..langevin.trajectory_config import spawn_seeds
from ..physics.link_params import LinkParams
from ..physics.resonator_params import ResonatorParams
from .scenario import Scenario

logger = logging.getLogger(__name__)

# probe, both thermometry sweeps, on and off spectra
SEED_STREAMS = 5


class ConvergenceError(Exception):
    """Exception raised when a fit did not converge"""


def check_converged(report: FitReport, what: str):
    """ Raises a ConvergenceError if a fit report is not converged """
    if not report.converged:
        raise ConvergenceError(f"The {what} did not converge: "
                               f"{report.message}")


def calibrate_chain(scenario: Scenario, thermal: ThermalScenario,
                    seeds: Sequence[int]) \
        -> Tuple[CalibrationResult, CalibrationResult, LinkParams]:
    """ Calibrates the chain at both reference planes and deduces the link

    Parameters
    ----------
    scenario : :class:`~pyradcool.cli.Scenario`
        The scenario, giving the sweep temperatures and averages
    thermal : :class:`~pyradcool.instrument.ThermalScenario`
        The setup
    seeds : sequence of int
        The seeds of the resonator-plane and the source-plane sweeps

    Returns
    ----------
    g_resonator : :class:`~pyradcool.estimation.CalibrationResult`
        The calibration at the resonator output
    g_source : :class:`~pyradcool.estimation.CalibrationResult`
        The calibration at the source output
    link : :class:`~pyradcool.physics.LinkParams`
        The link deduced from both
    """
    temperatures = scenario.calibration_temperatures
    averages = scenario["calibration.averages"]
    calibrations = [
        fit_noise_thermometry(
            thermometry_sweep(thermal, temperatures, plane, averages, seed),
            thermal.frequency, plane)
        for plane, seed in zip((RESONATOR_OUTPUT, SOURCE_OUTPUT), seeds)]
    g_resonator, g_source = calibrations
    return g_resonator, g_source, link_transmission(g_source, g_resonator)


class ExperimentResult:
    """ The outcome of a synthetic experiment

    Parameters
    ----------
    thermal : :class:`~pyradcool.instrument.ThermalScenario`
        The true setup
    res : :class:`~pyradcool.physics.ResonatorParams`
        The resonator fitted from the probe
    reflection : :class:`~pyradcool.estimation.FitReport`
        The report of the reflection fit
    calibration : :class:`~pyradcool.estimation.CalibrationResult`
        The calibration at the resonator output
    link : :class:`~pyradcool.physics.LinkParams`
        The link deduced from the calibrations
    delta_n : :class:`~pyradcool.estimation.UncertainValue`
        The extracted occupancy difference
    estimate : :class:`~pyradcool.estimation.OccupancyEstimate`
        The deduced mode occupancy

    """

    # pylint: disable=too-many-arguments
    def __init__(self, thermal: ThermalScenario, res: ResonatorParams,
                 reflection: FitReport, calibration: CalibrationResult,
                 link: LinkParams, delta_n: UncertainValue,
                 estimate: OccupancyEstimate):
        self._thermal = thermal
        self._res = res
        self._reflection = reflection
        self._calibration = calibration
        self._link = link
        self._delta_n = delta_n
        self._estimate = estimate

    @property
    def thermal(self) -> ThermalScenario:
        """ The true setup """
        return self._thermal

    @property
    def res(self) -> ResonatorParams:
        """ The fitted resonator """
        return self._res

    @property
    def reflection(self) -> FitReport:
        """ The report of the reflection fit """
        return self._reflection

    @property
    def calibration(self) -> CalibrationResult:
        """ The calibration at the resonator output """
        return self._calibration

    @property
    def link(self) -> LinkParams:
        """ The deduced link """
        return self._link

    @property
    def delta_n(self) -> UncertainValue:
        """ The extracted occupancy difference """
        return self._delta_n

    @property
    def estimate(self) -> OccupancyEstimate:
        """ The deduced mode occupancy """
        return self._estimate

    def covers(self, k: float = 2.0) -> bool:
        """ Whether the true mode occupancy is within k reported standard
        deviations of the estimate """
        return abs(self._estimate.n_mode - self._thermal.n_mode) <= \
            k * self._estimate.sigma_n_mode

    def to_dict(self) -> Dict[str, Any]:
        """ Gives the result as a dictionary """
        return {"source_temperature": self._thermal.source_temperature,
                "true": {"n_in": self._thermal.n_in,
                         "n_mode": self._thermal.n_mode,
                         "delta_n": self._thermal.delta_n},
                "resonator": self._res.to_dict(),
                "resonator_sigmas": self._reflection.sigmas,
                "calibration": self._calibration.to_dict(),
                "link": self._link.to_dict(),
                "estimate": self._estimate.to_dict()}

    def __repr__(self) -> str:
        return (f"ExperimentResult(source_temperature="
                f"{self._thermal.source_temperature!r}, "
                f"n_mode={self._estimate.n_mode!r} ± "
                f"{self._estimate.sigma_n_mode!r})")


def run_experiment(scenario: Scenario, source_temperature: float,
                   seed: int) -> ExperimentResult:
    """ Runs the full synthetic experiment at one source temperature

    The resonator is fitted from a noisy probe, the chain is calibrated by
    noise thermometry at both planes, the on and off-resonance spectra are
    measured, converted to quanta and integrated, and the mode occupancy
    is deduced with the environment occupancy known.

    Parameters
    ----------
    scenario : :class:`~pyradcool.cli.Scenario`
        The scenario
    source_temperature : float
        The temperature of the thermal source, in K
    seed : int
        The seed of the run, split into independent streams

    Returns
    ----------
    result : :class:`~pyradcool.cli.ExperimentResult`
        The estimates next to the true setup

    Raises
    ----------
    ConvergenceError
        If the reflection fit did not converge
    """
    thermal = scenario.thermal(source_temperature)
    seeds = spawn_seeds(seed, SEED_STREAMS)
    probe = probe_reflection(scenario.res, scenario.probe_grid(),
                             scenario["probe.noise"], seeds[0])
    res, report = fit_reflection(probe)
    check_converged(report, "reflection fit")
    g_resonator, _, link = calibrate_chain(scenario, thermal, seeds[1:3])
    grid = scenario.grid()
    s_out = to_quanta(on_resonance_spectrum(thermal, scenario.measurement,
                                            grid, seeds[3]), g_resonator)
    s_out_off = to_quanta(off_resonance_spectrum(thermal,
                                                 scenario.measurement, grid,
                                                 seeds[4]), g_resonator)
    delta_n = extract_delta_n(
        s_out, s_out_off, res,
        gain_relative_sigma=g_resonator.sigma_gain / g_resonator.gain)
    sigmas = report.sigmas
    estimate = deduce_mode_occupancy(scenario.n_en, delta_n, res,
                                     sigmas["kappa_i"], sigmas["kappa_e"])
    logger.info("Source at %g K: n_mode %g ± %g (true %g)",
                source_temperature, estimate.n_mode, estimate.sigma_n_mode,
                thermal.n_mode)
    return ExperimentResult(thermal, res, report, g_resonator, link, delta_n,
                            estimate)


def run_experiments(scenario: Scenario, temperatures: Sequence[float],
                    seed: int, workers: int = 1) -> List[ExperimentResult]:
    """ Runs the experiment at several source temperatures

    Each temperature gets its own seed spawned from the seed, so the
    results do not depend on the number of workers.

    Parameters
    ----------
    scenario : :class:`~pyradcool.cli.Scenario`
        The scenario
    temperatures : sequence of float
        The source temperatures, in K
    seed : int
        The seed of the sweep
    workers : int, optional
        The number of processes, 1 by default

    Returns
    ----------
    results : list of :class:`~pyradcool.cli.ExperimentResult`
        The results, in the order of the temperatures
    """
    arguments = [(scenario, temperature, child) for temperature, child in
                 zip(temperatures, spawn_seeds(seed, len(temperatures)))]
    if workers <= 1 or len(arguments) <= 1:
        return [run_experiment(*argument) for argument in arguments]
    with Pool(min(workers, len(arguments))) as pool:
        return pool.starmap(run_experiment, arguments)
