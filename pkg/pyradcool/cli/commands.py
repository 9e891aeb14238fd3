"""
The commands of the pyradcool command line

Each command reads a scenario and its arguments, writes its files into an
output directory and returns a summary of its results. :func:`execute`
runs a command and writes the record that :func:`replay` reproduces.
"""

import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..estimation.calibration_result import CalibrationResult, \
    RESONATOR_OUTPUT, SOURCE_OUTPUT
from ..estimation.noise_thermometry import fit_noise_thermometry, \
    link_transmission, to_quanta, InconsistentCalibrationError
from ..estimation.occupancy_extraction import extract_delta_n, \
    deduce_mode_occupancy, theory_curve
from ..estimation.reflection_fit import fit_reflection
from ..instrument.measurement import probe_reflection, thermometry_sweep, \
    on_resonance_spectrum, off_resonance_spectrum
from ..langevin.psd_estimation import fit_lorentzian
from ..langevin.trajectory import run_trajectories, TrajectoryResult
from ..langevin.trajectory_config import TrajectoryConfig, spawn_seeds
from ..physics.domain_error import PhysicalDomainError, PreconditionError
from ..physics.resonator_params import ResonatorParams
from ..physics.spectra import intracavity_psd, output_noise_psd, \
    input_noise_psd
from .pipeline import run_experiments, check_converged
from .run_record import RunRecord, ReplayMismatchError, file_digest, \
    write_json
from .scenario import Scenario
from .spectrum_io import write_table, write_spectrum, read_spectrum, \
    write_sweep, read_sweep

logger = logging.getLogger(__name__)

Outcome = Tuple[Dict[str, Any], List[str]]

# Below this occupancy difference the output spectrum is flat
FLAT_TOLERANCE = 1e-9
DISCREPANCY_THRESHOLD = 3.0
PSD_TOLERANCE = 0.1
# Half-width of the Lorentzian fit of the oracle density, in linewidths
PSD_FIT_HALF_WIDTH = 5.0
THEORY_POINTS = 201
INPUT_ARGUMENTS = ("sweeps", "on", "off", "resonator", "calibration")


def regime(delta_n: float) -> str:
    """ Names what the output spectrum shows for an occupancy difference

    Examples
    --------
    >>> regime(1.54), regime(0.0), regime(-0.5)
    ('peak', 'flat', 'dip')
    """
    if abs(delta_n) < FLAT_TOLERANCE:
        return "flat"
    return "peak" if delta_n > 0 else "dip"


def _header(scenario: Scenario, **extra) -> Dict[str, Any]:
    header = {"scenario": scenario.digest}
    header.update(extra)
    return header


def simulate(scenario: Scenario, out_dir: Path,
             measure: bool = False) -> Outcome:
    """ Writes the ideal spectra of each source temperature

    For each source temperature, ``spectra_<i>.csv`` holds S_aa, S̄_out
    and the baselines S̄_in and S̄_en; ``setup.dot`` is the thermal network.
    With ``measure``, the synthetic measurements needed by ``calibrate``
    and ``extract`` are written too.
    """
    res = scenario.res
    grid = scenario.grid()
    files = []
    panels = []
    for index, temperature in enumerate(scenario.source_temperatures):
        thermal = scenario.thermal(temperature)
        n_en, n_in = thermal.n_en, thermal.n_in
        s_out = output_noise_psd(res, n_en, n_in, grid)
        s_in = input_noise_psd(n_in, grid)
        name = f"spectra_{index}.csv"
        write_table(out_dir / name,
                    [("detuning", "Hz"), ("s_aa", "s/rad"),
                     ("s_out", "quanta"), ("s_in", "quanta"),
                     ("s_en", "quanta")],
                    [grid, intracavity_psd(res, n_en, n_in, grid).values,
                     s_out.values, s_in.values,
                     input_noise_psd(n_en, grid, label="s_en").values],
                    _header(scenario, f0=f"{res.f0!r} Hz",
                            source_temperature=f"{temperature!r} K"))
        files.append(name)
        excess = s_out.values - s_in.values
        panels.append({"source_temperature": temperature,
                       "n_en": n_en,
                       "n_in": n_in,
                       "n_mode": thermal.n_mode,
                       "delta_n": thermal.delta_n,
                       "regime": regime(thermal.delta_n),
                       "height": float(excess[np.argmax(np.abs(excess))]),
                       "file": name})
        logger.info("Source at %g K: %s, n_mode %g", temperature,
                    panels[-1]["regime"], thermal.n_mode)
    scenario.thermal(scenario.source_temperatures[0]).write_as_dot(
        str(out_dir / "setup.dot"))
    files.append("setup.dot")
    if measure:
        files += _measure(scenario, out_dir)
    results = {"panels": panels}
    write_json(out_dir / "summary.json", results)
    files.append("summary.json")
    return results, files


def _measure(scenario: Scenario, out_dir: Path) -> List[str]:
    """ Writes the probe, the fitted resonator, both thermometry sweeps and
    the raw on and off-resonance spectra """
    temperatures = scenario.source_temperatures
    seeds = spawn_seeds(scenario.seed, 3 + 2 * len(temperatures))
    res = scenario.res
    probe = probe_reflection(res, scenario.probe_grid(),
                             scenario["probe.noise"], seeds[0])
    write_spectrum(out_dir / "probe.csv", probe, _header(scenario))
    fitted, report = fit_reflection(probe)
    check_converged(report, "reflection fit")
    write_json(out_dir / "resonator.json",
               {"resonator": fitted.to_dict(), "sigmas": report.sigmas,
                "report": report.to_dict()})
    files = ["probe.csv", "resonator.json"]
    thermal = scenario.thermal(temperatures[0])
    for plane, name, seed in (
            (RESONATOR_OUTPUT, "thermometry_resonator.csv", seeds[1]),
            (SOURCE_OUTPUT, "thermometry_source.csv", seeds[2])):
        readings = thermometry_sweep(
            thermal, scenario.calibration_temperatures, plane,
            scenario["calibration.averages"], seed)
        write_sweep(out_dir / name, readings, plane, res.f0, _header(scenario))
        files.append(name)
    grid = scenario.grid()
    for index, temperature in enumerate(temperatures):
        thermal = scenario.thermal(temperature)
        header = _header(scenario, source_temperature=f"{temperature!r} K")
        on_seed, off_seed = seeds[3 + 2 * index], seeds[4 + 2 * index]
        write_spectrum(out_dir / f"on_{index}.csv",
                       on_resonance_spectrum(thermal, scenario.measurement,
                                             grid, on_seed), header)
        write_spectrum(out_dir / f"off_{index}.csv",
                       off_resonance_spectrum(thermal, scenario.measurement,
                                              grid, off_seed), header)
        files += [f"on_{index}.csv", f"off_{index}.csv"]
    return files


# pylint: disable=unused-argument
def calibrate(scenario: Scenario, out_dir: Path,
              sweeps: Sequence[str]) -> Outcome:
    """ Calibrates the chain from thermometry sweep files

    Each sweep gives the gain and the added noise at its reference plane;
    a sweep at each plane also gives the link.

    Raises
    ----------
    InconsistentCalibrationError
        If two sweeps share a plane or were taken at different frequencies
    """
    calibrations: Dict[str, CalibrationResult] = {}
    frequencies = set()
    for path in sweeps:
        readings, plane, frequency = read_sweep(path)
        if plane in calibrations:
            raise InconsistentCalibrationError(
                f"Two sweeps were taken at the {plane} plane")
        calibrations[plane] = fit_noise_thermometry(readings, frequency,
                                                     plane)
        frequencies.add(frequency)
    if len(frequencies) > 1:
        raise InconsistentCalibrationError(
            "The sweeps were taken at different frequencies")
    results: Dict[str, Any] = {plane: calibration.to_dict()
                               for plane, calibration in calibrations.items()}
    if len(calibrations) == 2:
        link = link_transmission(calibrations[SOURCE_OUTPUT],
                                 calibrations[RESONATOR_OUTPUT])
        results["link"] = link.to_dict()
        logger.info("Link transmission %g ± %g", link.transmission,
                    link.sigma_transmission)
    write_json(out_dir / "calibration.json", results)
    return results, ["calibration.json"]


def _read_json(path) -> Dict[str, Any]:
    with open(path, encoding="utf-8") as file:
        return json.load(file)


# pylint: disable=too-many-arguments,too-many-locals
def extract(scenario: Scenario, out_dir: Path, on: str, off: str,
            resonator: str, calibration: Optional[str] = None) -> Outcome:
    """ Deduces the mode occupancy from an on and an off-resonance spectrum

    Raw spectra are first converted to quanta with the resonator-output
    calibration, whose gain uncertainty is propagated. The environment
    occupancy comes from the scenario.

    Raises
    ----------
    GridMismatchError
        If the spectra are not on the same grid
    InconsistentCalibrationError
        If the calibration file has no resonator-output calibration
    """
    s_out, _ = read_spectrum(on)
    s_out_off, _ = read_spectrum(off)
    values = _read_json(resonator)
    res = ResonatorParams(values["resonator"]["f0"],
                          values["resonator"]["kappa_i"],
                          values["resonator"]["kappa_e"])
    sigmas = values.get("sigmas", {})
    gain_relative_sigma = 0.0
    if "raw" in (s_out.quantity, s_out_off.quantity):
        if calibration is None:
            raise PreconditionError("Raw spectra need a calibration file")
        calibrations = _read_json(calibration)
        if RESONATOR_OUTPUT not in calibrations:
            raise InconsistentCalibrationError(
                f"{calibration} has no {RESONATOR_OUTPUT} calibration")
        chain = CalibrationResult.from_dict(calibrations[RESONATOR_OUTPUT])
        s_out, s_out_off = to_quanta(s_out, chain), to_quanta(s_out_off,
                                                              chain)
        gain_relative_sigma = chain.sigma_gain / chain.gain
    delta_n = extract_delta_n(s_out, s_out_off, res,
                              gain_relative_sigma=gain_relative_sigma)
    estimate = deduce_mode_occupancy(scenario.n_en, delta_n, res,
                                     sigmas.get("kappa_i", 0.0),
                                     sigmas.get("kappa_e", 0.0))
    results = {"n_en": scenario.n_en,
               "resonator": res.to_dict(),
               "delta_n": delta_n.to_dict(),
               "estimate": estimate.to_dict()}
    write_json(out_dir / "estimate.json", results)
    return results, ["estimate.json"]


def measured_crossing(temperatures: Sequence[float],
                      n_modes: Sequence[float],
                      n_en: float) -> Optional[float]:
    """ Interpolates the first source temperature where the mode occupancy
    reaches the environment occupancy, None without a crossing

    Examples
    --------
    >>> measured_crossing([1.0, 2.0], [0.0, 1.0], 0.25)
    1.25
    """
    excess = np.asarray(n_modes, dtype=float) - n_en
    for index in range(len(excess) - 1):
        if excess[index] <= 0 < excess[index + 1]:
            lower, upper = temperatures[index], temperatures[index + 1]
            fraction = -excess[index] / (excess[index + 1] - excess[index])
            return float(lower + fraction * (upper - lower))
    return None


def sweep(scenario: Scenario, out_dir: Path, workers: int = 1) -> Outcome:
    """ Runs the full synthetic experiment at each source temperature

    ``sweep.csv`` has one row per source temperature with the deduced mode
    occupancy and the prediction, ``theory.csv`` the prediction on a fine
    grid.
    """
    temperatures = scenario.source_temperatures
    experiments = run_experiments(scenario, temperatures, scenario.seed,
                                  workers)
    res, n_en = scenario.res, scenario.n_en
    n_modes = [experiment.estimate.n_mode for experiment in experiments]
    write_table(out_dir / "sweep.csv",
                [("source_temperature", "K"), ("n_mode", "quanta"),
                 ("sigma_n_mode", "quanta"), ("delta_n", "quanta"),
                 ("sigma_delta_n", "quanta"), ("n_mode_theory", "quanta")],
                [temperatures, n_modes,
                 [item.estimate.sigma_n_mode for item in experiments],
                 [item.estimate.delta_n for item in experiments],
                 [item.estimate.sigma_delta_n for item in experiments],
                 theory_curve(res, n_en, scenario.link, res.f0,
                              temperatures)],
                _header(scenario, n_en=repr(n_en)))
    fine = np.linspace(temperatures[0], temperatures[-1],
                       THEORY_POINTS if len(temperatures) > 1 else 1)
    write_table(out_dir / "theory.csv",
                [("source_temperature", "K"), ("n_mode", "quanta")],
                [fine, theory_curve(res, n_en, scenario.link, res.f0, fine)],
                _header(scenario, n_en=repr(n_en)))
    try:
        transition = scenario.transition_temperature
    except PhysicalDomainError:
        transition = None
    results = {"n_en": n_en,
               "transition_temperature": transition,
               "measured_crossing": measured_crossing(temperatures, n_modes,
                                                      n_en),
               "points": [experiment.to_dict() for experiment in experiments]}
    write_json(out_dir / "sweep.json", results)
    return results, ["sweep.csv", "theory.csv", "sweep.json"]


def oracle_report(trajectories: Sequence[TrajectoryResult],
                  expected: float) -> Dict[str, Any]:
    """ Compares the occupancy of trajectories with its closed form

    Each trajectory and their inverse-variance weighted mean are flagged
    when they are more than 3 standard errors away.

    Parameters
    ----------
    trajectories : sequence of :class:`~pyradcool.langevin.TrajectoryResult`
        The trajectories
    expected : float
        The closed-form mode occupancy

    Returns
    ----------
    report : dict
        The estimates, their z-scores and the flags
    """
    rows = []
    for trajectory in trajectories:
        error = trajectory.standard_error
        z_score = (trajectory.occupancy_estimate - expected) / error
        rows.append({"seed": trajectory.config.seed,
                     "occupancy": trajectory.occupancy_estimate,
                     "standard_error": error,
                     "z_score": z_score,
                     "flagged": abs(z_score) > DISCREPANCY_THRESHOLD})
    weights = np.array([1.0 / row["standard_error"] ** 2 for row in rows])
    estimates = np.array([row["occupancy"] for row in rows])
    mean = float(np.sum(weights * estimates) / np.sum(weights))
    error = float(1.0 / math.sqrt(np.sum(weights)))
    z_score = (mean - expected) / error
    combined = {"occupancy": mean,
                "standard_error": error,
                "z_score": z_score,
                "relative_error": abs(mean - expected) / expected
                if expected > 0 else None,
                "flagged": abs(z_score) > DISCREPANCY_THRESHOLD}
    return {"expected": expected,
            "trajectories": rows,
            "combined": combined,
            "flagged": combined["flagged"] or
            any(row["flagged"] for row in rows)}


def oracle(scenario: Scenario, out_dir: Path, workers: int = 1) -> Outcome:
    """ Compares Langevin trajectories with the closed forms

    The trajectories simulate the first source temperature. The report
    ``oracle.json`` compares the occupancy and the Lorentzian density of
    the mode; ``psd.csv`` holds the averaged density next to its closed
    form.
    """
    thermal = scenario.thermal(scenario.source_temperatures[0])
    res = scenario.res
    configs = [TrajectoryConfig(res, thermal.n_en, thermal.n_in,
                                scenario["oracle.time_step"],
                                scenario["oracle.duration"], seed)
               for seed in spawn_seeds(scenario.seed,
                                       scenario["oracle.trajectories"])]
    trajectories = run_trajectories(configs, workers)
    report = oracle_report(trajectories, thermal.n_mode)
    first = trajectories[0].psd
    psd = first.with_values(np.mean([item.psd.values
                                     for item in trajectories], axis=0))
    closed = intracavity_psd(res, thermal.n_en, thermal.n_in, psd,
                             symmetrized=True)
    fitted, fit = fit_lorentzian(psd, half_width=PSD_FIT_HALF_WIDTH *
                                 res.kappa)
    expected_peak = float(intracavity_psd(res, thermal.n_en, thermal.n_in,
                                          np.array([0.0]),
                                          symmetrized=True).values[0])
    peak_error = abs(fitted["peak"] - expected_peak) / expected_peak
    fwhm_error = abs(fitted["fwhm"] - res.kappa) / res.kappa
    report["psd"] = {"peak": fitted["peak"],
                     "expected_peak": expected_peak,
                     "fwhm": fitted["fwhm"],
                     "expected_fwhm": res.kappa,
                     "converged": fit.converged,
                     "flagged": not fit.converged or
                     max(peak_error, fwhm_error) > PSD_TOLERANCE}
    report["flagged"] = report["flagged"] or report["psd"]["flagged"]
    if report["flagged"]:
        logger.warning("The oracle disagrees with the closed forms")
    write_table(out_dir / "psd.csv",
                [("detuning", "Hz"), ("s_aa", "s/rad"),
                 ("s_aa_closed_form", "s/rad")],
                [psd.frequencies, psd.values, closed.values],
                _header(scenario))
    write_json(out_dir / "oracle.json", report)
    return report, ["psd.csv", "oracle.json"]


COMMANDS = {"simulate": simulate,
            "calibrate": calibrate,
            "extract": extract,
            "sweep": sweep,
            "oracle": oracle}


def _input_files(arguments: Dict[str, Any]) -> List[str]:
    paths = []
    for key in INPUT_ARGUMENTS:
        value = arguments.get(key)
        if isinstance(value, (list, tuple)):
            paths += list(value)
        elif value is not None:
            paths.append(value)
    return paths


def execute(command: str, scenario: Scenario, out_dir,
            **arguments) -> RunRecord:
    """ Runs a command and writes its record

    Parameters
    ----------
    command : str
        One of simulate, calibrate, extract, sweep and oracle
    scenario : :class:`~pyradcool.cli.Scenario`
        The scenario
    out_dir : str or pathlib.Path
        The output directory, created when missing
    **arguments
        The arguments of the command; input files are recorded with their
        absolute paths and digests

    Returns
    ----------
    record : :class:`~pyradcool.cli.RunRecord`
        The record, also written as run.json
    """
    if command not in COMMANDS:
        raise PreconditionError(f"Unknown command {command}")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for key in INPUT_ARGUMENTS:
        value = arguments.get(key)
        if isinstance(value, (list, tuple)):
            arguments[key] = [str(Path(path).resolve()) for path in value]
        elif value is not None:
            arguments[key] = str(Path(value).resolve())
    inputs = {path: file_digest(path) for path in _input_files(arguments)}
    results, files = COMMANDS[command](scenario, out_dir, **arguments)
    outputs = {name: file_digest(out_dir / name) for name in files}
    record = RunRecord(command, scenario.to_text(), arguments, outputs,
                       results, inputs)
    record.write(out_dir)
    logger.info("%s wrote %d files into %s", command, len(files), out_dir)
    return record


def replay(path, out_dir) -> RunRecord:
    """ Re-runs a recorded command and checks it reproduces its outputs

    Parameters
    ----------
    path : str or pathlib.Path
        The record, or the directory holding it
    out_dir : str or pathlib.Path
        A fresh output directory

    Returns
    ----------
    record : :class:`~pyradcool.cli.RunRecord`
        The record of the replay

    Raises
    ----------
    ReplayMismatchError
        If an input changed or an output differs
    """
    original = RunRecord.read(path)
    for name, digest in original.inputs.items():
        if file_digest(name) != digest:
            raise ReplayMismatchError(f"The input {name} has changed")
    directory = Path(path) if Path(path).is_dir() else Path(path).parent
    if Path(out_dir).resolve() == directory.resolve():
        raise PreconditionError("A replay needs a fresh output directory")
    record = execute(original.command,
                     Scenario.from_text(original.scenario), out_dir,
                     **original.arguments)
    mismatches = original.mismatches(record)
    if mismatches:
        raise ReplayMismatchError(
            f"The replay differs on {', '.join(mismatches)}")
    return record
