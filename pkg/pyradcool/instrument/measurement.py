"""
Synthetic measurements: detected spectra, thermometry sweeps and probe tones
"""

import logging
import math
from typing import Iterable, List, Tuple, Union

import numpy as np

from ..estimation.calibration_result import RESONATOR_OUTPUT, SOURCE_OUTPUT
from ..physics.domain_error import PhysicalDomainError, PreconditionError
from ..physics.occupancy import bose_einstein_occupancy
from ..physics.resonator_params import ResonatorParams
from ..physics.spectra import output_noise_psd, reflection_s11, \
    transmission_spectrum
from ..physics.spectrum import Spectrum
from .amplifier_chain import AmplifierChain
from .measurement_config import MeasurementConfig
from .thermal_scenario import ThermalScenario

logger = logging.getLogger(__name__)

Grid = Union[np.ndarray, Spectrum]


def _template(grid: Grid, absolute: bool) -> Spectrum:
    if isinstance(grid, Spectrum):
        return grid
    grid = np.asarray(grid, dtype=float)
    return Spectrum(grid, np.zeros(grid.size), absolute=absolute)


def measure_spectrum(ideal: Spectrum, amp: AmplifierChain,
                     cfg: MeasurementConfig, seed: int = 0) -> Spectrum:
    """ Detects a spectrum through the amplifier chain

    Each point is drawn from a Gaussian of mean G (S̄ + n_add) and of
    standard deviation mean/√(B τ N), the radiometer equation.

    Parameters
    ----------
    ideal : :class:`~pyradcool.physics.Spectrum`
        The spectrum at the input of the chain, in quanta
    amp : :class:`~pyradcool.instrument.AmplifierChain`
        The chain
    cfg : :class:`~pyradcool.instrument.MeasurementConfig`
        The settings
    seed : int, optional
        The seed of the fluctuations

    Returns
    ----------
    raw : :class:`~pyradcool.physics.Spectrum`
        The detected spectrum, with its per-point standard deviations

    Raises
    ----------
    PreconditionError
        If the spectrum is not in quanta
    """
    if ideal.quantity != "quanta":
        raise PreconditionError(
            f"Only spectra in quanta can be detected, got {ideal.quantity}")
    mean = amp.detect(ideal.values)
    sigma = mean * cfg.relative_sigma
    if cfg.relative_sigma == 0:
        values = mean
    else:
        rng = np.random.default_rng(seed)
        values = mean + sigma * rng.standard_normal(mean.size)
    return ideal.with_values(values, sigma=sigma, quantity="raw")


# pylint: disable=too-many-arguments
def apply_circulator_leakage(res: ResonatorParams, n_en: float, n_in: float,
                             cfg: MeasurementConfig, grid: Grid,
                             absolute: bool = False) -> Spectrum:
    """ Gives the output spectrum distorted by the circulator leakage

    A fraction ε e^{iφ} of the incoming field bypasses the resonator and
    interferes with the reflected field, so the reflection coefficient
    S11(ω) becomes S11(ω) + ε e^{iφ}:
    S̄_out(ω) = |S11(ω) + ε e^{iφ}|² (n̄_in + 1/2) + T(ω) (n̄_en + 1/2).
    The leaked field carries the occupancy of the input line. Without
    leakage this is exactly the undistorted output spectrum.

    Parameters
    ----------
    res : :class:`~pyradcool.physics.ResonatorParams`
        The resonator
    n_en : float
        The occupancy of the environment
    n_in : float
        The occupancy of the external bath
    cfg : :class:`~pyradcool.instrument.MeasurementConfig`
        The settings, giving ε and φ
    grid : numpy.ndarray or :class:`~pyradcool.physics.Spectrum`
        The grid, in Hz
    absolute : bool, optional
        Whether an array grid holds absolute frequencies

    Returns
    ----------
    s_out : :class:`~pyradcool.physics.Spectrum`
        The output spectrum, in quanta
    """
    if cfg.leakage_amplitude == 0:
        return output_noise_psd(res, n_en, n_in, grid, absolute)
    leakage = cfg.leakage_amplitude * np.exp(1j * cfg.leakage_phase)
    s11 = reflection_s11(res, grid, absolute).values
    transmission = transmission_spectrum(res, grid, absolute)
    values = np.abs(s11 + leakage) ** 2 * (n_in + 0.5) + \
        transmission.values * (n_en + 0.5)
    return transmission.with_values(values, quantity="quanta", label="s_out")


def ideal_off_resonance_spectrum(scenario: ThermalScenario,
                                 cfg: MeasurementConfig, grid: Grid,
                                 absolute: bool = False) -> Spectrum:
    """ Gives the output spectrum with the resonance tuned away

    The resonance is moved by the off detuning of the settings while the
    grid stays where it was, so only the far tail of the resonator remains
    in the window.

    Parameters
    ----------
    scenario : :class:`~pyradcool.instrument.ThermalScenario`
        The setup
    cfg : :class:`~pyradcool.instrument.MeasurementConfig`
        The settings
    grid : numpy.ndarray or :class:`~pyradcool.physics.Spectrum`
        The grid of the on-resonance measurement, in Hz
    absolute : bool, optional
        Whether an array grid holds absolute frequencies

    Returns
    ----------
    s_out_off : :class:`~pyradcool.physics.Spectrum`
        The off-resonance spectrum, in quanta, on the same grid

    Raises
    ----------
    PreconditionError
        If the off detuning is below 30 linewidths
    """
    res = scenario.res
    template = _template(grid, absolute)
    detuned = res.detuned(cfg.off_detuning(res))
    frequencies = template.detunings(res) + res.f0
    shifted = apply_circulator_leakage(detuned, scenario.n_en,
                                       scenario.n_in, cfg, frequencies,
                                       absolute=True)
    return template.with_values(shifted.values, quantity="quanta",
                                label="s_out_off")


def off_resonance_spectrum(scenario: ThermalScenario, cfg: MeasurementConfig,
                           grid: Grid, seed: int = 0,
                           absolute: bool = False) -> Spectrum:
    """ Detects the reference spectrum with the resonance tuned away

    The baseline is G (n̄_in + 1/2 + n_add), up to the leakage and to the
    far tail of the resonator, plus the averaging noise.

    Parameters
    ----------
    scenario : :class:`~pyradcool.instrument.ThermalScenario`
        The setup
    cfg : :class:`~pyradcool.instrument.MeasurementConfig`
        The settings
    grid : numpy.ndarray or :class:`~pyradcool.physics.Spectrum`
        The grid of the on-resonance measurement, in Hz
    seed : int, optional
        The seed of the fluctuations
    absolute : bool, optional
        Whether an array grid holds absolute frequencies

    Returns
    ----------
    raw : :class:`~pyradcool.physics.Spectrum`
        The detected reference spectrum
    """
    ideal = ideal_off_resonance_spectrum(scenario, cfg, grid, absolute)
    return measure_spectrum(ideal, scenario.amplifier, cfg, seed)


def on_resonance_spectrum(scenario: ThermalScenario, cfg: MeasurementConfig,
                          grid: Grid, seed: int = 0,
                          absolute: bool = False) -> Spectrum:
    """ Detects the output spectrum of the resonator

    Parameters
    ----------
    scenario : :class:`~pyradcool.instrument.ThermalScenario`
        The setup
    cfg : :class:`~pyradcool.instrument.MeasurementConfig`
        The settings
    grid : numpy.ndarray or :class:`~pyradcool.physics.Spectrum`
        The grid, in Hz
    seed : int, optional
        The seed of the fluctuations
    absolute : bool, optional
        Whether an array grid holds absolute frequencies

    Returns
    ----------
    raw : :class:`~pyradcool.physics.Spectrum`
        The detected output spectrum
    """
    ideal = apply_circulator_leakage(scenario.res, scenario.n_en,
                                     scenario.n_in, cfg, grid, absolute)
    return measure_spectrum(ideal, scenario.amplifier, cfg, seed)


def thermometry_sweep(scenario: ThermalScenario,
                      temperatures: Iterable[float],
                      reference_plane: str = RESONATOR_OUTPUT,
                      averages: float = 40000,
                      seed: int = 0) -> List[Tuple[float, float, float]]:
    """ Simulates the detected power of a bath swept in temperature

    At the resonator output, a bath of occupancy n̄(T) is detected as
    G (n̄ + 1/2 + n_add). At the source output, the bath first goes through
    the link, which mixes it with its own loss: the detected power is
    G (λ (n̄ + 1/2) + (1 - λ)(n̄_eff,link + 1/2) + n_add). Each reading is
    an average with a relative standard deviation 1/√N.

    Parameters
    ----------
    scenario : :class:`~pyradcool.instrument.ThermalScenario`
        The setup, giving the link and the chain
    temperatures : iterable of float
        The temperatures of the bath, in K
    reference_plane : str, optional
        "resonator-output" (by default) or "source-output"
    averages : float, optional
        The number of averages per reading, ``math.inf`` for exact readings
    seed : int, optional
        The seed of the fluctuations

    Returns
    ----------
    sweep : list of tuple
        The (temperature, power, sigma) readings

    Raises
    ----------
    PhysicalDomainError
        If the plane is unknown or a temperature is not positive
    """
    temperatures = np.asarray(list(temperatures), dtype=float)
    occupancies = bose_einstein_occupancy(scenario.frequency, temperatures)
    occupancies = np.atleast_1d(occupancies)
    if reference_plane == RESONATOR_OUTPUT:
        quanta = occupancies + 0.5
    elif reference_plane == SOURCE_OUTPUT:
        link = scenario.link
        quanta = link.transmission * (occupancies + 0.5) + \
            (1 - link.transmission) * (link.n_eff_link + 0.5)
    else:
        raise PhysicalDomainError(f"Unknown reference plane {reference_plane}")
    mean = scenario.amplifier.detect(quanta)
    if math.isinf(averages):
        sigma = np.zeros(mean.size)
        powers = mean
    else:
        sigma = mean / math.sqrt(averages)
        powers = mean + sigma * np.random.default_rng(seed).standard_normal(
            mean.size)
    logger.debug("Thermometry sweep at %s over %d temperatures",
                 reference_plane, temperatures.size)
    return [(float(temperature), float(power), float(error))
            for temperature, power, error in zip(temperatures, powers, sigma)]


def probe_reflection(res: ResonatorParams, grid: Grid, noise: float = 0.01,
                     seed: int = 0, absolute: bool = True) -> Spectrum:
    """ Simulates the reflection of a weak coherent tone

    Parameters
    ----------
    res : :class:`~pyradcool.physics.ResonatorParams`
        The resonator
    grid : numpy.ndarray or :class:`~pyradcool.physics.Spectrum`
        The probe frequencies, in Hz
    noise : float, optional
        The standard deviation of each quadrature
    seed : int, optional
        The seed of the noise
    absolute : bool, optional
        Whether an array grid holds absolute frequencies, True by default

    Returns
    ----------
    s11 : :class:`~pyradcool.physics.Spectrum`
        The complex response with its per-quadrature standard deviation
    """
    if noise < 0:
        raise PhysicalDomainError("The probe noise must be non-negative")
    ideal = reflection_s11(res, grid, absolute)
    values = ideal.values
    if noise > 0:
        rng = np.random.default_rng(seed)
        values = values + noise * (rng.standard_normal(len(ideal)) +
                                   1j * rng.standard_normal(len(ideal)))
    sigma = np.full(len(ideal), noise) if noise > 0 else None
    return ideal.with_values(values, sigma=sigma)
