"""
Noise thermometry calibration of the detection chain and of the link
"""

import logging
import math
from typing import Iterable, List, Optional, Tuple, Union

import numpy as np

from ..physics.domain_error import PreconditionError
from ..physics.link_params import LinkParams
from ..physics.occupancy import bose_einstein_occupancy
from ..physics.spectrum import Spectrum
from .calibration_result import CalibrationResult, RESONATOR_OUTPUT, \
    SOURCE_OUTPUT

logger = logging.getLogger(__name__)

MIN_TEMPERATURES = 3
MIN_OCCUPANCY_SPAN = 2.0

SweepPoint = Union[Tuple[float, Union[float, Spectrum]],
                   Tuple[float, float, float]]


class InconsistentCalibrationError(Exception):
    """Exception raised when two calibrations cannot describe the same
    setup"""


def _detected_power(point) -> Tuple[float, float, Optional[float]]:
    """ Reads a sweep point as (temperature, power, sigma) """
    if len(point) == 3:
        temperature, power, sigma = point
        return float(temperature), float(power), float(sigma)
    temperature, power = point
    if isinstance(power, Spectrum):
        values = power.values
        sigma = None
        if power.sigma is not None:
            sigma = float(np.sqrt(np.sum(power.sigma ** 2))) / len(power)
        return float(temperature), float(np.mean(values)), sigma
    return float(temperature), float(power), None


def fit_noise_thermometry(sweep: Iterable[SweepPoint], frequency: float,
                          reference_plane: str = RESONATOR_OUTPUT) \
        -> CalibrationResult:
    """ Calibrates a gain and an added noise from a temperature sweep

    A bath of known temperature is seen at the reference plane, and the
    detected power is G (n̄(f, T) + 1/2 + n_add). A weighted straight line
    of the power against n̄ gives G as its slope and n_add from its
    intercept. With per-point sigmas the covariance is absolute, otherwise
    it is scaled by the residuals.

    Parameters
    ----------
    sweep : iterable
        The points, as (temperature, power), (temperature, power, sigma) or
        (temperature, raw spectrum), temperatures in K
    frequency : float
        The frequency of the measurement, in Hz
    reference_plane : str, optional
        The plane of the bath, "resonator-output" by default

    Returns
    ----------
    calibration : :class:`~pyradcool.estimation.CalibrationResult`
        The gain and the added noise, with uncertainties

    Raises
    ----------
    PreconditionError
        If there are fewer than 3 distinct temperatures, if the occupancies
        span less than a factor 2, or if the regression is degenerate

    Examples
    --------
    >>> sweep = [(t, 1e6 * (bose_einstein_occupancy(10.53e9, t) + 20.5))
    ...          for t in (0.2, 0.7, 1.4)]
    >>> round(fit_noise_thermometry(sweep, 10.53e9).n_add, 6)
    20.0
    """
    points: List[Tuple[float, float, Optional[float]]] = \
        [_detected_power(point) for point in sweep]
    temperatures = np.array([point[0] for point in points])
    if np.unique(temperatures).size < MIN_TEMPERATURES:
        raise PreconditionError(
            f"Noise thermometry needs at least {MIN_TEMPERATURES} distinct "
            f"temperatures, got {np.unique(temperatures).size}")
    occupancies = bose_einstein_occupancy(frequency, temperatures)
    lowest = np.min(occupancies)
    if lowest > 0 and np.max(occupancies) / lowest < MIN_OCCUPANCY_SPAN:
        raise PreconditionError(
            "The temperatures must span a factor of at least "
            f"{MIN_OCCUPANCY_SPAN} in occupancy")
    powers = np.array([point[1] for point in points])
    sigmas = [point[2] for point in points]
    if all(sigma is not None and sigma > 0 for sigma in sigmas):
        coefficients, covariance = np.polyfit(
            occupancies, powers, 1, w=1.0 / np.array(sigmas),
            cov="unscaled")
    else:
        coefficients, covariance = np.polyfit(occupancies, powers, 1,
                                              cov=True)
    slope, intercept = coefficients
    if not slope > 0:
        raise PreconditionError(
            f"Degenerate noise thermometry, the fitted gain is {slope}")
    n_add = intercept / slope - 0.5
    # Delta method for n_add = b/a - 1/2
    gradient = np.array([-intercept / slope ** 2, 1.0 / slope])
    covariance_gn = np.empty((2, 2))
    covariance_gn[0, 0] = covariance[0, 0]
    covariance_gn[0, 1] = covariance_gn[1, 0] = gradient @ covariance[:, 0]
    covariance_gn[1, 1] = gradient @ covariance @ gradient
    sigma_n_add = math.sqrt(max(covariance_gn[1, 1], 0.0))
    if n_add < 0:
        logger.warning("Negative fitted added noise %g (sigma %g) floored "
                       "at 0", n_add, sigma_n_add)
        n_add = 0.0
    logger.info("Calibration at %s: G=%g, n_add=%g", reference_plane, slope,
                n_add)
    return CalibrationResult(float(slope), float(n_add),
                             math.sqrt(max(covariance_gn[0, 0], 0.0)),
                             sigma_n_add, reference_plane, covariance_gn)


def _floored_interval(value: float,
                      sigma: float) -> Tuple[float, float, float]:
    """ Gives (value, upper sigma, lower sigma) with the value floored at 0
    """
    if value >= 0:
        return value, sigma, min(sigma, value)
    return 0.0, max(value + sigma, 0.0), 0.0


def link_transmission(g_source: CalibrationResult,
                      g_resonator: CalibrationResult,
                      tolerance: float = 3.0) -> LinkParams:
    """ Deduces the link from calibrations at both ends

    The transmission is λ = G_s/G₀. Referring the source-plane calibration
    through the link, λ (n_add,s + 1/2) = (1 - λ) n̄_eff,link + 1/2 + n_add,0,
    so the link adds λ n_add,s - n_add,0 - (1 - λ)/2, floored at 0 with an
    asymmetric interval. Uncertainties are propagated to first order with
    the covariance of each calibration.

    Parameters
    ----------
    g_source : :class:`~pyradcool.estimation.CalibrationResult`
        The calibration at the source output
    g_resonator : :class:`~pyradcool.estimation.CalibrationResult`
        The calibration at the resonator output
    tolerance : float, optional
        How many standard deviations λ may exceed 1 before the calibrations
        are declared inconsistent, 3 by default

    Returns
    ----------
    link : :class:`~pyradcool.physics.LinkParams`
        The link, with the uncertainties of λ and of its added noise

    Raises
    ----------
    InconsistentCalibrationError
        If the reference planes are wrong or λ exceeds 1 beyond its
        uncertainty
    """
    if g_source.reference_plane != SOURCE_OUTPUT or \
            g_resonator.reference_plane != RESONATOR_OUTPUT:
        raise InconsistentCalibrationError(
            "The link needs a source-output and a resonator-output "
            f"calibration, got {g_source.reference_plane} and "
            f"{g_resonator.reference_plane}")
    gain_s, gain_0 = g_source.gain, g_resonator.gain
    n_add_s, n_add_0 = g_source.n_add, g_resonator.n_add
    transmission = gain_s / gain_0
    covariance = np.zeros((4, 4))
    covariance[:2, :2] = g_source.covariance
    covariance[2:, 2:] = g_resonator.covariance
    # Variables (G_s, n_add_s, G_0, n_add_0)
    gradient_t = np.array([1 / gain_0, 0.0, -gain_s / gain_0 ** 2, 0.0])
    gradient_a = np.array([(n_add_s + 0.5) / gain_0, transmission,
                           -transmission * (n_add_s + 0.5) / gain_0, -1.0])
    sigma_t = math.sqrt(max(gradient_t @ covariance @ gradient_t, 0.0))
    sigma_a = math.sqrt(max(gradient_a @ covariance @ gradient_a, 0.0))
    added = transmission * n_add_s - n_add_0 - (1 - transmission) / 2
    if transmission > 1:
        if transmission - 1 > tolerance * sigma_t:
            raise InconsistentCalibrationError(
                f"The link transmission {transmission:.4f} exceeds 1 by more "
                f"than {tolerance} standard deviations ({sigma_t:.4f})")
        logger.warning("Link transmission %g above 1 within its uncertainty,"
                       " clipped to 1", transmission)
        transmission = 1.0
    if transmission >= 1:
        _, upper, _ = _floored_interval(min(added, 0.0), sigma_a)
        return LinkParams(1.0, 0.0, sigma_t, upper, 0.0)
    added, upper, lower = _floored_interval(added, sigma_a)
    if added == 0.0:
        logger.warning("Negative link added noise floored at 0")
    return LinkParams.from_added_noise(transmission, added,
                                       sigma_transmission=sigma_t,
                                       added_noise_sigma_upper=upper,
                                       added_noise_sigma_lower=lower)


def to_quanta(raw: Spectrum, calibration: CalibrationResult) -> Spectrum:
    """ Converts a detected spectrum to quanta at the reference plane

    S̄ = P/G - n_add; the per-point sigmas are divided by G. The
    uncertainty of the calibration itself is common to all points and is
    not included.

    Parameters
    ----------
    raw : :class:`~pyradcool.physics.Spectrum`
        The detected spectrum
    calibration : :class:`~pyradcool.estimation.CalibrationResult`
        The calibration of the chain

    Returns
    ----------
    spectrum : :class:`~pyradcool.physics.Spectrum`
        The spectrum in quanta
    """
    if raw.quantity != "raw":
        raise PreconditionError(
            f"Only raw spectra can be converted, got {raw.quantity}")
    sigma = None if raw.sigma is None else raw.sigma / calibration.gain
    return raw.with_values(raw.values / calibration.gain - calibration.n_add,
                           sigma=sigma, quantity="quanta")
