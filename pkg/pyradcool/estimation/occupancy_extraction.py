"""
Extraction of the occupancy difference and deduction of the mode occupancy
"""

import logging
import math
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from ..physics.domain_error import PhysicalDomainError, PreconditionError
from ..physics.link_params import LinkParams
from ..physics.occupancy import bose_einstein_occupancy, \
    external_bath_occupancy, mode_occupancy, occupancy_to_temperature
from ..physics.resonator_params import ResonatorParams
from ..physics.spectrum import Spectrum
from .occupancy_estimate import OccupancyEstimate
from .uncertain_value import UncertainValue

logger = logging.getLogger(__name__)

MIN_EXTRACTION_SPAN = 10.0
BASELINES = ("pointwise", "mean")

Number = Union[float, UncertainValue]


def captured_fraction(res: ResonatorParams, lower: float,
                      upper: float) -> float:
    """ Gives the fraction of a Lorentzian area inside a detuning window

    (1/π) [arctan(2b/κ) - arctan(2a/κ)] for the window [a, b], in Hz.
    """
    return (math.atan(2 * upper / res.kappa) -
            math.atan(2 * lower / res.kappa)) / math.pi


def _split(number: Number) -> Tuple[float, float]:
    if isinstance(number, UncertainValue):
        return number.value, number.sigma
    return float(number), 0.0


def _difference(s_out: Spectrum, s_out_off: Spectrum, baseline: str):
    """ Gives the difference spectrum and its variance

    The variance is returned as per-point variances plus the variance of a
    baseline shared by all points.
    """
    on_variance = np.zeros(len(s_out)) if s_out.sigma is None \
        else s_out.sigma ** 2
    off_variance = np.zeros(len(s_out_off)) if s_out_off.sigma is None \
        else s_out_off.sigma ** 2
    if baseline == "pointwise":
        return s_out.values - s_out_off.values, on_variance + off_variance, \
            0.0
    level = s_out_off.baseline()
    if np.all(off_variance > 0):
        level_variance = float(1.0 / np.sum(1.0 / off_variance))
    else:
        level_variance = float(np.sum(off_variance)) / len(s_out_off) ** 2
    return s_out.values - level, on_variance, level_variance


def extract_delta_n(s_out: Spectrum, s_out_off: Spectrum,
                    res: ResonatorParams, baseline: str = "pointwise",
                    gain_relative_sigma: float = 0.0) -> UncertainValue:
    """ Extracts the occupancy difference from the area of the spectrum

    Δn̄ = (κ / (2π κᵢκₑ)) ∫ (S̄_out - S̄_out,off) dω with ω in rad/s and the
    rates angular, that is κ/(2π κᵢκₑ) ∫ ΔS̄ df with the rates in Hz.
    The trapezoidal integral over the finite window is divided by the
    fraction of the Lorentzian area the window captures. The integral does
    not assume a lineshape, so a distorted spectrum is tolerated.

    Parameters
    ----------
    s_out : :class:`~pyradcool.physics.Spectrum`
        The on-resonance spectrum, in quanta
    s_out_off : :class:`~pyradcool.physics.Spectrum`
        The off-resonance spectrum, in quanta, on the same grid
    res : :class:`~pyradcool.physics.ResonatorParams`
        The resonator, from the reflection fit
    baseline : str, optional
        "pointwise" (by default) subtracts the off spectrum point by point,
        "mean" subtracts its weighted mean
    gain_relative_sigma : float, optional
        The relative uncertainty of the gain, common to all points

    Returns
    ----------
    delta_n : :class:`~pyradcool.estimation.UncertainValue`
        The occupancy difference, its uncertainty propagated through the
        quadrature weights

    Raises
    ----------
    GridMismatchError
        If the spectra are not on the same grid
    PreconditionError
        If the spectra are not in quanta or span fewer than 10 linewidths
    PhysicalDomainError
        If a coupling rate vanishes
    """
    s_out.check_same_grid(s_out_off)
    if baseline not in BASELINES:
        raise PreconditionError(f"Unknown baseline {baseline}")
    for spectrum in (s_out, s_out_off):
        if spectrum.quantity != "quanta":
            raise PreconditionError(
                f"The spectra must be in quanta, got {spectrum.quantity}")
    if res.kappa_i == 0 or res.kappa_e == 0:
        raise PhysicalDomainError(
            "The extraction needs both coupling rates to be positive")
    detunings = s_out.detunings(res)
    span = detunings[-1] - detunings[0]
    if span < MIN_EXTRACTION_SPAN * res.kappa:
        raise PreconditionError(
            f"The spectra span {span / res.kappa:.2f} linewidths, at least "
            f"{MIN_EXTRACTION_SPAN} are needed")
    difference, variance, level_variance = _difference(s_out, s_out_off,
                                                       baseline)
    weights = s_out.trapezoid_weights() / (2 * math.pi)
    fraction = captured_fraction(res, detunings[0], detunings[-1])
    prefactor = res.kappa / (2 * math.pi * res.kappa_i * res.kappa_e) / \
        fraction
    delta_n = prefactor * float(np.sum(weights * difference))
    sigma = prefactor * math.sqrt(float(np.sum(weights ** 2 * variance)) +
                                  float(np.sum(weights)) ** 2 *
                                  level_variance)
    sigma = math.hypot(sigma, gain_relative_sigma * delta_n)
    logger.debug("Extracted delta_n=%g ± %g (captured fraction %g)",
                 delta_n, sigma, fraction)
    return UncertainValue(delta_n, sigma)


# pylint: disable=too-many-arguments
def deduce_mode_occupancy(n_en: Number, delta_n: Number,
                          res: ResonatorParams,
                          sigma_kappa_i: float = 0.0,
                          sigma_kappa_e: float = 0.0) -> OccupancyEstimate:
    """ Deduces the mode occupancy from the occupancy difference

    n̄_mode = n̄_en - (κₑ/κ) Δn̄, with first-order propagation of the
    uncertainties of n̄_en, Δn̄ and the two rates.

    Parameters
    ----------
    n_en : float or :class:`~pyradcool.estimation.UncertainValue`
        The occupancy of the environment
    delta_n : float or :class:`~pyradcool.estimation.UncertainValue`
        The occupancy difference
    res : :class:`~pyradcool.physics.ResonatorParams`
        The resonator
    sigma_kappa_i : float, optional
        The standard deviation of κᵢ, in Hz
    sigma_kappa_e : float, optional
        The standard deviation of κₑ, in Hz

    Returns
    ----------
    estimate : :class:`~pyradcool.estimation.OccupancyEstimate`
        The mode occupancy, flagged when heating or negative

    Examples
    --------
    >>> res = ResonatorParams(10.53e9, 113e3, 298e3)
    >>> round(deduce_mode_occupancy(1.56, 1.54, res).n_mode, 2)
    0.44
    """
    n_en_value, n_en_sigma = _split(n_en)
    delta_value, delta_sigma = _split(delta_n)
    kappa = res.kappa
    weight = res.kappa_e / kappa
    n_mode = n_en_value - weight * delta_value
    derivative_i = delta_value * res.kappa_e / kappa ** 2
    derivative_e = -delta_value * res.kappa_i / kappa ** 2
    sigma = math.sqrt(n_en_sigma ** 2 + (weight * delta_sigma) ** 2 +
                      (derivative_i * sigma_kappa_i) ** 2 +
                      (derivative_e * sigma_kappa_e) ** 2)
    if n_mode < 0:
        logger.warning("Negative deduced mode occupancy %g ± %g", n_mode,
                       sigma)
    return OccupancyEstimate(delta_value, n_mode, delta_sigma, sigma,
                             {"kappa_i": res.kappa_i,
                              "kappa_e": res.kappa_e,
                              "n_en": n_en_value})


def transition_source_temperature(n_en: float, link: LinkParams,
                                  frequency: float) -> float:
    """ Gives the source temperature at which cooling turns into heating

    Solves λ n̄_s + (1 - λ) n̄_eff,link = n̄_en for the source temperature.

    Parameters
    ----------
    n_en : float
        The occupancy of the environment
    link : :class:`~pyradcool.physics.LinkParams`
        The link
    frequency : float
        The frequency, in Hz

    Returns
    ----------
    temperature : float
        The transition temperature, in K

    Raises
    ----------
    PhysicalDomainError
        If the link is opaque or its floor is above the environment
    """
    if link.transmission <= 0:
        raise PhysicalDomainError("An opaque link has no transition")
    target = (n_en - link.added_noise) / link.transmission
    if target <= 0:
        raise PhysicalDomainError(
            f"The link floor {link.added_noise} is above the environment "
            f"occupancy {n_en}, the equilibrium is unreachable")
    return occupancy_to_temperature(frequency, target)


def theory_curve(res: ResonatorParams, n_en: float, link: LinkParams,
                 frequency: float,
                 temperatures: Sequence[float]) -> np.ndarray:
    """ Predicts the mode occupancy for each source temperature """
    temperatures = np.asarray(temperatures, dtype=float)
    n_in = external_bath_occupancy(
        link, bose_einstein_occupancy(frequency, temperatures))
    return np.atleast_1d(mode_occupancy(res, n_en, n_in))


def leakage_extraction_bias(res: ResonatorParams, n_in: float,
                            epsilon: float, phase: float,
                            window: Optional[Tuple[float, float]] = None) \
        -> float:
    """ Gives the bias of the extracted Δn̄ caused by circulator leakage

    A leakage ε e^{iφ} interferes with the reflected field. Its in-phase
    part shifts the area of the difference spectrum, its quadrature part
    only makes it asymmetric and cancels over a symmetric window. The bias
    is -(κ/κᵢ)(n̄_in + 1/2) ε cos φ for any symmetric window.

    Parameters
    ----------
    res : :class:`~pyradcool.physics.ResonatorParams`
        The resonator
    n_in : float
        The occupancy of the external bath
    epsilon : float
        The leakage amplitude
    phase : float
        The leakage phase, in rad
    window : tuple of float, optional
        The detuning window (a, b) in Hz, infinite by default

    Returns
    ----------
    bias : float
        The difference between the extracted and the true Δn̄
    """
    level = (n_in + 0.5) * epsilon
    bias = -res.kappa / res.kappa_i * level * math.cos(phase)
    if window is None:
        return bias
    lower, upper = window
    half = res.kappa / 2
    odd = 0.5 * math.log((half ** 2 + upper ** 2) / (half ** 2 + lower ** 2))
    fraction = captured_fraction(res, lower, upper)
    return bias + res.kappa * level * math.sin(phase) * odd / \
        (math.pi * res.kappa_i * fraction)
