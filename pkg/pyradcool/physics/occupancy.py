"""
Thermal occupancies of the radiative cooling network
"""

from typing import Union

import numpy as np
from scipy import constants

from .domain_error import PhysicalDomainError
from .link_params import LinkParams
from .resonator_params import ResonatorParams

PLANCK = constants.h
BOLTZMANN = constants.k

# Occupancies below this value are reported as exactly 0
UNDERFLOW_OCCUPANCY = 1e-300

ArrayLike = Union[float, np.ndarray]


def _as_positive(name, value):
    array = np.asarray(value, dtype=float)
    if not np.all(np.isfinite(array)) or np.any(array <= 0):
        raise PhysicalDomainError(f"{name} must be positive and finite, "
                                  f"got {value}")
    return array


def _as_occupancy(name, value):
    array = np.asarray(value, dtype=float)
    if not np.all(np.isfinite(array)) or np.any(array < 0):
        raise PhysicalDomainError(f"{name} must be a non-negative "
                                  f"occupancy, got {value}")
    return array


def _to_output(array):
    if array.ndim == 0:
        return float(array)
    return array


def bose_einstein_occupancy(frequency: ArrayLike,
                            temperature: ArrayLike) -> ArrayLike:
    """ Gives the mean photon number of a bath

    n̄ = 1 / (exp(hf/k_B T) - 1). When hf/k_B T is so large that the
    occupancy underflows (below 1e-300), exactly 0 is returned.

    Parameters
    ----------
    frequency : float or numpy.ndarray
        The frequency, in Hz
    temperature : float or numpy.ndarray
        The physical temperature, in K

    Returns
    ----------
    occupancy : float or numpy.ndarray
        The mean thermal occupancy

    Raises
    ----------
    PhysicalDomainError
        If the frequency or the temperature is not positive

    Examples
    --------
    >>> round(bose_einstein_occupancy(10.53e9, 1.02), 2)
    1.56
    """
    frequency = _as_positive("The frequency", frequency)
    temperature = _as_positive("The temperature", temperature)
    ratio = PLANCK * frequency / (BOLTZMANN * temperature)
    with np.errstate(over="ignore"):
        occupancy = 1.0 / np.expm1(ratio)
    occupancy = np.where(occupancy < UNDERFLOW_OCCUPANCY, 0.0, occupancy)
    return _to_output(occupancy)


def occupancy_to_temperature(frequency: ArrayLike,
                             occupancy: ArrayLike) -> ArrayLike:
    """ Inverts the Bose-Einstein relation

    T = hf / (k_B ln(1 + 1/n̄))

    Parameters
    ----------
    frequency : float or numpy.ndarray
        The frequency, in Hz
    occupancy : float or numpy.ndarray
        The mean thermal occupancy, strictly positive

    Returns
    ----------
    temperature : float or numpy.ndarray
        The temperature, in K

    Raises
    ----------
    PhysicalDomainError
        If the frequency or the occupancy is not positive
    """
    frequency = _as_positive("The frequency", frequency)
    occupancy = _as_positive("The occupancy", occupancy)
    temperature = PLANCK * frequency / (BOLTZMANN *
                                        np.log1p(1.0 / occupancy))
    return _to_output(temperature)


def mode_occupancy(res: ResonatorParams, n_en: ArrayLike,
                   n_in: ArrayLike) -> ArrayLike:
    """ Gives the steady-state occupancy of the mode

    The mode thermalizes to its environment at rate κᵢ and to the external
    bath at rate κₑ, so its occupancy is the weighted mean
    (κᵢ n̄_en + κₑ n̄_in) / κ.

    Parameters
    ----------
    res : :class:`~pyradcool.physics.ResonatorParams`
        The resonator
    n_en : float or numpy.ndarray
        The occupancy of the physical environment
    n_in : float or numpy.ndarray
        The occupancy of the external bath

    Returns
    ----------
    n_mode : float or numpy.ndarray
        The mode occupancy, between n_en and n_in

    Examples
    --------
    >>> res = ResonatorParams(10.53e9, 113e3, 298e3)
    >>> round(mode_occupancy(res, 1.56, 0.02), 3)
    0.443
    """
    n_en = _as_occupancy("n_en", n_en)
    n_in = _as_occupancy("n_in", n_in)
    weight = res.kappa_e / res.kappa
    n_mode = n_en + weight * (n_in - n_en)
    n_mode = np.clip(n_mode, np.minimum(n_en, n_in), np.maximum(n_en, n_in))
    return _to_output(n_mode)


def external_bath_occupancy(link: LinkParams, n_s: ArrayLike) -> ArrayLike:
    """ Gives the occupancy of the external bath seen by the resonator

    The link between the thermal source and the resonator is a beam
    splitter: n̄_in = λ n̄_s + (1 - λ) n̄_eff,link.

    Parameters
    ----------
    link : :class:`~pyradcool.physics.LinkParams`
        The transmission link
    n_s : float or numpy.ndarray
        The occupancy of the thermal source output

    Returns
    ----------
    n_in : float or numpy.ndarray
        The external bath occupancy
    """
    n_s = _as_occupancy("n_s", n_s)
    return _to_output(link.transmission * n_s + link.added_noise)


def mode_temperature(res: ResonatorParams, n_en: float, n_in: float,
                     frequency: float) -> float:
    """ Gives the effective temperature of the mode

    Parameters
    ----------
    res : :class:`~pyradcool.physics.ResonatorParams`
        The resonator
    n_en : float
        The occupancy of the physical environment
    n_in : float
        The occupancy of the external bath
    frequency : float
        The frequency at which the occupancies are given, in Hz

    Returns
    ----------
    temperature : float
        The temperature of a bath with the same occupancy as the mode, in K
    """
    return occupancy_to_temperature(frequency,
                                    mode_occupancy(res, n_en, n_in))


def cooled_occupancy_approximation(res: ResonatorParams,
                                   n_en: ArrayLike) -> ArrayLike:
    """ Gives the mode occupancy for a vacuum external bath, (κᵢ/κ) n̄_en

    With an external bath close to the ground state the cooling is only
    limited by the coupling condition of the resonator.
    """
    n_en = _as_occupancy("n_en", n_en)
    return _to_output(res.kappa_i / res.kappa * n_en)


def overcoupling_projection(frequency: float, environment_temperature: float,
                            kappa_i: float, coupling_ratio: float,
                            n_in: float = 0.0) -> float:
    """ Projects the mode occupancy for a given overcoupling

    Parameters
    ----------
    frequency : float
        The resonance frequency, in Hz
    environment_temperature : float
        The physical temperature of the resonator, in K
    kappa_i : float
        The intrinsic coupling rate, in Hz
    coupling_ratio : float
        The targeted ratio κₑ/κᵢ
    n_in : float, optional
        The occupancy of the external bath, 0 by default

    Returns
    ----------
    n_mode : float
        The projected mode occupancy

    Examples
    --------
    A 10 GHz resonator in liquid helium, overcoupled 100 times to a cold
    bath:

    >>> round(overcoupling_projection(10e9, 4.2, 1e3, 100), 3)
    0.082
    """
    if coupling_ratio < 0:
        raise PhysicalDomainError("The coupling ratio must be non-negative")
    res = ResonatorParams(frequency, kappa_i, coupling_ratio * kappa_i)
    n_en = bose_einstein_occupancy(frequency, environment_temperature)
    return mode_occupancy(res, n_en, n_in)
