"""
Closed-form spectra of a single-sided resonator coupled to two baths
"""

import math
from typing import Tuple, Union

import numpy as np

from .resonator_params import ResonatorParams
from .spectrum import Spectrum

Grid = Union[np.ndarray, Spectrum]


def _grid_and_detunings(res: ResonatorParams, grid: Grid,
                        absolute: bool) -> Tuple[Spectrum, np.ndarray]:
    # The returned spectrum only carries the grid and its metadata
    if isinstance(grid, Spectrum):
        template = grid.with_values(np.zeros(len(grid)))
    else:
        frequencies = np.asarray(grid, dtype=float)
        template = Spectrum(frequencies, np.zeros(frequencies.size),
                            absolute=absolute)
    return template, template.detunings(res)


def _lorentzian_denominator(res, detunings):
    return (res.kappa / 2) ** 2 + detunings ** 2


def peak_transmission(res: ResonatorParams) -> float:
    """ Gives the maximum of the transmission spectrum, 4κᵢκₑ/κ²

    It measures how much of the environment's radiation reaches the bus
    circuit, hence the sensitivity of a calibration against the
    environment temperature. It vanishes for a strongly overcoupled
    resonator.
    """
    return 4 * res.kappa_i * res.kappa_e / res.kappa ** 2


def transmission_spectrum(res: ResonatorParams, grid: Grid,
                          absolute: bool = False) -> Spectrum:
    """ Gives the power transmission from the environment to the bus

    T(ω) = κᵢκₑ / ((κ/2)² + (ω - ω₀)²)

    Parameters
    ----------
    res : :class:`~pyradcool.physics.ResonatorParams`
        The resonator
    grid : numpy.ndarray or :class:`~pyradcool.physics.Spectrum`
        The grid, in Hz, or a spectrum whose grid is reused
    absolute : bool, optional
        Whether an array grid holds absolute frequencies, detunings by
        default

    Returns
    ----------
    transmission : :class:`~pyradcool.physics.Spectrum`
        The dimensionless transmission, between 0 and 4κᵢκₑ/κ²
    """
    template, detunings = _grid_and_detunings(res, grid, absolute)
    values = res.kappa_i * res.kappa_e / _lorentzian_denominator(res,
                                                                 detunings)
    return template.with_values(values, quantity="dimensionless",
                                label="transmission")


def reflection_spectrum(res: ResonatorParams, grid: Grid,
                        absolute: bool = False) -> Spectrum:
    """ Gives the power reflection R(ω) = 1 - T(ω) of the resonator

    Parameters
    ----------
    res : :class:`~pyradcool.physics.ResonatorParams`
        The resonator
    grid : numpy.ndarray or :class:`~pyradcool.physics.Spectrum`
        The grid, in Hz
    absolute : bool, optional
        Whether an array grid holds absolute frequencies

    Returns
    ----------
    reflection : :class:`~pyradcool.physics.Spectrum`
        The dimensionless reflection
    """
    transmission = transmission_spectrum(res, grid, absolute)
    return transmission.with_values(1.0 - transmission.values,
                                    label="reflection")


# pylint: disable=too-many-arguments
def output_noise_psd(res: ResonatorParams, n_en: float, n_in: float,
                     grid: Grid, absolute: bool = False,
                     simplified: bool = False) -> Spectrum:
    """ Gives the symmetrized noise spectrum leaving the resonator

    The output is the reflected input plus the emission of the
    environment through the resonator:
    S̄_out(ω) = R(ω) n̄_in + T(ω) n̄_en + 1/2, or equivalently
    S̄_out(ω) = S̄_in + T(ω) Δn̄ with S̄_in = n̄_in + 1/2 and
    Δn̄ = n̄_en - n̄_in.

    A peak on the flat background signals radiative cooling (n̄_in < n̄_en),
    a dip radiative heating.

    Parameters
    ----------
    res : :class:`~pyradcool.physics.ResonatorParams`
        The resonator
    n_en : float
        The occupancy of the environment
    n_in : float
        The occupancy of the external bath
    grid : numpy.ndarray or :class:`~pyradcool.physics.Spectrum`
        The grid, in Hz
    absolute : bool, optional
        Whether an array grid holds absolute frequencies
    simplified : bool, optional
        Whether to evaluate the S̄_in + T Δn̄ form instead of the
        reflection/transmission form

    Returns
    ----------
    s_out : :class:`~pyradcool.physics.Spectrum`
        The output spectrum, in quanta
    """
    transmission = transmission_spectrum(res, grid, absolute)
    t_values = transmission.values
    if simplified:
        values = (n_in + 0.5) + t_values * (n_en - n_in)
    else:
        values = (1.0 - t_values) * n_in + t_values * n_en + 0.5
    return transmission.with_values(values, quantity="quanta",
                                    label="s_out")


def input_noise_psd(n: float, grid: Grid, absolute: bool = False,
                    label: str = "s_in") -> Spectrum:
    """ Gives the flat symmetrized spectrum n̄ + 1/2 of a bath """
    if isinstance(grid, Spectrum):
        template = grid
    else:
        template = Spectrum(np.asarray(grid, dtype=float),
                            np.zeros(len(grid)), absolute=absolute)
    return template.with_values(np.full(len(template), n + 0.5),
                                quantity="quanta", label=label)


def intracavity_psd(res: ResonatorParams, n_en: float, n_in: float,
                    grid: Grid, absolute: bool = False,
                    symmetrized: bool = False) -> Spectrum:
    """ Gives the power spectral density of the mode amplitude

    S_aa(ω) = (κᵢ n̄_en + κₑ n̄_in) / ((κ/2)² + (ω - ω₀)²), with angular
    rates, so that (1/2π) ∫ S_aa dω is the mode occupancy. The values are
    per unit angular frequency.

    Parameters
    ----------
    res : :class:`~pyradcool.physics.ResonatorParams`
        The resonator
    n_en : float
        The occupancy of the environment
    n_in : float
        The occupancy of the external bath
    grid : numpy.ndarray or :class:`~pyradcool.physics.Spectrum`
        The grid, in Hz
    absolute : bool, optional
        Whether an array grid holds absolute frequencies
    symmetrized : bool, optional
        Whether to add the vacuum half-quantum to both baths, in which case
        the integral is n̄_mode + 1/2

    Returns
    ----------
    s_aa : :class:`~pyradcool.physics.Spectrum`
        The intracavity density, in s/rad
    """
    template, detunings = _grid_and_detunings(res, grid, absolute)
    if symmetrized:
        n_en, n_in = n_en + 0.5, n_in + 0.5
    kappa_i = 2 * math.pi * res.kappa_i
    kappa_e = 2 * math.pi * res.kappa_e
    kappa = 2 * math.pi * res.kappa
    omega = 2 * math.pi * detunings
    values = (kappa_i * n_en + kappa_e * n_in) / ((kappa / 2) ** 2 +
                                                  omega ** 2)
    return template.with_values(values, quantity="quanta*s", label="s_aa")


def reflection_s11(res: ResonatorParams, grid: Grid,
                   absolute: bool = False) -> Spectrum:
    """ Gives the complex reflection coefficient seen by a weak tone

    S11(ω) = 1 - κₑ / (κ/2 + i(ω - ω₀)), so that |S11|² = R(ω).

    Parameters
    ----------
    res : :class:`~pyradcool.physics.ResonatorParams`
        The resonator
    grid : numpy.ndarray or :class:`~pyradcool.physics.Spectrum`
        The grid, in Hz
    absolute : bool, optional
        Whether an array grid holds absolute frequencies

    Returns
    ----------
    s11 : :class:`~pyradcool.physics.Spectrum`
        The complex response
    """
    template, detunings = _grid_and_detunings(res, grid, absolute)
    values = 1.0 - res.kappa_e / (res.kappa / 2 + 1j * detunings)
    return template.with_values(values, quantity="complex", label="s11")
