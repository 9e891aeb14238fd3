"""
:mod:`pyradcool.physics`
========================

This module deals with the closed-form physics of a resonator thermalized
both to a hot environment and to a cold radiative bath.

Available Classes
-----------------

:class:`~pyradcool.physics.ResonatorParams`
    The resonance frequency and the two coupling rates of a resonator
:class:`~pyradcool.physics.ThermalBath`
    A bath given by its temperature or its occupancy
:class:`~pyradcool.physics.LinkParams`
    A lossy transmission link, modeled as a beam splitter
:class:`~pyradcool.physics.Spectrum`
    Values on a frequency grid, with optional uncertainties
:class:`~pyradcool.physics.PhysicalDomainError`
    An error raised on non-physical inputs
:class:`~pyradcool.physics.PreconditionError`
    An error raised when the preconditions of an operation are not met
:class:`~pyradcool.physics.GridMismatchError`
    An error raised when spectra are not on the same grid

"""

from .domain_error import PhysicalDomainError, PreconditionError
from .resonator_params import ResonatorParams
from .link_params import LinkParams
from .occupancy import (bose_einstein_occupancy,
                        occupancy_to_temperature,
                        mode_occupancy,
                        external_bath_occupancy,
                        mode_temperature,
                        cooled_occupancy_approximation,
                        overcoupling_projection)
from .thermal_bath import ThermalBath
from .spectrum import Spectrum, GridMismatchError, frequency_grid
from .spectra import (transmission_spectrum,
                      reflection_spectrum,
                      output_noise_psd,
                      input_noise_psd,
                      intracavity_psd,
                      reflection_s11,
                      peak_transmission)

__all__ = ["PhysicalDomainError",
           "PreconditionError",
           "GridMismatchError",
           "ResonatorParams",
           "LinkParams",
           "ThermalBath",
           "Spectrum",
           "frequency_grid",
           "bose_einstein_occupancy",
           "occupancy_to_temperature",
           "mode_occupancy",
           "external_bath_occupancy",
           "mode_temperature",
           "cooled_occupancy_approximation",
           "overcoupling_projection",
           "transmission_spectrum",
           "reflection_spectrum",
           "output_noise_psd",
           "input_noise_psd",
           "intracavity_psd",
           "reflection_s11",
           "peak_transmission"]
