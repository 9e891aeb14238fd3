"""
:mod:`pyradcool.estimation`
===========================

This module deduces the thermal occupancy of the mode from measurements: the
resonator is fitted from a coherent probe, the detection chain is calibrated
by noise thermometry and the occupancy difference is extracted from the area
of the output spectrum.

Available Classes
-----------------

:class:`~pyradcool.estimation.UncertainValue`
    A value with a possibly asymmetric uncertainty
:class:`~pyradcool.estimation.CalibrationResult`
    The gain and added noise of the detection chain at a reference plane
:class:`~pyradcool.estimation.OccupancyEstimate`
    The occupancy difference and the deduced mode occupancy
:class:`~pyradcool.estimation.FitReport`
    The outcome of a fit
:class:`~pyradcool.estimation.InconsistentCalibrationError`
    An error raised when calibrations contradict each other

"""

from .uncertain_value import UncertainValue
from .calibration_result import CalibrationResult, REFERENCE_PLANES, \
    RESONATOR_OUTPUT, SOURCE_OUTPUT
from .occupancy_estimate import OccupancyEstimate
from .fit_report import FitReport
from .reflection_fit import fit_reflection, fit_fano_spectrum
from .noise_thermometry import (fit_noise_thermometry,
                                link_transmission,
                                to_quanta,
                                InconsistentCalibrationError)
from .occupancy_extraction import (extract_delta_n,
                                   deduce_mode_occupancy,
                                   transition_source_temperature,
                                   theory_curve,
                                   leakage_extraction_bias,
                                   captured_fraction)

__all__ = ["UncertainValue",
           "CalibrationResult",
           "REFERENCE_PLANES",
           "RESONATOR_OUTPUT",
           "SOURCE_OUTPUT",
           "OccupancyEstimate",
           "FitReport",
           "InconsistentCalibrationError",
           "fit_reflection",
           "fit_fano_spectrum",
           "fit_noise_thermometry",
           "link_transmission",
           "to_quanta",
           "extract_delta_n",
           "deduce_mode_occupancy",
           "transition_source_temperature",
           "theory_curve",
           "leakage_extraction_bias",
           "captured_fraction"]
