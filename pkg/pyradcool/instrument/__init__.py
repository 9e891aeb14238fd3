"""
:mod:`pyradcool.instrument`
===========================

This module turns ideal spectra into realistic measured data: the gain and
the added noise of the amplifier chain, the finite averaging, the leakage of
the circulator and the off-resonance reference measurement.

Available Classes
-----------------

:class:`~pyradcool.instrument.AmplifierChain`
    The gain and the added noise of the detection chain
:class:`~pyradcool.instrument.MeasurementConfig`
    The settings of a spectrum measurement
:class:`~pyradcool.instrument.ThermalScenario`
    The thermal network of an experiment

"""

from .amplifier_chain import AmplifierChain
from .measurement_config import MeasurementConfig, MIN_OFF_DETUNING
from .thermal_scenario import ThermalScenario
from .measurement import (measure_spectrum,
                          apply_circulator_leakage,
                          ideal_off_resonance_spectrum,
                          off_resonance_spectrum,
                          on_resonance_spectrum,
                          thermometry_sweep,
                          probe_reflection)

__all__ = ["AmplifierChain",
           "MeasurementConfig",
           "MIN_OFF_DETUNING",
           "ThermalScenario",
           "measure_spectrum",
           "apply_circulator_leakage",
           "ideal_off_resonance_spectrum",
           "off_resonance_spectrum",
           "on_resonance_spectrum",
           "thermometry_sweep",
           "probe_reflection"]
