"""
Representation of the settings of a spectrum measurement
"""

import math
from typing import Any, Dict, Optional

from ..physics.domain_error import PhysicalDomainError, PreconditionError
from ..physics.resonator_params import ResonatorParams

# Smallest detuning of the off-resonance reference, in linewidths
MIN_OFF_DETUNING = 30.0


class MeasurementConfig:
    """ The settings of a spectrum measurement

    Each point of a spectrum is an average whose relative standard deviation
    follows the radiometer equation 1/√(B τ N), with B the resolution
    bandwidth, τ the dwell time per point and N the number of averages.
    The dwell time defaults to 1/B, so the fluctuation is 1/√N.

    Parameters
    ----------
    resolution_bandwidth : float, optional
        The resolution bandwidth B, in Hz, 1 kHz by default
    averages : float, optional
        The number of averages N, at least 1; ``math.inf`` gives noiseless
        spectra
    leakage_amplitude : float, optional
        The amplitude ε of the circulator leakage, in [0, 1)
    leakage_phase : float, optional
        The phase φ of the leakage, in rad
    detune_off : float, optional
        The detuning of the resonance for the off-resonance reference, in
        Hz, 30 linewidths by default
    dwell_time : float, optional
        The dwell time τ per point, in s, 1/B by default

    Raises
    ------
    PhysicalDomainError
        If a setting is outside its domain

    """

    # pylint: disable=too-many-arguments
    def __init__(self, resolution_bandwidth: float = 1e3,
                 averages: float = 30000,
                 leakage_amplitude: float = 0.0,
                 leakage_phase: float = 0.0,
                 detune_off: Optional[float] = None,
                 dwell_time: Optional[float] = None):
        if not resolution_bandwidth > 0:
            raise PhysicalDomainError(
                "The resolution bandwidth must be positive")
        if not averages >= 1:
            raise PhysicalDomainError(
                f"At least one average is needed, got {averages}")
        if not 0 <= leakage_amplitude < 1:
            raise PhysicalDomainError(
                f"The leakage amplitude must be in [0, 1), got "
                f"{leakage_amplitude}")
        if dwell_time is None:
            dwell_time = 1.0 / resolution_bandwidth
        if not dwell_time > 0:
            raise PhysicalDomainError("The dwell time must be positive")
        self._resolution_bandwidth = float(resolution_bandwidth)
        self._averages = float(averages)
        self._leakage_amplitude = float(leakage_amplitude)
        self._leakage_phase = float(leakage_phase)
        self._detune_off = None if detune_off is None else float(detune_off)
        self._dwell_time = float(dwell_time)

    @property
    def resolution_bandwidth(self) -> float:
        """ The resolution bandwidth, in Hz """
        return self._resolution_bandwidth

    @property
    def averages(self) -> float:
        """ The number of averages """
        return self._averages

    @property
    def leakage_amplitude(self) -> float:
        """ The leakage amplitude ε """
        return self._leakage_amplitude

    @property
    def leakage_phase(self) -> float:
        """ The leakage phase φ, in rad """
        return self._leakage_phase

    @property
    def detune_off(self) -> Optional[float]:
        """ The detuning of the off-resonance reference, if set """
        return self._detune_off

    @property
    def dwell_time(self) -> float:
        """ The dwell time per point, in s """
        return self._dwell_time

    @property
    def relative_sigma(self) -> float:
        """ The relative fluctuation 1/√(B τ N), 0 without noise """
        if math.isinf(self._averages):
            return 0.0
        return 1.0 / math.sqrt(self._resolution_bandwidth *
                               self._dwell_time * self._averages)

    def off_detuning(self, res: ResonatorParams) -> float:
        """ Gives the detuning of the off-resonance reference

        Parameters
        ----------
        res : :class:`~pyradcool.physics.ResonatorParams`
            The resonator

        Returns
        ----------
        detuning : float
            The detuning, in Hz

        Raises
        ----------
        PreconditionError
            If the detuning is below 30 linewidths
        """
        if self._detune_off is None:
            return MIN_OFF_DETUNING * res.kappa
        if abs(self._detune_off) < MIN_OFF_DETUNING * res.kappa:
            raise PreconditionError(
                f"The off-resonance reference must be detuned by at least "
                f"{MIN_OFF_DETUNING} linewidths, got "
                f"{abs(self._detune_off) / res.kappa:.2f}")
        return self._detune_off

    def with_changes(self, **changes) -> "MeasurementConfig":
        """ Gives a copy with some settings changed """
        settings = self.to_dict()
        settings.update(changes)
        return MeasurementConfig(**settings)

    def to_dict(self) -> Dict[str, Any]:
        """ Gives the settings as a dictionary """
        return {"resolution_bandwidth": self._resolution_bandwidth,
                "averages": self._averages,
                "leakage_amplitude": self._leakage_amplitude,
                "leakage_phase": self._leakage_phase,
                "detune_off": self._detune_off,
                "dwell_time": self._dwell_time}

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, MeasurementConfig):
            return False
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash(tuple(self.to_dict().items()))

    def __repr__(self) -> str:
        return (f"MeasurementConfig(averages={self._averages!r}, "
                f"leakage_amplitude={self._leakage_amplitude!r}, "
                f"leakage_phase={self._leakage_phase!r})")
