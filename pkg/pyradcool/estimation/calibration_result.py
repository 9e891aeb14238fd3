"""
Representation of a noise thermometry calibration
"""

import math
from typing import Any, Dict, Optional

import numpy as np

from ..physics.domain_error import PhysicalDomainError

RESONATOR_OUTPUT = "resonator-output"
SOURCE_OUTPUT = "source-output"
REFERENCE_PLANES = (RESONATOR_OUTPUT, SOURCE_OUTPUT)


class CalibrationResult:
    """ The gain and the added noise of the detection chain

    Both are referred to a reference plane: the output of the resonator
    (G₀) or the output of the thermal source (G_s). A detected power is
    G (S̄ + n_add), with S̄ the symmetrized spectrum at the plane in quanta.

    Parameters
    ----------
    gain : float
        The power gain, positive
    n_add : float
        The added noise, in quanta, non-negative
    sigma_gain : float, optional
        The standard deviation of the gain
    sigma_n_add : float, optional
        The standard deviation of the added noise
    reference_plane : str, optional
        "resonator-output" (by default) or "source-output"
    covariance : numpy.ndarray, optional
        The 2x2 covariance of (gain, n_add), diagonal from the sigmas by
        default

    Raises
    ------
    PhysicalDomainError
        If the gain is not positive, the added noise or an uncertainty is
        negative, or the plane is unknown

    """

    # pylint: disable=too-many-arguments
    def __init__(self, gain: float, n_add: float, sigma_gain: float = 0.0,
                 sigma_n_add: float = 0.0,
                 reference_plane: str = RESONATOR_OUTPUT,
                 covariance: Optional[np.ndarray] = None):
        if not math.isfinite(gain) or gain <= 0:
            raise PhysicalDomainError(f"The gain must be positive, got {gain}")
        if not math.isfinite(n_add) or n_add < 0:
            raise PhysicalDomainError(
                f"The added noise must be non-negative, got {n_add}")
        if sigma_gain < 0 or sigma_n_add < 0:
            raise PhysicalDomainError("Uncertainties must be non-negative")
        if reference_plane not in REFERENCE_PLANES:
            raise PhysicalDomainError(
                f"Unknown reference plane {reference_plane}")
        self._gain = float(gain)
        self._n_add = float(n_add)
        self._sigma_gain = float(sigma_gain)
        self._sigma_n_add = float(sigma_n_add)
        self._reference_plane = reference_plane
        if covariance is None:
            covariance = np.diag([sigma_gain ** 2, sigma_n_add ** 2])
        self._covariance = np.array(covariance, dtype=float)
        self._covariance.flags.writeable = False

    @property
    def gain(self) -> float:
        """ The power gain """
        return self._gain

    @property
    def gain_db(self) -> float:
        """ The power gain, in dB """
        return 10 * math.log10(self._gain)

    @property
    def n_add(self) -> float:
        """ The added noise, in quanta """
        return self._n_add

    @property
    def sigma_gain(self) -> float:
        """ The standard deviation of the gain """
        return self._sigma_gain

    @property
    def sigma_n_add(self) -> float:
        """ The standard deviation of the added noise """
        return self._sigma_n_add

    @property
    def reference_plane(self) -> str:
        """ The plane the calibration is referred to """
        return self._reference_plane

    @property
    def covariance(self) -> np.ndarray:
        """ The covariance of (gain, n_add) """
        return self._covariance

    def to_dict(self) -> Dict[str, Any]:
        """ Gives the calibration as a dictionary """
        return {"gain": self._gain,
                "n_add": self._n_add,
                "sigma_gain": self._sigma_gain,
                "sigma_n_add": self._sigma_n_add,
                "reference_plane": self._reference_plane,
                "covariance": self._covariance.tolist()}

    @classmethod
    def from_dict(cls, values: Dict[str, Any]) -> "CalibrationResult":
        """ Reads a calibration written by to_dict """
        return cls(values["gain"], values["n_add"],
                   values.get("sigma_gain", 0.0),
                   values.get("sigma_n_add", 0.0),
                   values.get("reference_plane", RESONATOR_OUTPUT),
                   values.get("covariance"))

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, CalibrationResult):
            return False
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash((self._gain, self._n_add, self._reference_plane))

    def __repr__(self) -> str:
        return (f"CalibrationResult(gain={self._gain!r}, "
                f"n_add={self._n_add!r}, "
                f"reference_plane={self._reference_plane!r})")
