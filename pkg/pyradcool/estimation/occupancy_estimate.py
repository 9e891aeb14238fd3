"""
Representation of a deduced mode occupancy
"""

from typing import Any, Dict, Optional

from ..physics.domain_error import PhysicalDomainError


class OccupancyEstimate:
    """ The occupancy difference and the mode occupancy deduced from it

    A negative central mode occupancy is allowed and flagged: it can happen
    when the uncertainties permit it.

    Parameters
    ----------
    delta_n : float
        The occupancy difference Δn̄ = n̄_en - n̄_in
    n_mode : float
        The deduced mode occupancy
    sigma_delta_n : float
        The standard deviation of Δn̄
    sigma_n_mode : float
        The standard deviation of the mode occupancy
    inputs_digest : dict, optional
        The inputs used for the deduction (κᵢ, κₑ, n̄_en)

    """

    # pylint: disable=too-many-arguments
    def __init__(self, delta_n: float, n_mode: float, sigma_delta_n: float,
                 sigma_n_mode: float,
                 inputs_digest: Optional[Dict[str, float]] = None):
        if sigma_delta_n < 0 or sigma_n_mode < 0:
            raise PhysicalDomainError("Uncertainties must be non-negative")
        self._delta_n = float(delta_n)
        self._n_mode = float(n_mode)
        self._sigma_delta_n = float(sigma_delta_n)
        self._sigma_n_mode = float(sigma_n_mode)
        self._inputs_digest = dict(inputs_digest or {})

    @property
    def delta_n(self) -> float:
        """ The occupancy difference """
        return self._delta_n

    @property
    def n_mode(self) -> float:
        """ The mode occupancy """
        return self._n_mode

    @property
    def sigma_delta_n(self) -> float:
        """ The standard deviation of the occupancy difference """
        return self._sigma_delta_n

    @property
    def sigma_n_mode(self) -> float:
        """ The standard deviation of the mode occupancy """
        return self._sigma_n_mode

    @property
    def inputs_digest(self) -> Dict[str, float]:
        """ The inputs of the deduction """
        return dict(self._inputs_digest)

    @property
    def is_heating(self) -> bool:
        """ Whether the external bath is hotter than the environment """
        return self._delta_n < 0

    @property
    def is_negative(self) -> bool:
        """ Whether the central mode occupancy is negative """
        return self._n_mode < 0

    @property
    def is_physical(self) -> bool:
        """ Whether the mode occupancy is non-negative within one standard
        deviation """
        return self._n_mode + self._sigma_n_mode >= 0

    def to_dict(self) -> Dict[str, Any]:
        """ Gives the estimate as a dictionary """
        return {"delta_n": self._delta_n,
                "sigma_delta_n": self._sigma_delta_n,
                "n_mode": self._n_mode,
                "sigma_n_mode": self._sigma_n_mode,
                "heating": self.is_heating,
                "negative": self.is_negative,
                "inputs": self.inputs_digest}

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, OccupancyEstimate):
            return False
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash((self._delta_n, self._n_mode))

    def __repr__(self) -> str:
        return (f"OccupancyEstimate(delta_n={self._delta_n!r}, "
                f"n_mode={self._n_mode!r} ± {self._sigma_n_mode!r})")
