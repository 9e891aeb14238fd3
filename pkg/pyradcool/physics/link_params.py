"""
Representation of the transmission link between the thermal source and the
resonator
"""

import math
from typing import Any, Dict, Optional

from .domain_error import PhysicalDomainError


class LinkParams:
    """ A lossy transmission link modeled as a beam splitter

    The source field is transmitted with power transmission λ and mixed with
    the field of the distributed loss, of effective occupancy n̄_eff,link.

    Parameters
    ----------
    transmission : float
        The power transmission λ, between 0 and 1
    n_eff_link : float
        The effective occupancy of the distributed link loss
    sigma_transmission : float, optional
        The standard deviation of λ when it comes from a calibration
    added_noise_sigma_upper : float, optional
        The upper standard deviation of the added noise (1 - λ) n̄_eff,link
    added_noise_sigma_lower : float, optional
        The lower standard deviation of the added noise, the upper one by
        default

    Raises
    ------
    PhysicalDomainError
        If λ is outside [0, 1] or an occupancy or uncertainty is negative

    """

    # pylint: disable=too-many-arguments
    def __init__(self, transmission: float, n_eff_link: float = 0.0,
                 sigma_transmission: float = 0.0,
                 added_noise_sigma_upper: float = 0.0,
                 added_noise_sigma_lower: Optional[float] = None):
        transmission = float(transmission)
        n_eff_link = float(n_eff_link)
        if not 0 <= transmission <= 1:
            raise PhysicalDomainError(
                f"The link transmission must be in [0, 1], got {transmission}")
        if not math.isfinite(n_eff_link) or n_eff_link < 0:
            raise PhysicalDomainError(
                f"The link occupancy must be non-negative, got {n_eff_link}")
        if added_noise_sigma_lower is None:
            added_noise_sigma_lower = added_noise_sigma_upper
        for sigma in (sigma_transmission, added_noise_sigma_upper,
                      added_noise_sigma_lower):
            if sigma < 0:
                raise PhysicalDomainError("Uncertainties must be non-negative")
        self._transmission = transmission
        self._n_eff_link = n_eff_link
        self._sigma_transmission = float(sigma_transmission)
        self._added_noise_sigma_upper = float(added_noise_sigma_upper)
        self._added_noise_sigma_lower = float(added_noise_sigma_lower)

    @classmethod
    def from_added_noise(cls, transmission: float, added_noise: float,
                         **uncertainties) -> "LinkParams":
        """ Builds a link from its added noise (1 - λ) n̄_eff,link

        Parameters
        ----------
        transmission : float
            The power transmission λ
        added_noise : float
            The occupancy added by the link
        **uncertainties
            Passed to the constructor

        Returns
        ----------
        link : :class:`~pyradcool.physics.LinkParams`
            The link

        Raises
        ----------
        PhysicalDomainError
            If a lossless link is given a non-zero added noise

        Examples
        --------
        >>> link = LinkParams.from_added_noise(0.91, 0.02)
        >>> round(link.added_noise, 12)
        0.02
        """
        if added_noise < 0:
            raise PhysicalDomainError("The added noise must be non-negative")
        if transmission >= 1:
            if added_noise > 0:
                raise PhysicalDomainError(
                    "A lossless link cannot add noise")
            return cls(transmission, 0.0, **uncertainties)
        return cls(transmission, added_noise / (1 - transmission),
                   **uncertainties)

    @property
    def transmission(self) -> float:
        """ The power transmission λ """
        return self._transmission

    @property
    def n_eff_link(self) -> float:
        """ The effective occupancy of the distributed loss """
        return self._n_eff_link

    @property
    def added_noise(self) -> float:
        """ The occupancy floor (1 - λ) n̄_eff,link added by the link """
        return (1 - self._transmission) * self._n_eff_link

    @property
    def sigma_transmission(self) -> float:
        """ The standard deviation of λ """
        return self._sigma_transmission

    @property
    def added_noise_sigma_upper(self) -> float:
        """ The upper standard deviation of the added noise """
        return self._added_noise_sigma_upper

    @property
    def added_noise_sigma_lower(self) -> float:
        """ The lower standard deviation of the added noise """
        return self._added_noise_sigma_lower

    def to_dict(self) -> Dict[str, float]:
        """ Gives the link as a dictionary """
        return {"transmission": self._transmission,
                "n_eff_link": self._n_eff_link,
                "added_noise": self.added_noise,
                "sigma_transmission": self._sigma_transmission,
                "added_noise_sigma_upper": self._added_noise_sigma_upper,
                "added_noise_sigma_lower": self._added_noise_sigma_lower}

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, LinkParams):
            return False
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash((self._transmission, self._n_eff_link))

    def __repr__(self) -> str:
        return (f"LinkParams(transmission={self._transmission!r}, "
                f"n_eff_link={self._n_eff_link!r})")
