"""
A value with a one-standard-deviation uncertainty
"""

import math
from typing import Any, Dict, Optional, Tuple

from ..physics.domain_error import PhysicalDomainError


class UncertainValue:
    """ A value with a (possibly asymmetric) standard deviation

    An asymmetric interval appears when a physical floor truncates the
    lower side, e.g. an added noise reported as 0.02 (+0.06/-0.02).

    Parameters
    ----------
    value : float
        The central value
    sigma : float, optional
        The standard deviation, used for the upper side when sigma_lower is
        given
    sigma_lower : float, optional
        The standard deviation on the lower side, sigma by default

    Examples
    --------
    >>> UncertainValue(1.0, 0.5, 0.25).interval()
    (0.75, 1.5)

    """

    def __init__(self, value: float, sigma: float = 0.0,
                 sigma_lower: Optional[float] = None):
        if sigma_lower is None:
            sigma_lower = sigma
        if not math.isfinite(value):
            raise PhysicalDomainError(f"The value must be finite, got {value}")
        if sigma < 0 or sigma_lower < 0 or not math.isfinite(sigma) or \
                not math.isfinite(sigma_lower):
            raise PhysicalDomainError(
                "Uncertainties must be finite and non-negative")
        self._value = float(value)
        self._sigma = float(sigma)
        self._sigma_lower = float(sigma_lower)

    @property
    def value(self) -> float:
        """ The central value """
        return self._value

    @property
    def sigma(self) -> float:
        """ The standard deviation (upper side when asymmetric) """
        return self._sigma

    @property
    def sigma_lower(self) -> float:
        """ The standard deviation on the lower side """
        return self._sigma_lower

    @property
    def is_asymmetric(self) -> bool:
        """ Whether both sides differ """
        return self._sigma != self._sigma_lower

    def interval(self, k: float = 1.0) -> Tuple[float, float]:
        """ Gives the interval of k standard deviations around the value """
        return (self._value - k * self._sigma_lower,
                self._value + k * self._sigma)

    def contains(self, other: float, k: float = 1.0) -> bool:
        """ Whether a value lies in the interval of k standard deviations """
        lower, upper = self.interval(k)
        return lower <= other <= upper

    def to_dict(self) -> Dict[str, float]:
        """ Gives the value as a dictionary """
        return {"value": self._value,
                "sigma": self._sigma,
                "sigma_lower": self._sigma_lower}

    def __float__(self) -> float:
        return self._value

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, UncertainValue):
            return False
        return (self._value, self._sigma, self._sigma_lower) == \
            (other.value, other.sigma, other.sigma_lower)

    def __hash__(self) -> int:
        return hash((self._value, self._sigma, self._sigma_lower))

    def __repr__(self) -> str:
        if self.is_asymmetric:
            return (f"{self._value!r} (+{self._sigma!r}/"
                    f"-{self._sigma_lower!r})")
        return f"{self._value!r} ± {self._sigma!r}"
