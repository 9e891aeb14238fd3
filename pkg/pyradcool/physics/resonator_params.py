"""
Representation of the Lorentzian parameters of a single-sided resonator
"""

import math
from typing import Any, Dict

from .domain_error import PhysicalDomainError


class ResonatorParams:
    """ The parameters of a single-sided resonator

    The rates are stored as ordinary frequencies, i.e. the angular rate
    divided by 2π, the way they are usually quoted: a rate of
    2π × 113 kHz is given as ``113e3``. The total rate is always derived
    from the two coupling rates.

    Parameters
    ----------
    f0 : float
        The resonance frequency, in Hz
    kappa_i : float
        The intrinsic coupling rate to the physical environment, in Hz
    kappa_e : float
        The external coupling rate to the bus circuit, in Hz

    Raises
    ------
    PhysicalDomainError
        If the frequency is not positive, a rate is negative or both rates
        vanish

    Examples
    --------
    >>> res = ResonatorParams(10.53e9, 113e3, 298e3)
    >>> res.kappa
    411000.0
    >>> res.is_overcoupled
    True

    """

    def __init__(self, f0: float, kappa_i: float, kappa_e: float):
        f0, kappa_i, kappa_e = float(f0), float(kappa_i), float(kappa_e)
        if not math.isfinite(f0) or f0 <= 0:
            raise PhysicalDomainError(
                f"The resonance frequency must be positive, got {f0}")
        if not math.isfinite(kappa_i) or kappa_i < 0:
            raise PhysicalDomainError(
                f"kappa_i must be non-negative, got {kappa_i}")
        if not math.isfinite(kappa_e) or kappa_e < 0:
            raise PhysicalDomainError(
                f"kappa_e must be non-negative, got {kappa_e}")
        if kappa_i + kappa_e <= 0:
            raise PhysicalDomainError("The total decay rate must be positive")
        self._f0 = f0
        self._kappa_i = kappa_i
        self._kappa_e = kappa_e

    @property
    def f0(self) -> float:
        """ The resonance frequency, in Hz """
        return self._f0

    @property
    def kappa_i(self) -> float:
        """ The intrinsic coupling rate, in Hz """
        return self._kappa_i

    @property
    def kappa_e(self) -> float:
        """ The external coupling rate, in Hz """
        return self._kappa_e

    @property
    def kappa(self) -> float:
        """ The total decay rate κ = κᵢ + κₑ, in Hz """
        return self._kappa_i + self._kappa_e

    @property
    def kappa_angular(self) -> float:
        """ The total decay rate in rad/s """
        return 2 * math.pi * self.kappa

    @property
    def q_internal(self) -> float:
        """ The internal quality factor f0/κᵢ (infinite when κᵢ = 0) """
        if self._kappa_i == 0:
            return math.inf
        return self._f0 / self._kappa_i

    @property
    def q_external(self) -> float:
        """ The external quality factor f0/κₑ (infinite when κₑ = 0) """
        if self._kappa_e == 0:
            return math.inf
        return self._f0 / self._kappa_e

    @property
    def q_loaded(self) -> float:
        """ The loaded quality factor f0/κ """
        return self._f0 / self.kappa

    @property
    def coupling_ratio(self) -> float:
        """ The ratio κₑ/κᵢ (infinite when κᵢ = 0) """
        if self._kappa_i == 0:
            return math.inf
        return self._kappa_e / self._kappa_i

    @property
    def is_overcoupled(self) -> bool:
        """ Whether the resonator decays faster into the bus than into its
        environment """
        return self._kappa_e > self._kappa_i

    def detuned(self, offset: float) -> "ResonatorParams":
        """ Gives the same resonator with its frequency shifted

        Parameters
        ----------
        offset : float
            The frequency shift, in Hz

        Returns
        ----------
        res : :class:`~pyradcool.physics.ResonatorParams`
            A resonator at f0 + offset
        """
        return ResonatorParams(self._f0 + offset, self._kappa_i,
                               self._kappa_e)

    def with_kappa_e(self, kappa_e: float) -> "ResonatorParams":
        """ Gives the same resonator with another external coupling rate """
        return ResonatorParams(self._f0, self._kappa_i, kappa_e)

    def to_dict(self) -> Dict[str, float]:
        """ Gives the parameters as a dictionary, in Hz """
        return {"f0": self._f0,
                "kappa_i": self._kappa_i,
                "kappa_e": self._kappa_e}

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, ResonatorParams):
            return False
        return (self._f0, self._kappa_i, self._kappa_e) == \
            (other.f0, other.kappa_i, other.kappa_e)

    def __hash__(self) -> int:
        return hash((self._f0, self._kappa_i, self._kappa_e))

    def __repr__(self) -> str:
        return (f"ResonatorParams(f0={self._f0!r}, kappa_i={self._kappa_i!r}, "
                f"kappa_e={self._kappa_e!r})")
