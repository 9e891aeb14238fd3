"""
Representation of a thermal bath
"""

from typing import Any, Optional

from .domain_error import PhysicalDomainError
from .occupancy import bose_einstein_occupancy, occupancy_to_temperature


class ThermalBath:
    """ A thermal bath seen at a given frequency

    A bath is given either by its temperature or by its occupancy. The other
    one is derived through the Bose-Einstein relation at the given
    frequency.

    Parameters
    ----------
    frequency : float
        The frequency at which the bath is seen, in Hz
    temperature : float, optional
        The physical temperature, in K
    occupancy : float, optional
        The mean photon number

    Raises
    ------
    PhysicalDomainError
        If neither or both of temperature and occupancy are given, or if
        they are out of their domain

    Examples
    --------
    >>> bath = ThermalBath.from_temperature(10.53e9, 1.02)
    >>> round(bath.occupancy, 2)
    1.56

    """

    def __init__(self, frequency: float, temperature: Optional[float] = None,
                 occupancy: Optional[float] = None):
        if (temperature is None) == (occupancy is None):
            raise PhysicalDomainError(
                "A bath needs exactly one of temperature and occupancy")
        if frequency <= 0:
            raise PhysicalDomainError("The frequency must be positive")
        self._frequency = float(frequency)
        if temperature is not None:
            self._occupancy = float(
                bose_einstein_occupancy(frequency, temperature))
            self._temperature = float(temperature)
        else:
            if occupancy < 0:
                raise PhysicalDomainError(
                    f"The occupancy must be non-negative, got {occupancy}")
            self._occupancy = float(occupancy)
            self._temperature = None if occupancy == 0 else \
                occupancy_to_temperature(frequency, occupancy)

    @classmethod
    def from_temperature(cls, frequency: float,
                         temperature: float) -> "ThermalBath":
        """ Builds a bath from its temperature """
        return cls(frequency, temperature=temperature)

    @classmethod
    def from_occupancy(cls, frequency: float,
                       occupancy: float) -> "ThermalBath":
        """ Builds a bath from its occupancy """
        return cls(frequency, occupancy=occupancy)

    @property
    def frequency(self) -> float:
        """ The frequency, in Hz """
        return self._frequency

    @property
    def occupancy(self) -> float:
        """ The mean photon number """
        return self._occupancy

    @property
    def temperature(self) -> Optional[float]:
        """ The temperature, in K, None for a bath in its ground state """
        return self._temperature

    @property
    def symmetrized_psd(self) -> float:
        """ The symmetrized noise power spectral density n̄ + 1/2, in quanta
        """
        return self._occupancy + 0.5

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, ThermalBath):
            return False
        return (self._frequency, self._occupancy) == \
            (other.frequency, other.occupancy)

    def __hash__(self) -> int:
        return hash((self._frequency, self._occupancy))

    def __repr__(self) -> str:
        return (f"ThermalBath(frequency={self._frequency!r}, "
                f"occupancy={self._occupancy!r})")
