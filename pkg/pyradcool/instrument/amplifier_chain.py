"""
Representation of the amplification and detection chain
"""

import math
from typing import Any, Dict

import numpy as np

from ..physics.domain_error import PhysicalDomainError


class AmplifierChain:
    """ An amplification chain reduced to a gain and an added noise

    A spectrum S̄ in quanta at the input of the chain is detected as
    G (S̄ + n_add).

    Parameters
    ----------
    gain : float
        The power gain, positive
    n_add : float, optional
        The added noise referred to the input of the chain, in quanta

    Raises
    ------
    PhysicalDomainError
        If the gain is not positive or the added noise is negative

    Examples
    --------
    >>> AmplifierChain.from_db(60.0, 8.0).gain
    1000000.0

    """

    def __init__(self, gain: float, n_add: float = 0.0):
        gain, n_add = float(gain), float(n_add)
        if not math.isfinite(gain) or gain <= 0:
            raise PhysicalDomainError(f"The gain must be positive, got {gain}")
        if not math.isfinite(n_add) or n_add < 0:
            raise PhysicalDomainError(
                f"The added noise must be non-negative, got {n_add}")
        self._gain = gain
        self._n_add = n_add

    @classmethod
    def from_db(cls, gain_db: float, n_add: float = 0.0) -> "AmplifierChain":
        """ Builds a chain from its gain in dB """
        return cls(10 ** (gain_db / 10), n_add)

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

    def detect(self, quanta):
        """ Gives the mean detected power G (S̄ + n_add) """
        return self._gain * (np.asarray(quanta, dtype=float) + self._n_add)

    def scaled(self, factor: float) -> "AmplifierChain":
        """ Gives the same chain with its gain multiplied by a factor """
        return AmplifierChain(self._gain * factor, self._n_add)

    def to_dict(self) -> Dict[str, float]:
        """ Gives the chain as a dictionary """
        return {"gain": self._gain, "n_add": self._n_add}

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, AmplifierChain):
            return False
        return (self._gain, self._n_add) == (other.gain, other.n_add)

    def __hash__(self) -> int:
        return hash((self._gain, self._n_add))

    def __repr__(self) -> str:
        return f"AmplifierChain(gain={self._gain!r}, n_add={self._n_add!r})"
