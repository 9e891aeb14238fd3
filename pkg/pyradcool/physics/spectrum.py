"""
Representation of a spectrum on a frequency grid
"""

import math
from typing import Any, Optional

import numpy as np
from scipy.integrate import trapezoid

from .domain_error import PreconditionError
from .resonator_params import ResonatorParams

UNITS = ("Hz", "rad/s")


class GridMismatchError(PreconditionError):
    """Exception raised when two spectra are not given on the same grid"""


def _read_only(array):
    array = np.array(array)
    array.flags.writeable = False
    return array


class Spectrum:
    """ A power spectral density (or a complex response) on a grid

    Parameters
    ----------
    frequencies : array-like
        The strictly increasing grid, either absolute frequencies or
        detunings from the resonance
    values : array-like
        The values on the grid, real or complex, all finite
    sigma : array-like, optional
        The standard deviation of each value
    absolute : bool, optional
        Whether the grid holds absolute frequencies (True) or detunings
        (False, by default)
    unit : str, optional
        The unit of the grid, "Hz" (by default) or "rad/s"
    quantity : str, optional
        What the values are: "quanta" (by default), "raw" for detected power
        in arbitrary detector units, "quanta*s" for an intracavity density,
        "complex" for a response
    label : str, optional
        A free-text label, used as a column name when written

    Raises
    ------
    PreconditionError
        If the grid is not strictly increasing, the values are not finite
        or the lengths differ

    """

    # pylint: disable=too-many-arguments
    def __init__(self, frequencies, values, sigma=None, absolute=False,
                 unit="Hz", quantity="quanta", label=""):
        frequencies = np.asarray(frequencies, dtype=float)
        values = np.asarray(values)
        if not np.iscomplexobj(values):
            values = values.astype(float)
        if frequencies.ndim != 1 or values.shape != frequencies.shape:
            raise PreconditionError(
                "The grid and the values must be 1-D arrays of the same "
                "length")
        if frequencies.size > 1 and np.any(np.diff(frequencies) <= 0):
            raise PreconditionError("The grid must be strictly increasing")
        if not np.all(np.isfinite(frequencies)) or \
                not np.all(np.isfinite(values)):
            raise PreconditionError("The grid and the values must be finite")
        if sigma is not None:
            sigma = np.asarray(sigma, dtype=float)
            if sigma.shape != frequencies.shape:
                raise PreconditionError("sigma must have the grid's length")
            if not np.all(np.isfinite(sigma)) or np.any(sigma < 0):
                raise PreconditionError(
                    "sigma must be finite and non-negative")
            sigma = _read_only(sigma)
        if unit not in UNITS:
            raise PreconditionError(f"Unknown grid unit {unit}")
        self._frequencies = _read_only(frequencies)
        self._values = _read_only(values)
        self._sigma = sigma
        self._absolute = bool(absolute)
        self._unit = unit
        self._quantity = quantity
        self._label = label

    @property
    def frequencies(self) -> np.ndarray:
        """ The grid """
        return self._frequencies

    @property
    def values(self) -> np.ndarray:
        """ The values on the grid """
        return self._values

    @property
    def sigma(self) -> Optional[np.ndarray]:
        """ The standard deviation of each value, or None """
        return self._sigma

    @property
    def absolute(self) -> bool:
        """ Whether the grid holds absolute frequencies """
        return self._absolute

    @property
    def unit(self) -> str:
        """ The unit of the grid """
        return self._unit

    @property
    def quantity(self) -> str:
        """ What the values represent """
        return self._quantity

    @property
    def label(self) -> str:
        """ The label of the spectrum """
        return self._label

    @property
    def is_complex(self) -> bool:
        """ Whether the values are complex """
        return np.iscomplexobj(self._values)

    def __len__(self) -> int:
        return self._frequencies.size

    def angular_frequencies(self) -> np.ndarray:
        """ Gives the grid in rad/s """
        if self._unit == "rad/s":
            return self._frequencies
        return 2 * math.pi * self._frequencies

    def detunings(self, res: ResonatorParams) -> np.ndarray:
        """ Gives the grid as detunings from the resonance, in Hz

        Parameters
        ----------
        res : :class:`~pyradcool.physics.ResonatorParams`
            The resonator, whose frequency is subtracted from an absolute
            grid

        Returns
        ----------
        detunings : numpy.ndarray
            The detunings, in Hz
        """
        frequencies = self._frequencies
        if self._unit == "rad/s":
            frequencies = frequencies / (2 * math.pi)
        if self._absolute:
            return frequencies - res.f0
        return frequencies

    def same_grid(self, other: "Spectrum") -> bool:
        """ Whether the two spectra share their grid """
        return self._absolute == other.absolute and \
            self._unit == other.unit and \
            np.array_equal(self._frequencies, other.frequencies)

    def check_same_grid(self, other: "Spectrum"):
        """ Raises a GridMismatchError if the grids differ """
        if not self.same_grid(other):
            raise GridMismatchError("The two spectra are not on the same grid")

    def integrate(self) -> float:
        """ Integrates the values over the angular frequency

        Returns
        ----------
        integral : float
            The trapezoidal integral ∫ S dω, with ω in rad/s
        """
        return trapezoid(self._values, self.angular_frequencies())

    def trapezoid_weights(self) -> np.ndarray:
        """ The weights of the trapezoidal rule over the angular grid """
        omega = self.angular_frequencies()
        weights = np.zeros_like(omega)
        steps = np.diff(omega)
        weights[:-1] += steps / 2
        weights[1:] += steps / 2
        return weights

    def peak(self) -> float:
        """ The largest value of a real spectrum """
        return float(np.max(self._values))

    def baseline(self) -> float:
        """ The level of a flat spectrum, its inverse-variance weighted mean
        when every point has a positive sigma, its mean otherwise
        """
        if self._sigma is not None and np.all(self._sigma > 0):
            weights = 1.0 / self._sigma ** 2
            return float(np.sum(weights * self._values) / np.sum(weights))
        return float(np.mean(self._values))

    def with_values(self, values, sigma=None, quantity=None,
                    label=None) -> "Spectrum":
        """ Gives a spectrum on the same grid with other values

        Parameters
        ----------
        values : array-like
            The new values
        sigma : array-like, optional
            The new standard deviations
        quantity : str, optional
            The new quantity, unchanged by default
        label : str, optional
            The new label, unchanged by default

        Returns
        ----------
        spectrum : :class:`~pyradcool.physics.Spectrum`
            The new spectrum
        """
        return Spectrum(self._frequencies, values, sigma=sigma,
                        absolute=self._absolute, unit=self._unit,
                        quantity=self._quantity if quantity is None
                        else quantity,
                        label=self._label if label is None else label)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Spectrum):
            return False
        if (self._sigma is None) != (other.sigma is None):
            return False
        return self.same_grid(other) and \
            self._quantity == other.quantity and \
            np.array_equal(self._values, other.values) and \
            (self._sigma is None or np.array_equal(self._sigma, other.sigma))

    __hash__ = None

    def __repr__(self) -> str:
        return (f"Spectrum({len(self)} points, quantity={self._quantity!r}, "
                f"absolute={self._absolute}, label={self._label!r})")


def frequency_grid(res: ResonatorParams, half_width: float = 15.0,
                   points: int = 601, absolute: bool = False) -> np.ndarray:
    """ Gives a uniform grid centred on the resonance

    Parameters
    ----------
    res : :class:`~pyradcool.physics.ResonatorParams`
        The resonator
    half_width : float, optional
        The half-width of the window, in units of the total linewidth κ,
        15 by default
    points : int, optional
        The number of points, 601 by default
    absolute : bool, optional
        Whether to give absolute frequencies instead of detunings

    Returns
    ----------
    grid : numpy.ndarray
        The grid, in Hz
    """
    if half_width <= 0 or points < 2:
        raise PreconditionError("The grid needs a positive width and at "
                                "least two points")
    grid = np.linspace(-half_width * res.kappa, half_width * res.kappa,
                       points)
    if absolute:
        grid = grid + res.f0
    return grid
