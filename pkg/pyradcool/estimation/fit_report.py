"""
Report of a least-squares fit
"""

from typing import Any, Dict

import numpy as np


class FitReport:  # pylint: disable=too-few-public-methods
    """ The outcome of a fit

    A fit that does not converge does not raise: the report is flagged and
    the caller decides.

    Parameters
    ----------
    parameters : dict
        The fitted values, by name, in the order of the covariance
    covariance : numpy.ndarray
        The covariance of the parameters
    residual_norm : float
        The root-mean-square residual
    iterations : int
        The number of function evaluations
    converged : bool
        Whether the optimizer reported convergence
    message : str, optional
        The message of the optimizer

    """

    # pylint: disable=too-many-arguments
    def __init__(self, parameters: Dict[str, float], covariance: np.ndarray,
                 residual_norm: float, iterations: int, converged: bool,
                 message: str = ""):
        self._parameters = dict(parameters)
        self._covariance = np.array(covariance, dtype=float)
        self._covariance.flags.writeable = False
        self._residual_norm = float(residual_norm)
        self._iterations = int(iterations)
        self._converged = bool(converged)
        self._message = message

    @property
    def parameters(self) -> Dict[str, float]:
        """ The fitted values """
        return dict(self._parameters)

    @property
    def covariance(self) -> np.ndarray:
        """ The covariance matrix of the parameters """
        return self._covariance

    @property
    def sigmas(self) -> Dict[str, float]:
        """ The standard deviations of the parameters """
        diagonal = np.sqrt(np.clip(np.diag(self._covariance), 0, None))
        return dict(zip(self._parameters, diagonal.tolist()))

    @property
    def residual_norm(self) -> float:
        """ The root-mean-square residual """
        return self._residual_norm

    @property
    def iterations(self) -> int:
        """ The number of function evaluations """
        return self._iterations

    @property
    def converged(self) -> bool:
        """ Whether the fit converged """
        return self._converged

    @property
    def message(self) -> str:
        """ The message of the optimizer """
        return self._message

    def to_dict(self) -> Dict[str, Any]:
        """ Gives the report as a dictionary """
        return {"parameters": self.parameters,
                "sigmas": self.sigmas,
                "covariance": self._covariance.tolist(),
                "residual_norm": self._residual_norm,
                "iterations": self._iterations,
                "converged": self._converged,
                "message": self._message}

    def __repr__(self) -> str:
        return (f"FitReport(parameters={self._parameters!r}, "
                f"converged={self._converged})")
