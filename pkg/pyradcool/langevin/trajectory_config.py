"""
Configuration of a stochastic trajectory of the mode
"""

import math
from typing import Any, Dict, List, Optional

import numpy as np

from ..physics.domain_error import PhysicalDomainError, PreconditionError
from ..physics.resonator_params import ResonatorParams

METHODS = ("exact", "euler")

# Bounds in units of the inverse angular total rate
MAX_TIME_STEP = 0.1
MIN_DURATION = 100.0
BURN_IN = 10.0
DEFAULT_TIME_STEP = 0.05
DEFAULT_DURATION = 2000.0
# Rounding slack when counting steps
STEP_TOLERANCE = 1e-9


def spawn_seeds(seed: int, count: int) -> List[int]:
    """ Derives independent 64-bit seeds from a seed

    The children of a numpy SeedSequence do not depend on how many workers
    consume them, so a parallel run reproduces a sequential one.

    Parameters
    ----------
    seed : int
        The parent seed
    count : int
        The number of seeds

    Returns
    ----------
    seeds : list of int
        The derived seeds
    """
    children = np.random.SeedSequence(seed).spawn(count)
    return [int(child.generate_state(1, dtype=np.uint64)[0])
            for child in children]


class TrajectoryConfig:
    """ The parameters of one Langevin trajectory

    Times are in seconds. The time step and the duration default to 0.05/κ
    and 2000/κ, with κ the angular total rate.

    Parameters
    ----------
    res : :class:`~pyradcool.physics.ResonatorParams`
        The resonator
    n_en : float
        The occupancy of the environment
    n_in : float
        The occupancy of the external bath
    dt : float, optional
        The time step, below 0.1/κ
    duration : float, optional
        The simulated time, at least 100/κ
    seed : int, optional
        The seed of the generator, 0 by default
    rotating : bool, optional
        Whether the samples are given in the frame rotating at f0 (True by
        default) or in the laboratory frame
    method : str, optional
        "exact" (by default) for the analytic Ornstein-Uhlenbeck update or
        "euler" for Euler-Maruyama

    Raises
    ------
    PreconditionError
        If the time step is too large or the duration too short
    PhysicalDomainError
        If an occupancy is negative

    """

    # pylint: disable=too-many-arguments
    def __init__(self, res: ResonatorParams, n_en: float, n_in: float,
                 dt: Optional[float] = None, duration: Optional[float] = None,
                 seed: int = 0, rotating: bool = True,
                 method: str = "exact"):
        if n_en < 0 or n_in < 0:
            raise PhysicalDomainError("Occupancies must be non-negative")
        kappa = res.kappa_angular
        if dt is None:
            dt = DEFAULT_TIME_STEP / kappa
        if duration is None:
            duration = DEFAULT_DURATION / kappa
        if not 0 < dt < MAX_TIME_STEP / kappa:
            raise PreconditionError(
                f"The time step must be below {MAX_TIME_STEP}/kappa, got "
                f"{dt * kappa:.3g}/kappa")
        if duration < MIN_DURATION / kappa:
            raise PreconditionError(
                f"The duration must be at least {MIN_DURATION}/kappa, got "
                f"{duration * kappa:.3g}/kappa")
        if method not in METHODS:
            raise PreconditionError(f"Unknown method {method}")
        self._res = res
        self._n_en = float(n_en)
        self._n_in = float(n_in)
        self._dt = float(dt)
        self._duration = float(duration)
        self._seed = int(seed)
        self._rotating = bool(rotating)
        self._method = method

    @property
    def res(self) -> ResonatorParams:
        """ The resonator """
        return self._res

    @property
    def n_en(self) -> float:
        """ The occupancy of the environment """
        return self._n_en

    @property
    def n_in(self) -> float:
        """ The occupancy of the external bath """
        return self._n_in

    @property
    def dt(self) -> float:
        """ The time step, in s """
        return self._dt

    @property
    def duration(self) -> float:
        """ The simulated time, in s """
        return self._duration

    @property
    def seed(self) -> int:
        """ The seed """
        return self._seed

    @property
    def rotating(self) -> bool:
        """ Whether the samples are in the rotating frame """
        return self._rotating

    @property
    def method(self) -> str:
        """ The discretization """
        return self._method

    @property
    def steps(self) -> int:
        """ The number of time steps """
        return int(math.ceil(self._duration / self._dt - STEP_TOLERANCE))

    @property
    def burn_in_steps(self) -> int:
        """ The number of steps discarded before the statistics, 10/κ """
        return int(math.ceil(BURN_IN / self._res.kappa_angular / self._dt -
                             STEP_TOLERANCE))

    def with_seed(self, seed: int) -> "TrajectoryConfig":
        """ Gives the same configuration with another seed """
        return self.with_changes(seed=seed)

    def with_changes(self, **changes) -> "TrajectoryConfig":
        """ Gives a copy with some parameters changed """
        parameters = self.to_dict()
        parameters.pop("f0")
        parameters.pop("kappa_i")
        parameters.pop("kappa_e")
        parameters.update(changes)
        return TrajectoryConfig(parameters.pop("res", self._res), **parameters)

    def to_dict(self) -> Dict[str, Any]:
        """ Gives the configuration as a dictionary """
        values = self._res.to_dict()
        values.update({"n_en": self._n_en,
                       "n_in": self._n_in,
                       "dt": self._dt,
                       "duration": self._duration,
                       "seed": self._seed,
                       "rotating": self._rotating,
                       "method": self._method})
        return values

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, TrajectoryConfig):
            return False
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash(tuple(self.to_dict().items()))

    def __repr__(self) -> str:
        return (f"TrajectoryConfig({self._res!r}, n_en={self._n_en!r}, "
                f"n_in={self._n_in!r}, seed={self._seed!r}, "
                f"method={self._method!r})")
