"""
Langevin simulation of a mode driven by two thermal baths
"""

import logging
import math
from multiprocessing import Pool
from typing import Iterable, List, Optional, Tuple

import numpy as np
from scipy.signal import lfilter

from ..physics.occupancy import mode_occupancy
from ..physics.spectrum import Spectrum
from .psd_estimation import estimate_psd
from .trajectory_config import TrajectoryConfig

logger = logging.getLogger(__name__)

MAX_BATCHES = 200
# Shortest batch, in units of 1/κ, for batch means to be independent
MIN_BATCH_DURATION = 20.0


def _complex_normal(rng, size):
    return (rng.standard_normal(size) + 1j * rng.standard_normal(size)) / \
        math.sqrt(2)


def _bath_noise(rng, occupancy: float, kappa: float, dt: float,
                steps: int, method: str) -> Tuple[np.ndarray, np.ndarray]:
    """ Draws the kicks of one bath on the mode and its input field

    For a bath of symmetrized density q = n̄ + 1/2, the kick over a step is
    U = ∫ e^{-κ(dt-s)/2} dW(s) and the input integrated over the step is
    Y = ∫ dW(s), with E|dW|² = q ds. Both are drawn jointly: the exact
    covariance is used for the analytic update, independent increments
    for Euler-Maruyama.
    """
    symmetrized = occupancy + 0.5
    first = _complex_normal(rng, steps)
    second = _complex_normal(rng, steps)
    if method == "euler":
        increment = math.sqrt(symmetrized * dt) * first
        return increment, increment
    variance_u = symmetrized * -math.expm1(-kappa * dt) / kappa
    variance_y = symmetrized * dt
    covariance = symmetrized * -math.expm1(-kappa * dt / 2) / (kappa / 2)
    cholesky = np.linalg.cholesky(np.array([[variance_u, covariance],
                                            [covariance, variance_y]]))
    kick = cholesky[0, 0] * first
    integrated = cholesky[1, 0] * first + cholesky[1, 1] * second
    return kick, integrated


def stationary_variance(cfg: TrajectoryConfig) -> float:
    """ Gives the stationary ⟨|a|²⟩ of the discretized dynamics

    The analytic update reaches n̄_mode + 1/2 for any time step; the
    Euler-Maruyama update overshoots it by a factor 1/(1 - κ dt/4).
    """
    target = mode_occupancy(cfg.res, cfg.n_en, cfg.n_in) + 0.5
    if cfg.method == "exact":
        return target
    return target / (1 - cfg.res.kappa_angular * cfg.dt / 4)


def batch_standard_error(series: np.ndarray, batches: int) -> float:
    """ Gives the standard error of the mean of a correlated series

    The series is cut into contiguous batches, long compared to its
    correlation time, whose means are treated as independent.
    """
    batches = max(min(batches, series.size // 2), 2)
    usable = series.size - series.size % batches
    means = series[:usable].reshape(batches, -1).mean(axis=1)
    return float(np.std(means, ddof=1) / math.sqrt(batches))


class TrajectoryResult:
    """ The outcome of a Langevin trajectory

    Parameters
    ----------
    config : :class:`~pyradcool.langevin.TrajectoryConfig`
        The configuration
    samples : numpy.ndarray
        The mode amplitude after the burn-in
    output_samples : numpy.ndarray
        The output field, averaged over each step, after the burn-in

    """

    def __init__(self, config: TrajectoryConfig, samples: np.ndarray,
                 output_samples: np.ndarray):
        self._config = config
        self._samples = samples
        self._output_samples = output_samples
        self._psd: Optional[Spectrum] = None
        self._output_psd: Optional[Spectrum] = None
        intensity = np.abs(samples) ** 2
        self._occupancy_estimate = float(np.mean(intensity)) - 0.5
        kappa_dt = config.res.kappa_angular * config.dt
        batches = min(MAX_BATCHES,
                      int(samples.size * kappa_dt / MIN_BATCH_DURATION))
        self._standard_error = batch_standard_error(intensity, batches)

    @property
    def config(self) -> TrajectoryConfig:
        """ The configuration """
        return self._config

    @property
    def samples(self) -> np.ndarray:
        """ The complex mode amplitude """
        return self._samples

    @property
    def output_samples(self) -> np.ndarray:
        """ The complex output field, in √quanta/√s """
        return self._output_samples

    @property
    def occupancy_estimate(self) -> float:
        """ The mean of |a|² minus the vacuum half-quantum """
        return self._occupancy_estimate

    @property
    def standard_error(self) -> float:
        """ The standard error of the occupancy, from batch means """
        return self._standard_error

    @property
    def psd(self) -> Spectrum:
        """ The Welch density of the mode amplitude """
        if self._psd is None:
            self._psd = self._shifted(estimate_psd(self._rotating_samples(),
                                                   self._config.dt))
        return self._psd

    @property
    def output_psd(self) -> Spectrum:
        """ The Welch density of the output field, in quanta """
        if self._output_psd is None:
            self._output_psd = self._shifted(estimate_psd(
                self._rotating_output(), self._config.dt, quantity="quanta",
                label="s_out"))
        return self._output_psd

    def _rotation(self, size):
        times = (self._config.burn_in_steps + np.arange(size)) * \
            self._config.dt
        return np.exp(-2j * math.pi * self._config.res.f0 * times)

    def _rotating_samples(self):
        if self._config.rotating:
            return self._samples
        return self._samples / self._rotation(self._samples.size)

    def _rotating_output(self):
        if self._config.rotating:
            return self._output_samples
        return self._output_samples / self._rotation(self._output_samples.size)

    def _shifted(self, spectrum):
        # Densities are estimated in the rotating frame, where they are not
        # aliased, and placed on absolute frequencies for the laboratory frame
        if self._config.rotating:
            return spectrum
        return Spectrum(spectrum.frequencies + self._config.res.f0,
                        spectrum.values, absolute=True,
                        quantity=spectrum.quantity, label=spectrum.label)

    def within_standard_errors(self, expected: float, k: float = 3.0) -> bool:
        """ Whether the occupancy is within k standard errors of a value """
        return abs(self._occupancy_estimate - expected) <= \
            k * self._standard_error

    def __repr__(self) -> str:
        return (f"TrajectoryResult(occupancy={self._occupancy_estimate!r} ± "
                f"{self._standard_error!r})")


# pylint: disable=too-many-locals
def simulate_trajectory(cfg: TrajectoryConfig) -> TrajectoryResult:
    """ Simulates the mode amplitude with a Langevin equation

    In the frame rotating at f0, da = -(κ/2) a dt + √κᵢ dW_en + √κₑ dW_in,
    each bath kicking with E|dW|² = (n̄ + 1/2) dt. The output field is
    a_out = a_in - √κₑ a, averaged over each step. The first 10/κ are
    discarded before any statistics.

    Parameters
    ----------
    cfg : :class:`~pyradcool.langevin.TrajectoryConfig`
        The configuration

    Returns
    ----------
    result : :class:`~pyradcool.langevin.TrajectoryResult`
        The trajectory and its statistics, deterministic for a given seed
    """
    rng = np.random.default_rng(cfg.seed)
    kappa_i = 2 * math.pi * cfg.res.kappa_i
    kappa_e = 2 * math.pi * cfg.res.kappa_e
    kappa = kappa_i + kappa_e
    steps = cfg.steps
    kick_en, _ = _bath_noise(rng, cfg.n_en, kappa, cfg.dt, steps, cfg.method)
    kick_in, input_in = _bath_noise(rng, cfg.n_in, kappa, cfg.dt, steps,
                                    cfg.method)
    kicks = math.sqrt(kappa_i) * kick_en + math.sqrt(kappa_e) * kick_in
    if cfg.method == "exact":
        decay = math.exp(-kappa * cfg.dt / 2)
    else:
        decay = 1 - kappa * cfg.dt / 2
    # a[k + 1] = decay a[k] + kicks[k], from a[0] = 0
    amplitude = np.empty(steps + 1, dtype=complex)
    amplitude[0] = 0
    amplitude[1:] = lfilter([1.0], [1.0, -decay], kicks)
    averaged = (amplitude[:-1] + amplitude[1:]) / 2
    output = input_in / cfg.dt - math.sqrt(kappa_e) * averaged
    burn_in = cfg.burn_in_steps
    samples = amplitude[1 + burn_in:]
    output = output[burn_in:]
    if not cfg.rotating:
        times = (burn_in + np.arange(samples.size)) * cfg.dt
        rotation = np.exp(-2j * math.pi * cfg.res.f0 * times)
        samples = samples * rotation
        output = output * rotation
    result = TrajectoryResult(cfg, samples, output)
    logger.debug("Trajectory seed %d: occupancy %g ± %g", cfg.seed,
                 result.occupancy_estimate, result.standard_error)
    return result


def run_trajectories(configs: Iterable[TrajectoryConfig],
                     workers: int = 1) -> List[TrajectoryResult]:
    """ Simulates independent trajectories, concurrently when asked

    Each trajectory only depends on its own configuration, so the results
    do not depend on the number of workers.

    Parameters
    ----------
    configs : iterable of :class:`~pyradcool.langevin.TrajectoryConfig`
        The configurations
    workers : int, optional
        The number of processes, 1 by default

    Returns
    ----------
    results : list of :class:`~pyradcool.langevin.TrajectoryResult`
        The results, in the order of the configurations
    """
    configs = list(configs)
    if workers <= 1 or len(configs) <= 1:
        return [simulate_trajectory(cfg) for cfg in configs]
    with Pool(min(workers, len(configs))) as pool:
        return pool.map(simulate_trajectory, configs)
