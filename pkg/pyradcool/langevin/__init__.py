"""
:mod:`pyradcool.langevin`
=========================

This module simulates the mode amplitude in the time domain, driven by the
noise of both baths, and estimates its statistics. It is an independent
check of the closed forms of :mod:`pyradcool.physics`.

Available Classes
-----------------

:class:`~pyradcool.langevin.TrajectoryConfig`
    The parameters of one stochastic trajectory
:class:`~pyradcool.langevin.TrajectoryResult`
    The samples of a trajectory and their statistics

"""

from .trajectory_config import TrajectoryConfig, spawn_seeds, METHODS
from .psd_estimation import estimate_psd, fit_lorentzian, segment_count, \
    default_segment_length
from .trajectory import TrajectoryResult, simulate_trajectory, \
    run_trajectories, stationary_variance, batch_standard_error

__all__ = ["TrajectoryConfig",
           "TrajectoryResult",
           "METHODS",
           "spawn_seeds",
           "simulate_trajectory",
           "run_trajectories",
           "stationary_variance",
           "batch_standard_error",
           "estimate_psd",
           "fit_lorentzian",
           "segment_count",
           "default_segment_length"]
