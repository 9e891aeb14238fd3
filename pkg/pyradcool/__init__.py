"""
Pyradcool
=========
Pyradcool is a python module to simulate the radiative cooling of a
superconducting resonator and to deduce the thermal occupancy of its mode
from output noise spectra.
How to use the documentation
----------------------------
Documentation is available as docstrings directly in the code and as a
Sphinx website built from the doc folder.
Available subpackages
---------------------
physics
    Occupancies, transmission and noise spectra in closed form
estimation
    Fits, noise thermometry calibration and occupancy extraction
langevin
    Stochastic time-domain simulation of the mode, used as an oracle
instrument
    Synthetic measurements: amplification, averaging, circulator leakage
cli
    The pyradcool command line

"""

__version__ = "1.0.0"

__all__ = ["physics",
           "estimation",
           "langevin",
           "instrument",
           "cli"]
