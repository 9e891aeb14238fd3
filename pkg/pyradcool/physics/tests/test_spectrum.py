"""
Tests the spectrum representation
"""

import math
import unittest

import numpy as np

from pyradcool.physics import Spectrum, ResonatorParams, frequency_grid, \
    PreconditionError, GridMismatchError


class TestSpectrum(unittest.TestCase):
    """ Tests the spectra
    """

    def test_creation(self):
        """ Tests the creation of a spectrum
        """
        spectrum = Spectrum([0, 1, 2], [1, 2, 3], sigma=[0.1, 0.1, 0.1],
                            label="s")
        self.assertEqual(len(spectrum), 3)
        self.assertEqual(spectrum.label, "s")
        self.assertFalse(spectrum.is_complex)
        self.assertFalse(spectrum.absolute)
        self.assertEqual(spectrum.unit, "Hz")
        with self.assertRaises(ValueError):
            spectrum.values[0] = 5

    def test_invalid(self):
        """ Tests the validation of the grid
        """
        with self.assertRaises(PreconditionError):
            Spectrum([0, 2, 1], [1, 2, 3])
        with self.assertRaises(PreconditionError):
            Spectrum([0, 1, 2], [1, 2])
        with self.assertRaises(PreconditionError):
            Spectrum([0, 1, 2], [1, np.nan, 3])
        with self.assertRaises(PreconditionError):
            Spectrum([0, 1, 2], [1, 2, 3], sigma=[1, -1, 1])
        with self.assertRaises(PreconditionError):
            Spectrum([0, 1, 2], [1, 2, 3], unit="GHz")

    def test_integrate(self):
        """ Tests the integration over the angular frequency
        """
        spectrum = Spectrum(np.linspace(0, 1, 11), np.ones(11))
        self.assertAlmostEqual(spectrum.integrate(), 2 * math.pi)
        self.assertAlmostEqual(np.sum(spectrum.trapezoid_weights()),
                               2 * math.pi)
        angular = Spectrum(np.linspace(0, 1, 11), np.ones(11), unit="rad/s")
        self.assertAlmostEqual(angular.integrate(), 1.0)

    def test_detunings(self):
        """ Tests the conversion to detunings
        """
        res = ResonatorParams(1e9, 1e3, 1e3)
        absolute = Spectrum(frequency_grid(res, 5, 11, absolute=True),
                            np.zeros(11), absolute=True)
        self.assertTrue(np.allclose(absolute.detunings(res),
                                    frequency_grid(res, 5, 11)))

    def test_same_grid(self):
        """ Tests the comparison of grids
        """
        first = Spectrum([0, 1, 2], [1, 2, 3])
        second = first.with_values([3, 2, 1])
        self.assertTrue(first.same_grid(second))
        first.check_same_grid(second)
        other = Spectrum([0, 1, 3], [1, 2, 3])
        with self.assertRaises(GridMismatchError):
            first.check_same_grid(other)
        self.assertNotEqual(first, second)
        self.assertEqual(first, Spectrum([0, 1, 2], [1, 2, 3]))

    def test_baseline(self):
        """ Tests the level of a flat spectrum
        """
        self.assertAlmostEqual(Spectrum([0, 1, 2], [1, 2, 3]).baseline(), 2.0)
        weighted = Spectrum([0, 1, 2], [1.0, 3.0, 3.5],
                            sigma=[1.0, 1.0, 0.5])
        self.assertAlmostEqual(weighted.baseline(), 3.0)
        self.assertEqual(weighted.peak(), 3.5)

    def test_grid(self):
        """ Tests the default grid
        """
        res = ResonatorParams(10.53e9, 113e3, 298e3)
        grid = frequency_grid(res)
        self.assertEqual(grid.size, 601)
        self.assertAlmostEqual(grid[-1], 15 * res.kappa)
        with self.assertRaises(PreconditionError):
            frequency_grid(res, -1)
