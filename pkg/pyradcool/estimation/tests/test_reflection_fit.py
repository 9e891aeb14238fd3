"""
Tests the fits of the resonator response
"""

import cmath
import math
import unittest

import numpy as np

from pyradcool.physics import ResonatorParams, Spectrum, reflection_s11, \
    transmission_spectrum, frequency_grid, PreconditionError
from pyradcool.estimation import fit_reflection, fit_fano_spectrum

F0 = 10.53e9


def _noisy_probe(res, noise, seed, points=201):
    grid = frequency_grid(res, 10, points, absolute=True)
    ideal = reflection_s11(res, grid, absolute=True)
    rng = np.random.default_rng(seed)
    values = ideal.values + rng.normal(0, noise, points) + \
        1j * rng.normal(0, noise, points)
    return ideal.with_values(values, sigma=np.full(points, noise))


class TestFitReflection(unittest.TestCase):
    """ Tests the reflection fit
    """

    def setUp(self) -> None:
        self.res = ResonatorParams(F0, 113e3, 298e3)

    def _assert_recovered(self, fitted, expected):
        for name in ("f0", "kappa_i", "kappa_e"):
            self.assertLess(abs(getattr(fitted, name) -
                                getattr(expected, name)) /
                            getattr(expected, name), 1e-6)

    def test_noiseless(self):
        """ Tests the exact recovery on model data
        """
        grid = frequency_grid(self.res, 10, 201, absolute=True)
        probe = reflection_s11(self.res, grid, absolute=True)
        fitted, report = fit_reflection(probe)
        self._assert_recovered(fitted, self.res)
        self.assertTrue(report.converged)
        self.assertLess(report.residual_norm, 1e-10)
        self.assertEqual(list(report.parameters),
                         ["f0", "kappa_i", "kappa_e"])
        self.assertEqual(report.covariance.shape, (3, 3))

    def test_undercoupled(self):
        """ Tests the root choice for an undercoupled resonator
        """
        res = ResonatorParams(F0, 298e3, 113e3)
        grid = frequency_grid(res, 10, 201, absolute=True)
        fitted, _ = fit_reflection(reflection_s11(res, grid, absolute=True))
        self._assert_recovered(fitted, res)

    def test_detuning_grid(self):
        """ Tests a detuning grid needs a reference frequency
        """
        probe = reflection_s11(self.res, frequency_grid(self.res, 10, 201))
        fitted, _ = fit_reflection(probe, reference_frequency=F0)
        self._assert_recovered(fitted, self.res)
        with self.assertRaises(PreconditionError):
            fit_reflection(probe)

    def test_noise_coverage(self):
        """ Tests the scatter of κᵢ and its reported uncertainty at a noise
        of 0.01 per point
        """
        errors = []
        sigmas = []
        for seed in range(300):
            probe = _noisy_probe(self.res, 0.01, seed)
            fitted, report = fit_reflection(probe)
            errors.append(fitted.kappa_i - self.res.kappa_i)
            sigmas.append(report.sigmas["kappa_i"])
        errors = np.array(errors)
        sigmas = np.array(sigmas)
        # κᵢ scatters by about 1 kHz
        self.assertGreater(np.std(errors), 800)
        self.assertLess(np.std(errors), 1200)
        self.assertGreaterEqual(np.sum(np.abs(errors) <= 2500), 285)
        self.assertGreaterEqual(np.sum(np.abs(errors) <= 2 * sigmas), 270)
        self.assertGreater(np.median(sigmas), 700)
        self.assertLess(np.median(sigmas), 1400)

    def test_preconditions(self):
        """ Tests the probe must be long, wide and complex
        """
        short = reflection_s11(self.res,
                               frequency_grid(self.res, 10, 20, absolute=True),
                               absolute=True)
        with self.assertRaises(PreconditionError):
            fit_reflection(short)
        narrow = reflection_s11(self.res,
                                frequency_grid(self.res, 1, 101,
                                               absolute=True),
                                absolute=True)
        with self.assertRaises(PreconditionError):
            fit_reflection(narrow)
        real = Spectrum(np.arange(50.0), np.ones(50))
        with self.assertRaises(PreconditionError):
            fit_reflection(real)

    def test_iteration_cap(self):
        """ Tests a capped fit is flagged instead of raising
        """
        probe = _noisy_probe(self.res, 0.01, 1)
        with self.assertLogs("pyradcool.estimation.reflection_fit",
                             level="WARNING"):
            _, report = fit_reflection(probe, max_iterations=1)
        self.assertFalse(report.converged)


class TestFitFano(unittest.TestCase):
    """ Tests the leakage-aware fit of the difference spectrum
    """

    def test_recovery(self):
        """ Tests the leakage is recovered from exact spectra
        """
        res = ResonatorParams(F0, 113e3, 298e3)
        grid = frequency_grid(res)
        n_en, n_in = 1.56, 0.021
        leakage = 0.05 * cmath.exp(1j * math.pi / 3)
        s11 = reflection_s11(res, grid).values
        transmission = transmission_spectrum(res, grid).values
        on = np.abs(s11 + leakage) ** 2 * (n_in + 0.5) + \
            transmission * (n_en + 0.5)
        off = np.full(grid.size, abs(1 + leakage) ** 2 * (n_in + 0.5))
        s_on = Spectrum(grid, on)
        s_off = Spectrum(grid, off)
        values, report = fit_fano_spectrum(s_on, s_off, res, n_in=n_in)
        self.assertAlmostEqual(values["delta_n"], n_en - n_in, places=8)
        self.assertAlmostEqual(values["epsilon"], 0.05, places=8)
        self.assertAlmostEqual(values["phase"], math.pi / 3, places=6)
        self.assertTrue(report.converged)
        self.assertLess(report.residual_norm, 1e-10)
