"""
Tests the extraction of the occupancies
"""

import cmath
import math
import unittest

import numpy as np

from pyradcool.physics import ResonatorParams, LinkParams, Spectrum, \
    output_noise_psd, input_noise_psd, reflection_s11, \
    transmission_spectrum, frequency_grid, bose_einstein_occupancy, \
    mode_occupancy, PreconditionError, PhysicalDomainError, GridMismatchError
from pyradcool.estimation import extract_delta_n, deduce_mode_occupancy, \
    transition_source_temperature, theory_curve, leakage_extraction_bias, \
    UncertainValue, OccupancyEstimate

F0 = 10.53e9


class TestExtractDeltaN(unittest.TestCase):
    """ Tests the integral extraction of the occupancy difference
    """

    def setUp(self) -> None:
        self.res = ResonatorParams(F0, 113e3, 298e3)
        self.grid = frequency_grid(self.res)

    def test_round_trip(self):
        """ Tests the extraction from exact spectra
        """
        s_out = output_noise_psd(self.res, 1.56, 0.021, self.grid)
        s_off = input_noise_psd(0.021, self.grid)
        delta_n = extract_delta_n(s_out, s_off, self.res)
        self.assertLess(abs(delta_n.value - 1.539) / 1.539, 0.01)
        self.assertEqual(delta_n.sigma, 0.0)
        mean = extract_delta_n(s_out, s_off, self.res, baseline="mean")
        self.assertAlmostEqual(mean.value, delta_n.value)

    def test_random_draws(self):
        """ Tests the quadrature identity over random parameters
        """
        rng = np.random.default_rng(9)
        for _ in range(100):
            res = ResonatorParams(F0, rng.uniform(1e4, 1e6),
                                  rng.uniform(1e4, 1e6))
            n_en = rng.uniform(1, 5)
            n_in = rng.uniform(0, 0.5)
            grid = frequency_grid(res)
            delta_n = extract_delta_n(output_noise_psd(res, n_en, n_in, grid),
                                      input_noise_psd(n_in, grid), res)
            self.assertLess(abs(delta_n.value - (n_en - n_in)) /
                            (n_en - n_in), 0.01)

    def test_absolute_grid(self):
        """ Tests spectra on absolute frequencies
        """
        grid = frequency_grid(self.res, absolute=True)
        s_out = output_noise_psd(self.res, 1.56, 0.021, grid, absolute=True)
        s_off = input_noise_psd(0.021, grid, absolute=True)
        delta_n = extract_delta_n(s_out, s_off, self.res)
        self.assertLess(abs(delta_n.value - 1.539) / 1.539, 0.01)

    def test_identical(self):
        """ Tests identical spectra give no difference
        """
        s_off = input_noise_psd(0.3, self.grid)
        self.assertEqual(extract_delta_n(s_off, s_off, self.res).value, 0.0)

    def test_linearity(self):
        """ Tests the extraction is linear in the difference
        """
        s_out = output_noise_psd(self.res, 1.56, 0.021, self.grid)
        s_off = input_noise_psd(0.021, self.grid)
        reference = extract_delta_n(s_out, s_off, self.res).value
        for scale in (-2.0, 0.5, 3.0):
            scaled = s_off.with_values(s_off.values + scale *
                                       (s_out.values - s_off.values))
            self.assertAlmostEqual(
                extract_delta_n(scaled, s_off, self.res).value,
                scale * reference)

    def test_preconditions(self):
        """ Tests the grid and the quantity are checked
        """
        s_out = output_noise_psd(self.res, 1.56, 0.021, self.grid)
        other = input_noise_psd(0.021, frequency_grid(self.res, 15, 301))
        with self.assertRaises(GridMismatchError):
            extract_delta_n(s_out, other, self.res)
        narrow = frequency_grid(self.res, 4, 101)
        with self.assertRaises(PreconditionError):
            extract_delta_n(output_noise_psd(self.res, 1.56, 0.021, narrow),
                            input_noise_psd(0.021, narrow), self.res)
        raw = s_out.with_values(s_out.values, quantity="raw")
        with self.assertRaises(PreconditionError):
            extract_delta_n(raw, raw, self.res)
        with self.assertRaises(PreconditionError):
            extract_delta_n(s_out, s_out, self.res, baseline="median")

    def test_uncertainty(self):
        """ Tests the propagated sigma matches the scatter of estimates
        """
        s_out = output_noise_psd(self.res, 1.56, 0.021, self.grid)
        s_off = input_noise_psd(0.021, self.grid)
        rng = np.random.default_rng(13)
        estimates = []
        sigma = None
        for _ in range(300):
            noise_on = 0.01 * s_out.values
            noise_off = 0.01 * s_off.values
            noisy_on = s_out.with_values(
                s_out.values + noise_on * rng.standard_normal(len(s_out)),
                sigma=noise_on)
            noisy_off = s_off.with_values(
                s_off.values + noise_off * rng.standard_normal(len(s_off)),
                sigma=noise_off)
            delta_n = extract_delta_n(noisy_on, noisy_off, self.res)
            estimates.append(delta_n.value)
            sigma = delta_n.sigma
        self.assertLess(abs(np.std(estimates) / sigma - 1), 0.15)
        self.assertLess(abs(np.mean(estimates) - 1.539), 4 * sigma /
                        math.sqrt(300) + 0.015)
        with_gain = extract_delta_n(noisy_on, noisy_off, self.res,
                                    gain_relative_sigma=0.02)
        self.assertAlmostEqual(with_gain.sigma,
                               math.hypot(sigma, 0.02 * with_gain.value))


class TestDeduceModeOccupancy(unittest.TestCase):
    """ Tests the deduction of the mode occupancy
    """

    def setUp(self) -> None:
        self.res = ResonatorParams(F0, 113e3, 298e3)

    def test_examples(self):
        """ Tests the measured conditions, equilibrium and heating
        """
        estimate = deduce_mode_occupancy(1.56, 1.54, self.res)
        self.assertAlmostEqual(estimate.n_mode, 0.44, delta=0.005)
        self.assertFalse(estimate.is_heating)
        self.assertEqual(deduce_mode_occupancy(0.8, 0.0, self.res).n_mode,
                         0.8)
        heating = deduce_mode_occupancy(1.56, -0.5, self.res)
        self.assertAlmostEqual(heating.n_mode, 1.92, delta=0.005)
        self.assertTrue(heating.is_heating)
        self.assertEqual(estimate.inputs_digest["kappa_e"], 298e3)

    def test_identity(self):
        """ Tests the forward form is recovered exactly
        """
        rng = np.random.default_rng(17)
        for _ in range(50):
            res = ResonatorParams(F0, rng.uniform(1, 1e6), rng.uniform(1, 1e6))
            n_en, delta_n = rng.uniform(0, 5), rng.uniform(-2, 5)
            estimate = deduce_mode_occupancy(n_en, delta_n, res)
            self.assertAlmostEqual(n_en - estimate.n_mode,
                                   res.kappa_e / res.kappa * delta_n,
                                   places=12)

    def test_forward(self):
        """ Tests the deduction agrees with the thermalization
        """
        n_mode = deduce_mode_occupancy(1.56, 1.56 - 0.021, self.res).n_mode
        self.assertAlmostEqual(n_mode, mode_occupancy(self.res, 1.56, 0.021))

    def test_uncertainty(self):
        """ Tests the propagation of the uncertainties
        """
        estimate = deduce_mode_occupancy(1.56, UncertainValue(1.54, 0.06),
                                         self.res)
        self.assertAlmostEqual(estimate.sigma_n_mode, 298 / 411 * 0.06)
        self.assertEqual(estimate.sigma_delta_n, 0.06)
        full = deduce_mode_occupancy(UncertainValue(1.56, 0.01),
                                     UncertainValue(1.54, 0.06), self.res,
                                     sigma_kappa_i=1e3, sigma_kappa_e=2e3)
        self.assertGreater(full.sigma_n_mode, estimate.sigma_n_mode)

    def test_negative(self):
        """ Tests a negative mode occupancy is flagged
        """
        with self.assertLogs("pyradcool.estimation.occupancy_extraction",
                             level="WARNING"):
            estimate = deduce_mode_occupancy(0.1, UncertainValue(0.2, 0.1),
                                             self.res)
        self.assertTrue(estimate.is_negative)
        self.assertTrue(estimate.is_physical)
        self.assertIsInstance(estimate, OccupancyEstimate)
        self.assertTrue(estimate.to_dict()["negative"])


class TestTransition(unittest.TestCase):
    """ Tests the transition temperature and the theory curve
    """

    def test_transition(self):
        """ Tests the transition between cooling and heating
        """
        link = LinkParams.from_added_noise(0.91, 0.02)
        temperature = transition_source_temperature(1.56, link, F0)
        self.assertGreaterEqual(temperature, 1.08)
        self.assertLessEqual(temperature, 1.09)
        n_en = bose_einstein_occupancy(F0, 1.02)
        self.assertAlmostEqual(
            transition_source_temperature(n_en, LinkParams(1.0), F0), 1.02)
        helium = transition_source_temperature(
            bose_einstein_occupancy(10e9, 4.2), link, 10e9)
        self.assertGreater(helium, 4.2)

    def test_unreachable(self):
        """ Tests an equilibrium below the link floor
        """
        link = LinkParams.from_added_noise(0.5, 1.0)
        with self.assertRaises(PhysicalDomainError):
            transition_source_temperature(0.5, link, F0)
        with self.assertRaises(PhysicalDomainError):
            transition_source_temperature(1.0, LinkParams(0.0, 1.0), F0)

    def test_theory_curve(self):
        """ Tests the prediction crosses the environment at the transition
        """
        res = ResonatorParams(F0, 113e3, 298e3)
        link = LinkParams.from_added_noise(0.91, 0.02)
        n_en = bose_einstein_occupancy(F0, 1.02)
        temperatures = np.linspace(0.07, 1.45, 30)
        curve = theory_curve(res, n_en, link, F0, temperatures)
        self.assertTrue(np.all(np.diff(curve) > 0))
        self.assertAlmostEqual(curve[0], 0.44, delta=0.01)
        transition = transition_source_temperature(n_en, link, F0)
        self.assertAlmostEqual(
            theory_curve(res, n_en, link, F0, [transition])[0], n_en)


class TestLeakageBias(unittest.TestCase):
    """ Tests the bias of the extraction caused by leakage
    """

    def setUp(self) -> None:
        self.res = ResonatorParams(F0, 113e3, 298e3)

    def _extracted(self, grid, epsilon, phase, n_en=1.56, n_in=0.021):
        leakage = epsilon * cmath.exp(1j * phase)
        s11 = reflection_s11(self.res, grid).values
        transmission = transmission_spectrum(self.res, grid).values
        on = np.abs(s11 + leakage) ** 2 * (n_in + 0.5) + \
            transmission * (n_en + 0.5)
        off = np.full(grid.size, abs(1 + leakage) ** 2 * (n_in + 0.5))
        return extract_delta_n(Spectrum(grid, on), Spectrum(grid, off),
                               self.res).value - (n_en - n_in)

    def test_no_leakage(self):
        """ Tests the bias vanishes without leakage
        """
        self.assertEqual(leakage_extraction_bias(self.res, 0.021, 0.0, 1.0),
                         0.0)

    def test_symmetric_window(self):
        """ Tests the closed form against the extraction
        """
        grid = frequency_grid(self.res)
        for epsilon in (0.02, 0.05, 0.1):
            for phase in (0.0, math.pi / 2, 2.0):
                expected = leakage_extraction_bias(self.res, 0.021, epsilon,
                                                   phase)
                self.assertAlmostEqual(self._extracted(grid, epsilon, phase),
                                       expected, delta=2e-3)

    def test_asymmetric_window(self):
        """ Tests the quadrature term over an asymmetric window
        """
        grid = np.linspace(-15 * self.res.kappa, 8 * self.res.kappa, 461)
        expected = leakage_extraction_bias(self.res, 0.021, 0.05, 1.0,
                                           window=(grid[0], grid[-1]))
        self.assertNotAlmostEqual(
            expected, leakage_extraction_bias(self.res, 0.021, 0.05, 1.0),
            places=3)
        self.assertAlmostEqual(self._extracted(grid, 0.05, 1.0), expected,
                               delta=2e-3)

    def test_linear(self):
        """ Tests the bias is smooth and linear in the leakage
        """
        biases = [leakage_extraction_bias(self.res, 0.021, epsilon, 0.3)
                  for epsilon in (0.0, 0.02, 0.05, 0.1)]
        self.assertAlmostEqual(biases[2], 2.5 * biases[1])
        self.assertAlmostEqual(biases[3], 2 * biases[2])
