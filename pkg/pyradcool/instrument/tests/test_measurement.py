"""
Tests the synthetic measurements
"""

import math
import unittest

import numpy as np

from pyradcool.instrument import AmplifierChain, MeasurementConfig, \
    ThermalScenario, measure_spectrum, apply_circulator_leakage, \
    ideal_off_resonance_spectrum, off_resonance_spectrum, \
    on_resonance_spectrum, thermometry_sweep, probe_reflection
from pyradcool.physics import ResonatorParams, LinkParams, \
    output_noise_psd, reflection_s11, frequency_grid, peak_transmission, \
    PreconditionError, PhysicalDomainError
from pyradcool.estimation import fit_noise_thermometry, link_transmission, \
    extract_delta_n, leakage_extraction_bias, fit_reflection, \
    RESONATOR_OUTPUT, SOURCE_OUTPUT

F0 = 10.53e9
TEMPERATURES = (0.2, 0.4, 0.7, 1.0, 1.4)


class TestMeasureSpectrum(unittest.TestCase):
    """ Tests the detection of a spectrum
    """

    def setUp(self) -> None:
        self.res = ResonatorParams(F0, 113e3, 298e3)
        self.ideal = output_noise_psd(self.res, 1.56, 0.02,
                                      frequency_grid(self.res, 15, 61))
        self.amp = AmplifierChain(1e6, 8.0)

    def test_noiseless(self):
        """ Tests infinitely many averages give the mean power
        """
        cfg = MeasurementConfig(averages=math.inf)
        raw = measure_spectrum(self.ideal, self.amp, cfg, seed=3)
        self.assertTrue(np.array_equal(raw.values,
                                       self.amp.detect(self.ideal.values)))
        self.assertTrue(np.all(raw.sigma == 0))
        self.assertEqual(raw.quantity, "raw")
        self.assertTrue(raw.same_grid(self.ideal))

    def test_identity(self):
        """ Tests a transparent noiseless chain
        """
        cfg = MeasurementConfig(averages=math.inf)
        raw = measure_spectrum(self.ideal, AmplifierChain(1.0), cfg)
        self.assertTrue(np.array_equal(raw.values, self.ideal.values))

    def test_radiometer_scaling(self):
        """ Tests four times the averages halve the fluctuations
        """
        deviations = {}
        for averages in (100, 400):
            cfg = MeasurementConfig(averages=averages)
            mean = self.amp.detect(self.ideal.values)
            relative = np.concatenate([
                measure_spectrum(self.ideal, self.amp, cfg, seed).values /
                mean - 1 for seed in range(1000)])
            deviations[averages] = np.std(relative)
            self.assertLess(abs(deviations[averages] * math.sqrt(averages) -
                                1), 0.05)
        self.assertLess(abs(deviations[100] / deviations[400] - 2) / 2, 0.1)

    def test_sigma(self):
        """ Tests the per-point sigma follows the radiometer equation
        """
        cfg = MeasurementConfig(averages=40000)
        raw = measure_spectrum(self.ideal, self.amp, cfg, seed=1)
        self.assertTrue(np.allclose(raw.sigma,
                                    0.005 * self.amp.detect(
                                        self.ideal.values)))

    def test_deterministic(self):
        """ Tests a seed fixes the fluctuations
        """
        cfg = MeasurementConfig(averages=100)
        first = measure_spectrum(self.ideal, self.amp, cfg, seed=4)
        self.assertEqual(first, measure_spectrum(self.ideal, self.amp, cfg,
                                                 seed=4))
        self.assertNotEqual(first, measure_spectrum(self.ideal, self.amp,
                                                    cfg, seed=5))

    def test_raw_input(self):
        """ Tests only spectra in quanta are detected
        """
        cfg = MeasurementConfig()
        raw = measure_spectrum(self.ideal, self.amp, cfg)
        with self.assertRaises(PreconditionError):
            measure_spectrum(raw, self.amp, cfg)


class TestCirculatorLeakage(unittest.TestCase):
    """ Tests the output spectrum distorted by the circulator
    """

    def setUp(self) -> None:
        self.res = ResonatorParams(F0, 113e3, 298e3)
        self.grid = frequency_grid(self.res, 15, 601)

    def test_no_leakage(self):
        """ Tests the spectrum is undistorted without leakage
        """
        spectrum = apply_circulator_leakage(self.res, 1.56, 0.02,
                                            MeasurementConfig(), self.grid)
        self.assertEqual(spectrum,
                         output_noise_psd(self.res, 1.56, 0.02, self.grid))

    def test_asymmetry(self):
        """ Tests a leakage in quadrature skews the peak
        """
        detunings = np.array([-self.res.kappa / 2, self.res.kappa / 2])
        skews = []
        for phase in (math.pi / 2, -math.pi / 2):
            cfg = MeasurementConfig(leakage_amplitude=0.05,
                                    leakage_phase=phase)
            values = apply_circulator_leakage(self.res, 1.56, 0.02, cfg,
                                              detunings).values
            skews.append(values[1] - values[0])
        self.assertGreater(abs(skews[0]), 0.05)
        self.assertLess(skews[0] * skews[1], 0)
        self.assertAlmostEqual(skews[0], -skews[1])
        # 2 ε (κₑ/κ) (n̄_in + 1/2) on each side
        expected = 4 * 0.05 * self.res.kappa_e / self.res.kappa * 0.52
        self.assertAlmostEqual(abs(skews[0]), expected)

    def test_extraction_bias(self):
        """ Tests the extraction bias is linear in the leakage and vanishes
        without it
        """
        n_in, n_en, phase = 0.02, 1.56, math.pi / 3
        biases = []
        for epsilon in (0.0, 0.02, 0.05, 0.1):
            cfg = MeasurementConfig(leakage_amplitude=epsilon,
                                    leakage_phase=phase)
            s_out = apply_circulator_leakage(self.res, n_en, n_in, cfg,
                                             self.grid)
            level = abs(1 + epsilon * np.exp(1j * phase)) ** 2 * (n_in + 0.5)
            s_off = s_out.with_values(np.full(len(s_out), level))
            extracted = extract_delta_n(s_out, s_off, self.res).value
            bias = extracted - (n_en - n_in)
            expected = leakage_extraction_bias(
                self.res, n_in, epsilon, phase,
                (self.grid[0], self.grid[-1]))
            self.assertAlmostEqual(bias, expected, delta=2e-3)
            biases.append(bias)
        self.assertLess(abs(biases[0]), 2e-3)
        slopes = np.diff(biases) / np.diff([0.0, 0.02, 0.05, 0.1])
        self.assertTrue(np.allclose(slopes, slopes[0], rtol=1e-6))
        self.assertLess(slopes[0], 0)


class TestOffResonance(unittest.TestCase):
    """ Tests the off-resonance reference
    """

    def setUp(self) -> None:
        self.scenario = ThermalScenario(
            ResonatorParams(F0, 113e3, 298e3), 1.02, 0.07,
            LinkParams.from_added_noise(0.91, 0.02),
            AmplifierChain(1e6, 8.0))
        self.res = self.scenario.res
        self.grid = frequency_grid(self.res, 15, 601)

    def test_baseline(self):
        """ Tests the reference is flat at the input level
        """
        ideal = ideal_off_resonance_spectrum(self.scenario,
                                             MeasurementConfig(), self.grid)
        self.assertAlmostEqual(np.median(ideal.values), 0.521, delta=1e-3)
        contamination = ideal.values - (self.scenario.n_in + 0.5)
        self.assertTrue(np.all(contamination >= 0))
        self.assertLess(np.max(contamination),
                        peak_transmission(self.res) * self.scenario.delta_n /
                        900)
        self.assertTrue(ideal.same_grid(output_noise_psd(
            self.res, 1.0, 0.0, self.grid)))

    def test_absolute_grid(self):
        """ Tests the reference on an absolute grid
        """
        absolute = frequency_grid(self.res, 15, 601, absolute=True)
        first = ideal_off_resonance_spectrum(self.scenario,
                                             MeasurementConfig(), absolute,
                                             absolute=True)
        second = ideal_off_resonance_spectrum(self.scenario,
                                              MeasurementConfig(), self.grid)
        self.assertTrue(first.absolute)
        self.assertTrue(np.allclose(first.values, second.values))

    def test_detected(self):
        """ Tests the detected reference
        """
        cfg = MeasurementConfig(averages=math.inf)
        raw = off_resonance_spectrum(self.scenario, cfg, self.grid)
        ideal = ideal_off_resonance_spectrum(self.scenario, cfg, self.grid)
        self.assertTrue(np.allclose(raw.values,
                                    1e6 * (ideal.values + 8.0)))
        noisy = off_resonance_spectrum(self.scenario,
                                       MeasurementConfig(averages=100),
                                       self.grid, seed=2)
        self.assertFalse(np.allclose(noisy.values, raw.values))

    def test_too_close(self):
        """ Tests the resonance must be tuned far enough
        """
        cfg = MeasurementConfig(detune_off=20 * self.res.kappa)
        with self.assertRaises(PreconditionError):
            off_resonance_spectrum(self.scenario, cfg, self.grid)

    def test_on_resonance(self):
        """ Tests the detected output spectrum
        """
        cfg = MeasurementConfig(averages=math.inf)
        raw = on_resonance_spectrum(self.scenario, cfg, self.grid)
        ideal = output_noise_psd(self.res, self.scenario.n_en,
                                 self.scenario.n_in, self.grid)
        self.assertTrue(np.allclose(raw.values, 1e6 * (ideal.values + 8.0)))


class TestThermometrySweep(unittest.TestCase):
    """ Tests the synthetic noise thermometry
    """

    def setUp(self) -> None:
        self.scenario = ThermalScenario(
            ResonatorParams(F0, 113e3, 298e3), 1.02, 0.07,
            LinkParams.from_added_noise(0.91, 0.02),
            AmplifierChain(1e6, 8.0))

    def test_exact_planes(self):
        """ Tests exact readings at both planes give the link
        """
        resonator = fit_noise_thermometry(
            thermometry_sweep(self.scenario, TEMPERATURES, RESONATOR_OUTPUT,
                              math.inf), F0, RESONATOR_OUTPUT)
        self.assertAlmostEqual(resonator.gain / 1e6, 1.0)
        self.assertAlmostEqual(resonator.n_add, 8.0, places=6)
        source = fit_noise_thermometry(
            thermometry_sweep(self.scenario, TEMPERATURES, SOURCE_OUTPUT,
                              math.inf), F0, SOURCE_OUTPUT)
        self.assertAlmostEqual(source.gain / 1e6, 0.91)
        link = link_transmission(source, resonator)
        self.assertAlmostEqual(link.transmission, 0.91)
        self.assertAlmostEqual(link.added_noise, 0.02, places=6)

    def test_readings(self):
        """ Tests the readings and their sigma
        """
        sweep = thermometry_sweep(self.scenario, TEMPERATURES,
                                  averages=40000, seed=1)
        self.assertEqual([point[0] for point in sweep], list(TEMPERATURES))
        for _, power, sigma in sweep:
            self.assertAlmostEqual(sigma / power, 0.005, delta=1e-4)
        self.assertEqual(sweep, thermometry_sweep(
            self.scenario, TEMPERATURES, averages=40000, seed=1))
        with self.assertRaises(PhysicalDomainError):
            thermometry_sweep(self.scenario, TEMPERATURES, "detector")

    def test_transmission_uncertainty(self):
        """ Tests the uncertainty of the link at 0.5 % noise
        """
        hits = 0
        for seed in range(200):
            resonator = fit_noise_thermometry(
                thermometry_sweep(self.scenario, TEMPERATURES,
                                  RESONATOR_OUTPUT, 40000, 2 * seed),
                F0, RESONATOR_OUTPUT)
            source = fit_noise_thermometry(
                thermometry_sweep(self.scenario, TEMPERATURES,
                                  SOURCE_OUTPUT, 40000, 2 * seed + 1),
                F0, SOURCE_OUTPUT)
            link = link_transmission(source, resonator)
            if seed == 0:
                self.assertGreaterEqual(link.sigma_transmission, 0.03)
                self.assertLessEqual(link.sigma_transmission, 0.05)
            if abs(link.transmission - 0.91) <= \
                    2 * link.sigma_transmission:
                hits += 1
        self.assertGreaterEqual(hits, 180)


class TestProbeReflection(unittest.TestCase):
    """ Tests the synthetic probe tone
    """

    def setUp(self) -> None:
        self.res = ResonatorParams(F0, 113e3, 298e3)
        self.grid = frequency_grid(self.res, 10, 201, absolute=True)

    def test_noiseless(self):
        """ Tests a noiseless probe is the reflection coefficient
        """
        probe = probe_reflection(self.res, self.grid, noise=0.0)
        self.assertEqual(probe, reflection_s11(self.res, self.grid, True))
        self.assertIsNone(probe.sigma)

    def test_noisy(self):
        """ Tests the noise of the probe and the fit of its response
        """
        probe = probe_reflection(self.res, self.grid, noise=0.01, seed=6)
        self.assertTrue(probe.absolute)
        self.assertTrue(np.all(probe.sigma == 0.01))
        residual = probe.values - reflection_s11(self.res, self.grid,
                                                 True).values
        self.assertAlmostEqual(np.std(residual.real), 0.01, delta=0.002)
        res, report = fit_reflection(probe)
        self.assertTrue(report.converged)
        self.assertLess(abs(res.kappa_i - 113e3),
                        4 * report.sigmas["kappa_i"])
        self.assertLess(abs(res.f0 - F0), 4 * report.sigmas["f0"])
        with self.assertRaises(PhysicalDomainError):
            probe_reflection(self.res, self.grid, noise=-1.0)


if __name__ == "__main__":
    unittest.main()
