"""
Tests the full synthetic experiment
"""

import unittest

import numpy as np

from pyradcool.cli import Scenario, run_experiment, run_experiments, \
    ConvergenceError
from pyradcool.cli.pipeline import check_converged
from pyradcool.estimation import FitReport


class TestPipeline(unittest.TestCase):
    """ Tests the measure, calibrate and extract loop
    """

    def setUp(self) -> None:
        self.scenario = Scenario.default()

    def test_measured_setup(self):
        """ Tests the measured conditions give 0.44 within the reported
        uncertainty
        """
        result = run_experiment(self.scenario, 0.07, 0)
        self.assertTrue(result.reflection.converged)
        self.assertAlmostEqual(result.thermal.n_mode, 0.44, delta=0.01)
        self.assertTrue(result.covers(k=3.0))
        self.assertGreater(result.estimate.sigma_n_mode, 0.03)
        self.assertLess(result.estimate.sigma_n_mode, 0.07)
        self.assertAlmostEqual(result.res.kappa_e, 298e3, delta=5e3)
        self.assertEqual(result.calibration.reference_plane,
                         "resonator-output")
        values = result.to_dict()
        self.assertEqual(values["source_temperature"], 0.07)
        self.assertIn("estimate", values)

    def test_coverage(self):
        """ Tests the reported uncertainty covers the true occupancy at two
        standard deviations in about 95% of the runs
        """
        results = [run_experiment(self.scenario, 0.07, seed)
                   for seed in range(500)]
        covered = sum(result.covers(k=2.0) for result in results)
        self.assertGreaterEqual(covered, 455)
        sigmas = [result.estimate.sigma_n_mode for result in results]
        self.assertGreater(np.median(sigmas), 0.04)
        self.assertLess(np.median(sigmas), 0.06)

    def test_gain_invariance(self):
        """ Tests the estimate does not depend on the gain of the chain
        """
        quiet = Scenario.from_text("amplifier.gain = 30 dB\n")
        loud = run_experiment(self.scenario, 0.07, 3)
        other = run_experiment(quiet, 0.07, 3)
        self.assertAlmostEqual(loud.estimate.n_mode, other.estimate.n_mode,
                               places=9)
        self.assertAlmostEqual(loud.estimate.sigma_n_mode,
                               other.estimate.sigma_n_mode, places=9)

    def test_heating(self):
        """ Tests a hot source heats the mode above the environment
        """
        result = run_experiment(self.scenario, 1.45, 1)
        self.assertTrue(result.estimate.is_heating)
        self.assertGreater(result.estimate.n_mode, self.scenario.n_en)

    def test_workers(self):
        """ Tests the results do not depend on the number of workers
        """
        temperatures = [0.07, 0.7]
        sequential = run_experiments(self.scenario, temperatures, 5)
        parallel = run_experiments(self.scenario, temperatures, 5, workers=2)
        for first, second in zip(sequential, parallel):
            self.assertEqual(first.estimate, second.estimate)

    def test_convergence(self):
        """ Tests a non-converged report raises
        """
        report = FitReport({"f0": 1.0}, np.eye(1), 0.0, 10, False, "stuck")
        with self.assertRaises(ConvergenceError):
            check_converged(report, "reflection fit")
        check_converged(FitReport({"f0": 1.0}, np.eye(1), 0.0, 10, True),
                        "reflection fit")


if __name__ == "__main__":
    unittest.main()
