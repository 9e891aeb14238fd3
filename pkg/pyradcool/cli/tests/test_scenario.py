"""
Tests the scenario files
"""

import math
import os
import tempfile
import unittest

import numpy as np

from pyradcool.cli import Scenario, ScenarioError, DEFAULTS
from pyradcool.physics import PhysicalDomainError, PreconditionError


class TestScenario(unittest.TestCase):
    """ Tests the reading and the writing of scenarios
    """

    def test_defaults(self):
        """ Tests the default scenario is the measured setup
        """
        scenario = Scenario.default()
        self.assertEqual(scenario.res.f0, 10.53e9)
        self.assertEqual(scenario.res.kappa_i, 113e3)
        self.assertEqual(scenario.res.kappa_e, 298e3)
        self.assertEqual(scenario.environment_temperature, 1.02)
        self.assertEqual(scenario.source_temperatures, [0.07])
        self.assertAlmostEqual(scenario.link.transmission, 0.91)
        self.assertAlmostEqual(scenario.link.added_noise, 0.02)
        self.assertEqual(scenario.amplifier.gain, 1e6)
        self.assertEqual(scenario.amplifier.n_add, 8.0)
        self.assertEqual(scenario.measurement.averages, 50000)
        self.assertAlmostEqual(scenario.measurement.dwell_time, 1e-3)
        self.assertAlmostEqual(scenario["measurement.detune_off"],
                               30 * 411e3)
        self.assertEqual(scenario.calibration_temperatures,
                         [0.2, 0.4, 0.7, 1.0, 1.4])
        self.assertEqual(scenario.seed, 0)
        self.assertAlmostEqual(scenario.n_en, 1.56, delta=0.005)
        self.assertAlmostEqual(scenario.thermal(0.07).n_mode, 0.44,
                               delta=0.01)

    def test_units(self):
        """ Tests the conversion of the units
        """
        scenario = Scenario.from_text(
            "# a comment\n"
            "resonator.f0 = 5 GHz\n"
            "\n"
            "resonator.kappa_i = 0.1 MHz   # intrinsic\n"
            "resonator.kappa_e = 300000 Hz\n"
            "environment.temperature = 800 mK\n"
            "source.temperatures = 20 mK, 100000 uK, 1 K\n"
            "link.transmission = 90 %\n"
            "amplifier.gain = 40 dB\n"
            "measurement.leakage_phase = 90 deg\n"
            "measurement.dwell_time = 2 ms\n"
            "grid.half_width = 10 kappa\n"
            "oracle.time_step = 0.05 1/kappa\n"
            "oracle.duration = 1 ms\n")
        self.assertEqual(scenario.res.f0, 5e9)
        self.assertEqual(scenario.res.kappa_i, 1e5)
        self.assertEqual(scenario.res.kappa_e, 3e5)
        self.assertEqual(scenario.environment_temperature, 0.8)
        self.assertEqual(scenario.source_temperatures, [0.02, 0.1, 1.0])
        self.assertEqual(scenario.link.transmission, 0.9)
        self.assertAlmostEqual(scenario.amplifier.gain, 1e4)
        self.assertAlmostEqual(scenario.measurement.leakage_phase,
                               math.pi / 2)
        self.assertEqual(scenario.measurement.dwell_time, 2e-3)
        self.assertAlmostEqual(scenario["grid.half_width"], 4e6)
        self.assertAlmostEqual(scenario["oracle.time_step"],
                               0.05 / (2 * math.pi * 4e5))
        self.assertEqual(scenario["oracle.duration"], 1e-3)
        grid = scenario.grid()
        self.assertEqual(len(grid), 601)
        self.assertAlmostEqual(grid[-1], 4e6)
        self.assertAlmostEqual(np.mean(scenario.probe_grid()), 5e9,
                               delta=1.0)

    def test_list_units(self):
        """ Tests the unit of the last item applies to the items without one
        """
        scenario = Scenario.from_text(
            "calibration.temperatures = 200, 400, 700 mK\n")
        self.assertEqual(scenario.calibration_temperatures, [0.2, 0.4, 0.7])

    def test_transition(self):
        """ Tests the transition keyword is resolved and sorted
        """
        scenario = Scenario.from_text(
            "source.temperatures = 70 mK, transition, 1.45 K\n")
        temperatures = scenario.source_temperatures
        self.assertEqual(len(temperatures), 3)
        self.assertEqual(temperatures[0], 0.07)
        self.assertEqual(temperatures[2], 1.45)
        self.assertGreaterEqual(temperatures[1], 1.08)
        self.assertLessEqual(temperatures[1], 1.09)
        self.assertAlmostEqual(scenario.thermal(temperatures[1]).delta_n,
                               0.0, places=12)

    def test_perfect_link(self):
        """ Tests a perfect link reaches the equilibrium at the environment
        temperature
        """
        scenario = Scenario.from_text("link.transmission = 1\n"
                                      "link.added_noise = 0\n")
        self.assertAlmostEqual(scenario.transition_temperature, 1.02,
                               places=9)

    def test_round_trip(self):
        """ Tests the canonical text reads back to the same scenario
        """
        scenario = Scenario.from_text(
            "source.temperatures = 70 mK, transition, 1.45 K\n"
            "measurement.averages = inf\n"
            "measurement.leakage_phase = -0.3 rad\n"
            "measurement.detune_off = -40 kappa\n"
            "run.seed = 12\n")
        again = Scenario.from_text(scenario.to_text())
        self.assertEqual(again, scenario)
        self.assertEqual(again.digest, scenario.digest)
        self.assertEqual(hash(again), hash(scenario))
        self.assertTrue(math.isinf(again.measurement.averages))
        self.assertNotEqual(scenario.with_seed(13), scenario)
        self.assertEqual(scenario.with_seed(13).seed, 13)
        self.assertIn("run.seed = 12", scenario.to_text())
        for key in DEFAULTS:
            self.assertIn(f"\n{key} = ", scenario.to_text())

    def test_from_file(self):
        """ Tests the reading of a file
        """
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "scenario.txt")
            with open(path, "w", encoding="utf-8") as file:
                file.write("environment.temperature = 1 K\n")
            scenario = Scenario.from_file(path)
        self.assertEqual(scenario.environment_temperature, 1.0)

    def test_errors(self):
        """ Tests the malformed scenarios name the key and the line
        """
        cases = [("resonator.kappa_i = 113\n", "line 1: resonator.kappa_i"),
                 ("\nresonator.kappa_i = 113 kHzz\n",
                  "line 2: resonator.kappa_i"),
                 ("resonator.f0 = ten GHz\n", "line 1: resonator.f0"),
                 ("resonator.color = 3\n", "line 1"),
                 ("no equal sign\n", "line 1"),
                 ("grid.points = 2.5\n", "line 1: grid.points"),
                 ("source.temperatures = 1 K, 70 mK\n",
                  "line 1: source.temperatures"),
                 ("source.temperatures = ,\n", "line 1: source.temperatures"),
                 ("source.temperatures = \n", "line 1"),
                 ("link.transmission = 0.9\nlink.transmission = 0.8\n",
                  "line 2")]
        for text, where in cases:
            with self.assertRaises(ScenarioError) as context:
                Scenario.from_text(text)
            self.assertIn(where, str(context.exception))

    def test_invalid_components(self):
        """ Tests the invariants of the components are checked
        """
        with self.assertRaises(PhysicalDomainError):
            Scenario.from_text("link.transmission = 1.2\n")
        with self.assertRaises(PhysicalDomainError):
            Scenario.from_text("amplifier.n_add = -1\n")
        with self.assertRaises(PreconditionError):
            Scenario.from_text("measurement.detune_off = 5 kappa\n")
        with self.assertRaises(ScenarioError):
            Scenario.from_text("calibration.temperatures = transition\n")
        with self.assertRaises(ScenarioError):
            Scenario.from_text("grid.points = 1\n")


if __name__ == "__main__":
    unittest.main()
