"""
Tests the amplifier chain and the measurement settings
"""

import math
import unittest

import numpy as np

from pyradcool.instrument import AmplifierChain, MeasurementConfig
from pyradcool.physics import ResonatorParams, PhysicalDomainError, \
    PreconditionError


class TestAmplifierChain(unittest.TestCase):
    """ Tests the amplifier chain
    """

    def test_creation(self):
        """ Tests the chain and its gain in dB
        """
        chain = AmplifierChain.from_db(60.0, 8.0)
        self.assertAlmostEqual(chain.gain, 1e6)
        self.assertAlmostEqual(chain.gain_db, 60.0)
        self.assertEqual(chain.n_add, 8.0)
        self.assertEqual(chain, AmplifierChain(chain.gain, 8.0))
        self.assertEqual(hash(chain), hash(AmplifierChain(chain.gain, 8.0)))
        self.assertNotEqual(chain, AmplifierChain(1e6, 7.0))

    def test_detect(self):
        """ Tests the detected power
        """
        chain = AmplifierChain(1e6, 8.0)
        detected = chain.detect(np.array([0.5, 1.5]))
        self.assertTrue(np.allclose(detected, [8.5e6, 9.5e6]))
        self.assertAlmostEqual(chain.scaled(2.0).detect(0.5), 1.7e7)
        identity = AmplifierChain(1.0)
        self.assertEqual(float(identity.detect(0.521)), 0.521)

    def test_invalid(self):
        """ Tests the domain of the chain
        """
        with self.assertRaises(PhysicalDomainError):
            AmplifierChain(0.0)
        with self.assertRaises(PhysicalDomainError):
            AmplifierChain(1e6, -1.0)


class TestMeasurementConfig(unittest.TestCase):
    """ Tests the measurement settings
    """

    def setUp(self) -> None:
        self.res = ResonatorParams(10.53e9, 113e3, 298e3)

    def test_radiometer(self):
        """ Tests the relative fluctuation of an averaged point
        """
        cfg = MeasurementConfig(averages=40000)
        self.assertAlmostEqual(cfg.dwell_time, 1e-3)
        self.assertAlmostEqual(cfg.relative_sigma, 0.005)
        longer = MeasurementConfig(resolution_bandwidth=1e3, averages=40000,
                                   dwell_time=4e-3)
        self.assertAlmostEqual(longer.relative_sigma, 0.0025)
        self.assertEqual(MeasurementConfig(averages=math.inf).relative_sigma,
                         0.0)

    def test_invalid(self):
        """ Tests the domain of the settings
        """
        with self.assertRaises(PhysicalDomainError):
            MeasurementConfig(averages=0.5)
        with self.assertRaises(PhysicalDomainError):
            MeasurementConfig(leakage_amplitude=1.0)
        with self.assertRaises(PhysicalDomainError):
            MeasurementConfig(resolution_bandwidth=0.0)
        with self.assertRaises(PhysicalDomainError):
            MeasurementConfig(dwell_time=-1.0)

    def test_off_detuning(self):
        """ Tests the detuning of the off-resonance reference
        """
        cfg = MeasurementConfig()
        self.assertAlmostEqual(cfg.off_detuning(self.res),
                               30 * self.res.kappa)
        far = MeasurementConfig(detune_off=-50 * self.res.kappa)
        self.assertAlmostEqual(far.off_detuning(self.res),
                               -50 * self.res.kappa)
        with self.assertRaises(PreconditionError):
            MeasurementConfig(detune_off=10 * self.res.kappa).off_detuning(
                self.res)

    def test_changes(self):
        """ Tests the copies with other settings
        """
        cfg = MeasurementConfig(averages=100)
        leaky = cfg.with_changes(leakage_amplitude=0.05)
        self.assertEqual(leaky.leakage_amplitude, 0.05)
        self.assertEqual(leaky.averages, 100)
        self.assertNotEqual(leaky, cfg)
        self.assertEqual(cfg.with_changes(), cfg)


if __name__ == "__main__":
    unittest.main()
