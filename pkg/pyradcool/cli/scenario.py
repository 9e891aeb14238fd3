"""
Scenario files: a flat, human-readable description of an experiment
"""

import hashlib
import math
from decimal import Decimal, InvalidOperation
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..estimation.occupancy_extraction import transition_source_temperature
from ..instrument.amplifier_chain import AmplifierChain
from ..instrument.measurement_config import MeasurementConfig
from ..instrument.thermal_scenario import ThermalScenario
from ..physics.link_params import LinkParams
from ..physics.occupancy import bose_einstein_occupancy
from ..physics.resonator_params import ResonatorParams

TRANSITION = "transition"

# Decimal exponents of the units
FREQUENCY_UNITS = {"Hz": 0, "kHz": 3, "MHz": 6, "GHz": 9}
TEMPERATURE_UNITS = {"K": 0, "mK": -3, "uK": -6}
TIME_UNITS = {"s": 0, "ms": -3, "us": -6, "ns": -9}

# Kinds of values: the accepted units and whether a unit is mandatory
KINDS = {
    "frequency": (tuple(FREQUENCY_UNITS), True),
    "detuning": (tuple(FREQUENCY_UNITS) + ("kappa",), True),
    "temperature": (tuple(TEMPERATURE_UNITS), True),
    "temperature_list": (tuple(TEMPERATURE_UNITS), True),
    "time": (tuple(TIME_UNITS), True),
    "duration": (tuple(TIME_UNITS) + ("1/kappa",), True),
    "angle": (("rad", "deg"), True),
    "gain": (("dB",), False),
    "ratio": (("%",), False),
    "number": ((), False),
    "count": ((), False),
    "integer": ((), False),
}

# Every key, its kind and its default, the measured setup
DEFAULTS: Dict[str, Tuple[str, str]] = {
    "resonator.f0": ("frequency", "10.53 GHz"),
    "resonator.kappa_i": ("frequency", "113 kHz"),
    "resonator.kappa_e": ("frequency", "298 kHz"),
    "environment.temperature": ("temperature", "1.02 K"),
    "source.temperatures": ("temperature_list", "70 mK"),
    "link.transmission": ("ratio", "0.91"),
    "link.added_noise": ("number", "0.02"),
    "amplifier.gain": ("gain", "60 dB"),
    "amplifier.n_add": ("number", "8"),
    "measurement.resolution_bandwidth": ("frequency", "1 kHz"),
    "measurement.averages": ("count", "50000"),
    "measurement.dwell_time": ("time", "auto"),
    "measurement.leakage_amplitude": ("ratio", "0"),
    "measurement.leakage_phase": ("angle", "0 rad"),
    "measurement.detune_off": ("detuning", "30 kappa"),
    "grid.half_width": ("detuning", "15 kappa"),
    "grid.points": ("integer", "601"),
    "probe.noise": ("number", "0.01"),
    "probe.half_width": ("detuning", "10 kappa"),
    "probe.points": ("integer", "201"),
    "calibration.temperatures": ("temperature_list",
                                 "200, 400, 700, 1000, 1400 mK"),
    "calibration.averages": ("count", "40000"),
    "oracle.time_step": ("duration", "0.05 1/kappa"),
    "oracle.duration": ("duration", "50000 1/kappa"),
    "oracle.trajectories": ("integer", "4"),
    "run.seed": ("integer", "0"),
}

RESONATOR_KEYS = ("resonator.f0", "resonator.kappa_i", "resonator.kappa_e")


class ScenarioError(Exception):
    """Exception raised when a scenario is malformed"""


def _where(key: str, line: Optional[int]) -> str:
    if line is None:
        return f"default of {key}"
    return f"line {line}: {key}"


def _number(text: str, key: str, line: Optional[int],
            allow_infinite: bool = False) -> Decimal:
    try:
        number = Decimal(text.strip())
    except InvalidOperation as error:
        raise ScenarioError(
            f"{_where(key, line)}: cannot read a number from "
            f"{text.strip()!r}") from error
    if number.is_nan() or (number.is_infinite() and not allow_infinite):
        raise ScenarioError(f"{_where(key, line)}: the value must be finite")
    return number


def _split_unit(text: str, kind: str, key: str,
                line: Optional[int]) -> Tuple[str, Optional[str]]:
    """ Separates the value from its unit and checks the unit """
    units, mandatory = KINDS[kind]
    parts = text.strip().rsplit(None, 1)
    if len(parts) == 2:
        if parts[1] not in units:
            raise ScenarioError(
                f"{_where(key, line)}: unknown unit {parts[1]!r}, expected "
                f"one of {', '.join(units) or 'none'}")
        return parts[0], parts[1]
    if mandatory:
        raise ScenarioError(
            f"{_where(key, line)}: a unit is required, one of "
            f"{', '.join(units)}")
    return text.strip(), None


# pylint: disable=too-many-return-statements,too-many-branches
def _convert(kind: str, text: str, key: str, line: Optional[int],
             kappa: Optional[float]) -> Any:
    """ Converts the text of a value to SI units """
    if kind == "temperature_list":
        return _convert_list(text, key, line)
    if kind == "time" and text.strip() == "auto":
        return None
    value, unit = _split_unit(text, kind, key, line)
    if kind == "integer":
        number = _number(value, key, line)
        if number != number.to_integral_value():
            raise ScenarioError(f"{_where(key, line)}: an integer is needed")
        return int(number)
    number = _number(value, key, line, allow_infinite=kind == "count")
    if unit in FREQUENCY_UNITS:
        return float(number.scaleb(FREQUENCY_UNITS[unit]))
    if unit in TEMPERATURE_UNITS:
        return float(number.scaleb(TEMPERATURE_UNITS[unit]))
    if unit in TIME_UNITS:
        return float(number.scaleb(TIME_UNITS[unit]))
    if unit == "kappa":
        return float(number) * kappa
    if unit == "1/kappa":
        return float(number) / (2 * math.pi * kappa)
    if unit == "deg":
        return math.radians(float(number))
    if unit == "dB":
        return 10 ** (float(number) / 10)
    if unit == "%":
        return float(number.scaleb(-2))
    return float(number)


def _convert_list(text: str, key: str, line: Optional[int]) -> List[Any]:
    """ Reads a comma-separated list of temperatures

    Each item may carry its unit; items without one take the unit of the
    last item that has one, so that ``200, 400, 700 mK`` is read in mK.
    """
    items = [item.split() for item in text.split(",")]
    if not any(items):
        raise ScenarioError(f"{_where(key, line)}: the list is empty")
    if not all(items) or any(len(item) > 2 for item in items):
        raise ScenarioError(f"{_where(key, line)}: malformed item in the "
                            f"list {text.strip()!r}")
    trailing = next((item[1] for item in reversed(items) if len(item) == 2),
                    None)
    values: List[Any] = []
    for item in items:
        if item == [TRANSITION]:
            values.append(TRANSITION)
            continue
        unit = item[1] if len(item) == 2 else trailing
        if unit is None:
            raise ScenarioError(f"{_where(key, line)}: a unit is required, "
                                f"one of {', '.join(TEMPERATURE_UNITS)}")
        if unit not in TEMPERATURE_UNITS:
            raise ScenarioError(f"{_where(key, line)}: unknown unit "
                                f"{unit!r}")
        number = _number(item[0], key, line)
        values.append(float(number.scaleb(TEMPERATURE_UNITS[unit])))
    numbers = [item for item in values if item != TRANSITION]
    if numbers != sorted(numbers):
        raise ScenarioError(f"{_where(key, line)}: the list must be sorted")
    if any(number <= 0 for number in numbers):
        raise ScenarioError(
            f"{_where(key, line)}: temperatures must be positive")
    return values


def _format(kind: str, value: Any) -> str:
    if kind == "temperature_list":
        return ", ".join(item if item == TRANSITION else f"{item!r} K"
                         for item in value)
    if value is None:
        return "auto"
    if kind in ("frequency", "detuning"):
        return f"{value!r} Hz"
    if kind == "temperature":
        return f"{value!r} K"
    if kind in ("time", "duration"):
        return f"{value!r} s"
    if kind == "angle":
        return f"{value!r} rad"
    return repr(value)


def _parse_lines(text: str) -> Dict[str, Tuple[str, int]]:
    entries: Dict[str, Tuple[str, int]] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if "=" not in content:
            raise ScenarioError(
                f"line {number}: expected 'section.key = value unit', got "
                f"{content!r}")
        key, value = (part.strip() for part in content.split("=", 1))
        if key not in DEFAULTS:
            raise ScenarioError(f"line {number}: unknown key {key!r}")
        if key in entries:
            raise ScenarioError(
                f"line {number}: {key} is already set on line "
                f"{entries[key][1]}")
        if not value:
            raise ScenarioError(f"line {number}: {key} has no value")
        entries[key] = (value, number)
    return entries


class Scenario:
    """ A complete description of a synthetic experiment

    A scenario is written as lines of ``section.key = value unit``, with
    ``#`` comments. Physical quantities carry their unit; ``kappa`` stands
    for the total linewidth and ``1/kappa`` for its inverse angular rate.
    Missing keys take the values of :data:`DEFAULTS`, the measured setup.

    Parameters
    ----------
    values : dict
        The values of all keys, in SI units

    Examples
    --------
    >>> scenario = Scenario.from_text("resonator.kappa_e = 5 MHz")
    >>> scenario.res.kappa_e
    5000000.0

    """

    def __init__(self, values: Dict[str, Any]):
        missing = set(DEFAULTS) - set(values)
        if missing:
            raise ScenarioError(f"Missing keys {sorted(missing)}")
        self._values = dict(values)
        # Builds every component once so that their invariants are checked
        self._res = ResonatorParams(values["resonator.f0"],
                                    values["resonator.kappa_i"],
                                    values["resonator.kappa_e"])
        self._link = LinkParams.from_added_noise(values["link.transmission"],
                                                 values["link.added_noise"])
        self._amplifier = AmplifierChain(values["amplifier.gain"],
                                         values["amplifier.n_add"])
        self._measurement = MeasurementConfig(
            values["measurement.resolution_bandwidth"],
            values["measurement.averages"],
            values["measurement.leakage_amplitude"],
            values["measurement.leakage_phase"],
            values["measurement.detune_off"],
            values["measurement.dwell_time"])
        self._measurement.off_detuning(self._res)
        for key in ("grid.points", "probe.points"):
            if values[key] < 2:
                raise ScenarioError(f"{key} needs at least 2 points")
        if TRANSITION in values["calibration.temperatures"]:
            raise ScenarioError("calibration.temperatures cannot hold the "
                                "transition")
        if values["oracle.trajectories"] < 1:
            raise ScenarioError("oracle.trajectories must be positive")
        if values["run.seed"] < 0:
            raise ScenarioError("run.seed must be non-negative")

    @classmethod
    def from_text(cls, text: str) -> "Scenario":
        """ Reads a scenario

        Parameters
        ----------
        text : str
            The lines of the scenario

        Returns
        ----------
        scenario : :class:`~pyradcool.cli.Scenario`
            The scenario, missing keys set to their defaults

        Raises
        ----------
        ScenarioError
            If a line is malformed, naming the key and the line
        """
        entries = _parse_lines(text)
        values: Dict[str, Any] = {}
        for key in RESONATOR_KEYS + tuple(DEFAULTS):
            if key in values:
                continue
            kind, default = DEFAULTS[key]
            raw, line = entries.get(key, (default, None))
            kappa = None
            if key not in RESONATOR_KEYS:
                kappa = values["resonator.kappa_i"] + \
                    values["resonator.kappa_e"]
            values[key] = _convert(kind, raw, key, line, kappa)
        return cls(values)

    @classmethod
    def from_file(cls, path) -> "Scenario":
        """ Reads a scenario file """
        with open(path, encoding="utf-8") as file:
            return cls.from_text(file.read())

    @classmethod
    def default(cls) -> "Scenario":
        """ Gives the scenario of the measured setup """
        return cls.from_text("")

    def to_text(self) -> str:
        """ Writes the scenario canonically, every key in SI units """
        lines = ["# pyradcool scenario"]
        for key, (kind, _) in DEFAULTS.items():
            lines.append(f"{key} = {_format(kind, self._values[key])}")
        return "\n".join(lines) + "\n"

    @property
    def digest(self) -> str:
        """ The SHA-256 digest of the canonical text """
        return hashlib.sha256(self.to_text().encode("utf-8")).hexdigest()

    def with_seed(self, seed: int) -> "Scenario":
        """ Gives the same scenario with another seed """
        values = dict(self._values)
        values["run.seed"] = int(seed)
        return Scenario(values)

    def with_source_temperatures(self, temperatures) -> "Scenario":
        """ Gives the same scenario with other source temperatures """
        values = dict(self._values)
        values["source.temperatures"] = list(temperatures)
        return Scenario(values)

    def __getitem__(self, key: str) -> Any:
        return self._values[key]

    @property
    def res(self) -> ResonatorParams:
        """ The resonator """
        return self._res

    @property
    def link(self) -> LinkParams:
        """ The link from the source to the resonator """
        return self._link

    @property
    def amplifier(self) -> AmplifierChain:
        """ The detection chain """
        return self._amplifier

    @property
    def measurement(self) -> MeasurementConfig:
        """ The settings of the spectrum measurements """
        return self._measurement

    @property
    def environment_temperature(self) -> float:
        """ The temperature of the environment, in K """
        return self._values["environment.temperature"]

    @property
    def n_en(self) -> float:
        """ The occupancy of the environment """
        return float(bose_einstein_occupancy(self._res.f0,
                                             self.environment_temperature))

    @property
    def transition_temperature(self) -> float:
        """ The source temperature of the equilibrium, in K """
        return transition_source_temperature(self.n_en, self._link,
                                             self._res.f0)

    @property
    def source_temperatures(self) -> List[float]:
        """ The source temperatures, the transition resolved, sorted """
        return sorted(self.transition_temperature if item == TRANSITION
                      else item
                      for item in self._values["source.temperatures"])

    @property
    def calibration_temperatures(self) -> List[float]:
        """ The bath temperatures of the noise thermometry, in K """
        return list(self._values["calibration.temperatures"])

    @property
    def seed(self) -> int:
        """ The seed of the run """
        return self._values["run.seed"]

    def thermal(self, source_temperature: float) -> ThermalScenario:
        """ Gives the thermal network with the source at a temperature """
        return ThermalScenario(self._res, self.environment_temperature,
                               source_temperature, self._link,
                               self._amplifier)

    def grid(self) -> np.ndarray:
        """ The detunings of the spectrum measurements, in Hz """
        half_width = self._values["grid.half_width"]
        return np.linspace(-half_width, half_width,
                           self._values["grid.points"])

    def probe_grid(self) -> np.ndarray:
        """ The absolute frequencies of the probe tone, in Hz """
        half_width = self._values["probe.half_width"]
        return self._res.f0 + np.linspace(-half_width, half_width,
                                          self._values["probe.points"])

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Scenario):
            return False
        return self.to_text() == other.to_text()

    def __hash__(self) -> int:
        return hash(self.to_text())

    def __repr__(self) -> str:
        return f"Scenario({self._res!r}, seed={self.seed!r})"
