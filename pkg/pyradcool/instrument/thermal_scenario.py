"""
The thermal network of a radiative cooling experiment
"""

from typing import Any, Dict

import networkx as nx
from networkx.drawing.nx_pydot import write_dot

from ..physics.domain_error import PhysicalDomainError
from ..physics.link_params import LinkParams
from ..physics.occupancy import external_bath_occupancy, mode_occupancy
from ..physics.resonator_params import ResonatorParams
from ..physics.thermal_bath import ThermalBath
from .amplifier_chain import AmplifierChain


class ThermalScenario:
    """ A resonator between a hot environment and a cold thermal source

    The source radiates through a lossy link and a circulator into the
    resonator; the field leaving the resonator goes back through the
    circulator to the amplifier chain.

    Parameters
    ----------
    res : :class:`~pyradcool.physics.ResonatorParams`
        The resonator
    environment_temperature : float
        The temperature of the physical environment, in K
    source_temperature : float
        The temperature of the thermal source, in K
    link : :class:`~pyradcool.physics.LinkParams`, optional
        The link between the source and the resonator, lossless by default
    amplifier : :class:`~pyradcool.instrument.AmplifierChain`, optional
        The detection chain, of unit gain and no added noise by default

    Examples
    --------
    >>> scenario = ThermalScenario(ResonatorParams(10.53e9, 113e3, 298e3),
    ...                            1.02, 0.07,
    ...                            LinkParams.from_added_noise(0.91, 0.02))
    >>> round(scenario.n_mode, 2)
    0.44

    """

    # pylint: disable=too-many-arguments
    def __init__(self, res: ResonatorParams, environment_temperature: float,
                 source_temperature: float, link: LinkParams = None,
                 amplifier: AmplifierChain = None):
        if not environment_temperature > 0 or not source_temperature > 0:
            raise PhysicalDomainError("Temperatures must be positive")
        self._res = res
        self._environment = ThermalBath.from_temperature(
            res.f0, environment_temperature)
        self._source = ThermalBath.from_temperature(res.f0, source_temperature)
        self._link = link if link is not None else LinkParams(1.0)
        self._amplifier = amplifier if amplifier is not None \
            else AmplifierChain(1.0)

    @property
    def res(self) -> ResonatorParams:
        """ The resonator """
        return self._res

    @property
    def frequency(self) -> float:
        """ The frequency of the occupancies, the resonance, in Hz """
        return self._res.f0

    @property
    def environment(self) -> ThermalBath:
        """ The physical environment of the resonator """
        return self._environment

    @property
    def source(self) -> ThermalBath:
        """ The thermal source """
        return self._source

    @property
    def environment_temperature(self) -> float:
        """ The temperature of the environment, in K """
        return self._environment.temperature

    @property
    def source_temperature(self) -> float:
        """ The temperature of the thermal source, in K """
        return self._source.temperature

    @property
    def link(self) -> LinkParams:
        """ The link """
        return self._link

    @property
    def amplifier(self) -> AmplifierChain:
        """ The detection chain """
        return self._amplifier

    @property
    def n_en(self) -> float:
        """ The occupancy of the environment """
        return self._environment.occupancy

    @property
    def n_s(self) -> float:
        """ The occupancy of the thermal source """
        return self._source.occupancy

    @property
    def n_in(self) -> float:
        """ The occupancy reaching the resonator through the link """
        return float(external_bath_occupancy(self._link, self.n_s))

    @property
    def n_mode(self) -> float:
        """ The occupancy of the mode """
        return float(mode_occupancy(self._res, self.n_en, self.n_in))

    @property
    def delta_n(self) -> float:
        """ The occupancy difference n̄_en - n̄_in """
        return self.n_en - self.n_in

    def with_source_temperature(self, temperature: float) \
            -> "ThermalScenario":
        """ Gives the same setup with the source at another temperature """
        return ThermalScenario(self._res, self.environment_temperature,
                               temperature, self._link, self._amplifier)

    def with_amplifier(self, amplifier: AmplifierChain) -> "ThermalScenario":
        """ Gives the same setup with another detection chain """
        return ThermalScenario(self._res, self.environment_temperature,
                               self.source_temperature, self._link,
                               amplifier)

    def to_networkx(self) -> nx.DiGraph:
        """
        Transforms the setup into a networkx graph

        The nodes are the elements the noise goes through, annotated with
        their occupancy; the edges carry the coupling between them.

        Returns
        -------
        graph :  networkx.DiGraph
            A networkx DiGraph representing the thermal network

        """
        graph = nx.DiGraph()
        graph.add_node("source",
                       label=f"source, {self.source_temperature:g} K, "
                             f"n={self.n_s:.4g}",
                       occupancy=self.n_s)
        graph.add_node("link", label=f"link, +{self._link.added_noise:.4g}",
                       occupancy=self._link.n_eff_link)
        graph.add_node("circulator", label="circulator", shape="circle")
        graph.add_node("resonator",
                       label=f"resonator, {self._res.f0 / 1e9:g} GHz, "
                             f"n={self.n_mode:.4g}",
                       occupancy=self.n_mode, peripheries=2)
        graph.add_node("environment",
                       label=f"environment, "
                             f"{self.environment_temperature:g} K, "
                             f"n={self.n_en:.4g}",
                       occupancy=self.n_en)
        graph.add_node("amplifier",
                       label=f"amplifier, {self._amplifier.gain_db:.4g} dB, "
                             f"+{self._amplifier.n_add:.4g}",
                       shape="box")
        graph.add_node("detector", label="detector", shape="box")
        graph.add_edge("source", "link",
                       label=f"λ={self._link.transmission:.4g}")
        graph.add_edge("link", "circulator", label=f"n={self.n_in:.4g}")
        graph.add_edge("circulator", "resonator",
                       label=f"κe={self._res.kappa_e:.4g} Hz")
        graph.add_edge("environment", "resonator",
                       label=f"κi={self._res.kappa_i:.4g} Hz")
        graph.add_edge("resonator", "circulator", label="output")
        graph.add_edge("circulator", "amplifier")
        graph.add_edge("amplifier", "detector")
        return graph

    def write_as_dot(self, filename):
        """
        Writes the thermal network in dot format into a file

        Parameters
        ----------
        filename : str
            The filename where to write the dot file

        """
        write_dot(self.to_networkx(), filename)

    def to_dict(self) -> Dict[str, Any]:
        """ Gives the setup and its occupancies as a dictionary """
        return {"resonator": self._res.to_dict(),
                "environment_temperature": self.environment_temperature,
                "source_temperature": self.source_temperature,
                "link": self._link.to_dict(),
                "amplifier": self._amplifier.to_dict(),
                "n_en": self.n_en,
                "n_s": self.n_s,
                "n_in": self.n_in,
                "n_mode": self.n_mode}

    def __repr__(self) -> str:
        return (f"ThermalScenario({self._res!r}, "
                f"environment_temperature={self.environment_temperature!r}, "
                f"source_temperature={self.source_temperature!r})")
