"""
The record written by every command, enough to replay it
"""

import datetime
import hashlib
import json
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

from .. import __version__

RECORD_NAME = "run.json"


class ReplayMismatchError(Exception):
    """Exception raised when a replayed run does not reproduce a record"""


def file_digest(path) -> str:
    """ Gives the SHA-256 digest of a file """
    digest = hashlib.sha256()
    with open(path, "rb") as file:
        for chunk in iter(lambda: file.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


def timestamp() -> str:
    """ Gives the current UTC time, or SOURCE_DATE_EPOCH when it is set """
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if epoch:
        moment = datetime.datetime.fromtimestamp(int(epoch),
                                                 datetime.timezone.utc)
    else:
        moment = datetime.datetime.now(datetime.timezone.utc)
    return moment.replace(microsecond=0).isoformat()


def _plain(value):
    # numpy scalars and arrays
    if hasattr(value, "tolist"):
        return value.tolist()
    raise TypeError(f"Cannot write {type(value).__name__} as JSON")


def write_json(path, values: Dict[str, Any]):
    """ Writes a dictionary as canonical JSON """
    with open(path, "w", encoding="utf-8") as file:
        json.dump(values, file, indent=2, sort_keys=True, default=_plain)
        file.write("\n")


class RunRecord:
    """ What a command was given and what it produced

    Parameters
    ----------
    command : str
        The command
    scenario : str
        The canonical text of the scenario
    arguments : dict
        The other arguments of the command
    outputs : dict
        The SHA-256 digest of each output file, by name
    results : dict, optional
        The summary of the results
    inputs : dict, optional
        The SHA-256 digest of each input file, by path
    created : str, optional
        The time of the run, now by default
    version : str, optional
        The version of pyradcool

    """

    # pylint: disable=too-many-arguments
    def __init__(self, command: str, scenario: str,
                 arguments: Dict[str, Any], outputs: Dict[str, str],
                 results: Optional[Dict[str, Any]] = None,
                 inputs: Optional[Dict[str, str]] = None,
                 created: Optional[str] = None,
                 version: str = __version__):
        self._command = command
        self._scenario = scenario
        self._arguments = dict(arguments)
        self._outputs = dict(outputs)
        self._results = dict(results or {})
        self._inputs = dict(inputs or {})
        self._created = created or timestamp()
        self._version = version

    @property
    def command(self) -> str:
        """ The command """
        return self._command

    @property
    def scenario(self) -> str:
        """ The canonical scenario text """
        return self._scenario

    @property
    def scenario_digest(self) -> str:
        """ The SHA-256 digest of the scenario text """
        return hashlib.sha256(self._scenario.encode("utf-8")).hexdigest()

    @property
    def arguments(self) -> Dict[str, Any]:
        """ The arguments of the command """
        return dict(self._arguments)

    @property
    def outputs(self) -> Dict[str, str]:
        """ The digests of the outputs """
        return dict(self._outputs)

    @property
    def results(self) -> Dict[str, Any]:
        """ The summary of the results """
        return self._results

    @property
    def inputs(self) -> Dict[str, str]:
        """ The digests of the input files """
        return dict(self._inputs)

    @property
    def created(self) -> str:
        """ The time of the run """
        return self._created

    @property
    def version(self) -> str:
        """ The version that produced the record """
        return self._version

    def mismatches(self, other: "RunRecord") -> List[str]:
        """ Gives the outputs whose digests differ from another record """
        names = sorted(set(self._outputs) | set(other.outputs))
        return [name for name in names
                if self._outputs.get(name) != other.outputs.get(name)]

    def to_dict(self) -> Dict[str, Any]:
        """ Gives the record as a dictionary """
        return {"command": self._command,
                "version": self._version,
                "created": self._created,
                "scenario": self._scenario,
                "scenario_digest": self.scenario_digest,
                "arguments": self._arguments,
                "inputs": self._inputs,
                "outputs": self._outputs,
                "results": self._results}

    def write(self, directory) -> Path:
        """ Writes the record as run.json in a directory """
        path = Path(directory) / RECORD_NAME
        write_json(path, self.to_dict())
        return path

    @classmethod
    def read(cls, path) -> "RunRecord":
        """ Reads a record, from its file or from its directory """
        path = Path(path)
        if path.is_dir():
            path = path / RECORD_NAME
        with open(path, encoding="utf-8") as file:
            values = json.load(file)
        return cls(values["command"], values["scenario"],
                   values.get("arguments", {}), values.get("outputs", {}),
                   values.get("results"), values.get("inputs"),
                   values.get("created"), values.get("version", __version__))

    def __repr__(self) -> str:
        return (f"RunRecord({self._command!r}, "
                f"scenario={self.scenario_digest[:12]}, "
                f"outputs={sorted(self._outputs)})")
