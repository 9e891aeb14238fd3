"""
Reading and writing of spectra and tables as commented CSV files
"""

import csv
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..estimation.calibration_result import REFERENCE_PLANES
from ..physics.domain_error import PreconditionError
from ..physics.spectrum import Spectrum

Header = Dict[str, str]


class DataFormatError(PreconditionError):
    """Exception raised when a data file cannot be read"""


def _number(value) -> str:
    return repr(float(value))


def write_table(path, columns: Sequence[Tuple[str, str]],
                data: Sequence[Sequence[float]],
                header: Optional[Dict[str, Any]] = None):
    """ Writes labeled columns of numbers

    The file starts with a block of ``# key = value`` lines, the last one
    giving the columns with their units, followed by the CSV rows.

    Parameters
    ----------
    path : str or pathlib.Path
        The file to write
    columns : sequence of (str, str)
        The name and the unit of each column
    data : sequence of array-like
        The values of each column, all of the same length
    header : dict, optional
        Additional metadata
    """
    data = [np.asarray(column, dtype=float) for column in data]
    if len(columns) != len(data):
        raise PreconditionError("Each column needs a name and a unit")
    if len({column.size for column in data}) > 1:
        raise PreconditionError("The columns must have the same length")
    lines = dict(header or {})
    lines["columns"] = ", ".join(f"{name} [{unit}]" for name, unit in columns)
    with open(path, "w", encoding="utf-8", newline="") as file:
        for key, value in lines.items():
            file.write(f"# {key} = {value}\n")
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow([name for name, _ in columns])
        for row in zip(*data):
            writer.writerow([_number(value) for value in row])


def read_table(path) -> Tuple[Header, Dict[str, np.ndarray]]:
    """ Reads a file written by :func:`write_table`

    Returns
    ----------
    header : dict
        The metadata, as strings
    columns : dict
        The values of each column, by name

    Raises
    ----------
    DataFormatError
        If a row is malformed
    """
    header: Header = {}
    with open(path, encoding="utf-8", newline="") as file:
        lines = file.read().splitlines()
    body = []
    for line in lines:
        if line.startswith("#"):
            key, _, value = line[1:].partition("=")
            header[key.strip()] = value.strip()
        elif line.strip():
            body.append(line)
    if not body:
        raise DataFormatError(f"{path} has no column names")
    rows = list(csv.reader(body))
    names = rows[0]
    try:
        values = np.array([[float(value) for value in row]
                           for row in rows[1:]], dtype=float)
    except ValueError as error:
        raise DataFormatError(f"{path}: {error}") from error
    values = values.reshape(-1, len(names))
    return header, {name: values[:, index]
                    for index, name in enumerate(names)}


def write_spectrum(path, spectrum: Spectrum,
                   header: Optional[Dict[str, Any]] = None):
    """ Writes one spectrum

    Complex responses get a real and an imaginary column; the per-point
    standard deviation, when present, a sigma column.

    Parameters
    ----------
    path : str or pathlib.Path
        The file to write
    spectrum : :class:`~pyradcool.physics.Spectrum`
        The spectrum
    header : dict, optional
        Additional metadata, such as the scenario digest
    """
    lines: Dict[str, Any] = {"format": "pyradcool-spectrum",
                             "label": spectrum.label,
                             "quantity": spectrum.quantity,
                             "absolute": str(spectrum.absolute).lower()}
    lines.update(header or {})
    columns = [("frequency", spectrum.unit)]
    data = [spectrum.frequencies]
    if spectrum.is_complex:
        columns += [("real", spectrum.quantity), ("imag", spectrum.quantity)]
        data += [spectrum.values.real, spectrum.values.imag]
    else:
        columns.append(("value", spectrum.quantity))
        data.append(spectrum.values)
    if spectrum.sigma is not None:
        columns.append(("sigma", spectrum.quantity))
        data.append(spectrum.sigma)
    write_table(path, columns, data, lines)


def read_spectrum(path) -> Tuple[Spectrum, Header]:
    """ Reads a file written by :func:`write_spectrum`

    Returns
    ----------
    spectrum : :class:`~pyradcool.physics.Spectrum`
        The spectrum
    header : dict
        The metadata
    """
    header, columns = read_table(path)
    if header.get("format") != "pyradcool-spectrum":
        raise DataFormatError(f"{path} is not a spectrum file")
    if "value" in columns:
        values = columns["value"]
    elif "real" in columns and "imag" in columns:
        values = columns["real"] + 1j * columns["imag"]
    else:
        raise DataFormatError(f"{path} has no value column")
    unit = header["columns"].split(",")[0].split("[")[-1].rstrip("]")
    spectrum = Spectrum(columns["frequency"], values,
                        sigma=columns.get("sigma"),
                        absolute=header.get("absolute") == "true",
                        unit=unit, quantity=header.get("quantity", "quanta"),
                        label=header.get("label", ""))
    return spectrum, header


def write_sweep(path, sweep: Sequence[Tuple[float, float, float]],
                reference_plane: str, frequency: float,
                header: Optional[Dict[str, Any]] = None):
    """ Writes the readings of a noise thermometry sweep

    Parameters
    ----------
    path : str or pathlib.Path
        The file to write
    sweep : sequence of tuple
        The (temperature, power, sigma) readings
    reference_plane : str
        The plane the bath is seen at
    frequency : float
        The frequency of the measurement, in Hz
    header : dict, optional
        Additional metadata
    """
    lines: Dict[str, Any] = {"format": "pyradcool-sweep",
                             "reference_plane": reference_plane,
                             "frequency": f"{_number(frequency)} Hz"}
    lines.update(header or {})
    data = np.array(sweep, dtype=float).reshape(-1, 3)
    write_table(path, [("temperature", "K"), ("power", "raw"),
                       ("sigma", "raw")], data.T, lines)


def read_sweep(path) -> Tuple[List[Tuple[float, float, float]], str, float]:
    """ Reads a file written by :func:`write_sweep`

    Returns
    ----------
    sweep : list of tuple
        The (temperature, power, sigma) readings
    reference_plane : str
        The plane of the sweep
    frequency : float
        The frequency of the measurement, in Hz
    """
    header, columns = read_table(path)
    if header.get("format") != "pyradcool-sweep":
        raise DataFormatError(f"{path} is not a thermometry sweep file")
    plane = header.get("reference_plane")
    if plane not in REFERENCE_PLANES:
        raise DataFormatError(f"{path} has an unknown plane {plane}")
    frequency = float(header["frequency"].split()[0])
    sweep = [(float(temperature), float(power), float(sigma))
             for temperature, power, sigma in zip(columns["temperature"],
                                                  columns["power"],
                                                  columns["sigma"])]
    return sweep, plane, frequency
