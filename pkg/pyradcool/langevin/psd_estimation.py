"""
Estimation of power spectral densities from time series
"""

import math
from typing import Dict, Optional, Tuple

import numpy as np
from scipy.optimize import curve_fit
from scipy.signal import welch

from ..physics.domain_error import PreconditionError
from ..physics.spectrum import Spectrum
from ..estimation.fit_report import FitReport

MIN_SEGMENTS = 8
MAX_SEGMENT_LENGTH = 4096


def segment_count(samples_count: int, segment_length: int) -> int:
    """ Gives the number of half-overlapping segments """
    if segment_length > samples_count:
        return 0
    return (samples_count - segment_length) // (segment_length // 2) + 1


def default_segment_length(samples_count: int) -> int:
    """ Gives a power of two leaving at least 8 segments, at most 4096 """
    length = 2 ** int(math.log2(max(samples_count // 4, 2)))
    return min(length, MAX_SEGMENT_LENGTH)


def estimate_psd(samples: np.ndarray, dt: float,
                 segment_length: Optional[int] = None,
                 quantity: str = "quanta*s", label: str = "s_aa") -> Spectrum:
    """ Estimates a two-sided power spectral density with Welch's method

    Half-overlapping Hann segments are averaged. The density is per Hz, so
    its integral over the frequency (equivalently, 1/2π times the integral
    over the angular frequency) is the variance of the samples.

    Parameters
    ----------
    samples : numpy.ndarray
        The complex time series
    dt : float
        The sampling interval, in s
    segment_length : int, optional
        The number of samples per segment
    quantity : str, optional
        The quantity of the returned spectrum
    label : str, optional
        The label of the returned spectrum

    Returns
    ----------
    psd : :class:`~pyradcool.physics.Spectrum`
        The density on a grid of frequencies centred on 0, in Hz

    Raises
    ----------
    PreconditionError
        If fewer than 8 segments fit in the samples
    """
    samples = np.asarray(samples)
    if segment_length is None:
        segment_length = default_segment_length(samples.size)
    segments = segment_count(samples.size, segment_length)
    if segments < MIN_SEGMENTS:
        raise PreconditionError(
            f"The PSD needs at least {MIN_SEGMENTS} segments, got {segments}")
    frequencies, density = welch(samples, fs=1.0 / dt, window="hann",
                                 nperseg=segment_length,
                                 noverlap=segment_length // 2,
                                 detrend=False, return_onesided=False,
                                 scaling="density")
    frequencies = np.fft.fftshift(frequencies)
    density = np.fft.fftshift(np.real(density))
    return Spectrum(frequencies, density, quantity=quantity, label=label)


def _lorentzian(frequencies, peak, center, fwhm, offset):
    return offset + peak / (1 + ((frequencies - center) / (fwhm / 2)) ** 2)


def fit_lorentzian(spectrum: Spectrum, half_width: Optional[float] = None,
                   with_offset: bool = False) -> Tuple[Dict[str, float],
                                                       FitReport]:
    """ Fits a Lorentzian peak (or dip) to a spectrum

    Parameters
    ----------
    spectrum : :class:`~pyradcool.physics.Spectrum`
        The spectrum
    half_width : float, optional
        Only the points within this distance of the extremum are fitted, in
        the units of the grid
    with_offset : bool, optional
        Whether a constant background is fitted too

    Returns
    ----------
    values : dict
        peak (height above the background), center, fwhm and offset
    report : :class:`~pyradcool.estimation.FitReport`
        The fit report
    """
    frequencies = spectrum.frequencies
    values = spectrum.values
    offset = float(np.median(values)) if with_offset else 0.0
    excess = values - offset
    index = int(np.argmax(np.abs(excess)))
    center = frequencies[index]
    if half_width is not None:
        mask = np.abs(frequencies - center) <= half_width
        frequencies, values, excess = frequencies[mask], values[mask], \
            excess[mask]
        index = int(np.argmax(np.abs(excess)))
    peak = float(excess[index])
    above = np.nonzero(np.abs(excess) >= abs(peak) / 2)[0]
    fwhm = max(frequencies[above[-1]] - frequencies[above[0]],
               float(np.min(np.diff(frequencies))))
    if with_offset:
        def model(x, height, position, width, background):
            return _lorentzian(x, height, position, width, background)
        start = [peak, center, fwhm, offset]
    else:
        def model(x, height, position, width):
            return _lorentzian(x, height, position, width, 0.0)
        start = [peak, center, fwhm]
    parameters, covariance, info, message, status = curve_fit(
        model, frequencies, values, p0=start, full_output=True)
    names = ["peak", "center", "fwhm", "offset"][:len(parameters)]
    fitted = dict(zip(names, parameters.tolist()))
    fitted["fwhm"] = abs(fitted["fwhm"])
    fitted.setdefault("offset", 0.0)
    residual = values - model(frequencies, *parameters)
    report = FitReport(dict(zip(names, parameters.tolist())), covariance,
                       math.sqrt(float(np.mean(residual ** 2))),
                       info["nfev"], status in (1, 2, 3, 4), message)
    return fitted, report
