"""
Fits of the resonator response and of the distorted noise lineshape
"""

import logging
import math
from typing import Optional, Tuple, Dict

import numpy as np
from scipy.optimize import least_squares

from ..physics.domain_error import PreconditionError, PhysicalDomainError
from ..physics.resonator_params import ResonatorParams
from ..physics.spectrum import Spectrum
from .fit_report import FitReport

logger = logging.getLogger(__name__)

MIN_PROBE_POINTS = 30
MIN_PROBE_SPAN = 5.0
PARAMETER_NAMES = ("f0", "kappa_i", "kappa_e")


def _initial_guess(frequencies, values):
    """ Gives f0, κᵢ, κₑ from the shape of the response

    The resonance sits at the minimum of |S11|, the linewidth is the width
    at half depth of 1 - |S11|² and the depth 4κᵢκₑ/κ² gives κₑ/κ up to the
    choice of a root. The phase of S11 at the resonance lifts it:
    Re S11(ω₀) < 0 for an overcoupled resonator.
    """
    index = int(np.argmin(np.abs(values)))
    f0_guess = frequencies[index]
    depth_curve = 1.0 - np.abs(values) ** 2
    depth = float(np.clip(depth_curve[index], 0.0, 1.0))
    above = np.nonzero(depth_curve >= depth / 2)[0]
    step = float(np.min(np.diff(frequencies)))
    kappa_guess = max(frequencies[above[-1]] - frequencies[above[0]], step)
    root = math.sqrt(1.0 - depth)
    if values[index].real < 0:
        kappa_e = kappa_guess * (1 + root) / 2
    else:
        kappa_e = kappa_guess * (1 - root) / 2
    kappa_i = kappa_guess - kappa_e
    # Keep both rates away from the boundary of the domain
    floor = 1e-3 * kappa_guess
    return f0_guess, kappa_guess, max(kappa_i, floor), max(kappa_e, floor)


def _model(scaled, params):
    center, kappa_i, kappa_e = params
    denominator = (kappa_i + kappa_e) / 2 + 1j * (scaled - center)
    return 1.0 - kappa_e / denominator, denominator


# pylint: disable=too-many-locals
def fit_reflection(probe: Spectrum,
                   reference_frequency: Optional[float] = None,
                   max_iterations: int = 1000) \
        -> Tuple[ResonatorParams, FitReport]:
    """ Fits the reflection coefficient of a weak coherent probe

    The model is S11(f) = 1 - κₑ / (κ/2 + i(f - f0)). The fit is a damped
    (Levenberg-Marquardt) least squares on the real and imaginary parts,
    weighted by the inverse of the per-point sigma when present. The
    parameters are scaled by the initial linewidth.

    Parameters
    ----------
    probe : :class:`~pyradcool.physics.Spectrum`
        The complex response
    reference_frequency : float, optional
        The frequency added to a detuning grid to give f0
    max_iterations : int, optional
        The cap on function evaluations

    Returns
    ----------
    res : :class:`~pyradcool.physics.ResonatorParams`
        The fitted resonator
    report : :class:`~pyradcool.estimation.FitReport`
        The parameters (f0, kappa_i, kappa_e), their covariance and the
        convergence flag

    Raises
    ----------
    PreconditionError
        If the probe is not complex, has fewer than 30 points or spans
        fewer than 5 estimated linewidths
    """
    if not probe.is_complex:
        raise PreconditionError("The probe must be a complex response")
    if len(probe) < MIN_PROBE_POINTS:
        raise PreconditionError(
            f"The probe needs at least {MIN_PROBE_POINTS} points, "
            f"got {len(probe)}")
    frequencies = probe.angular_frequencies() / (2 * math.pi)
    values = probe.values
    f0_guess, kappa_guess, kappa_i, kappa_e = _initial_guess(frequencies,
                                                             values)
    span = frequencies[-1] - frequencies[0]
    if span < MIN_PROBE_SPAN * kappa_guess:
        raise PreconditionError(
            f"The probe spans {span / kappa_guess:.2f} linewidths, at least "
            f"{MIN_PROBE_SPAN} are needed")
    logger.debug("Initial guess f0=%g, kappa_i=%g, kappa_e=%g",
                 f0_guess, kappa_i, kappa_e)
    scaled = (frequencies - f0_guess) / kappa_guess
    if probe.sigma is not None:
        weights = 1.0 / np.maximum(probe.sigma, np.finfo(float).tiny)
    else:
        weights = np.ones(len(probe))

    def residuals(params):
        model, _ = _model(scaled, params)
        difference = (values - model) * weights
        return np.concatenate([difference.real, difference.imag])

    def jacobian(params):
        _, denominator = _model(scaled, params)
        kappa_e_scaled = params[2]
        squared = denominator ** 2
        derivatives = [-1j * kappa_e_scaled / squared,
                       kappa_e_scaled / (2 * squared),
                       -1.0 / denominator + kappa_e_scaled / (2 * squared)]
        columns = [-derivative * weights for derivative in derivatives]
        return np.column_stack([np.concatenate([column.real, column.imag])
                                for column in columns])

    start = np.array([0.0, kappa_i / kappa_guess, kappa_e / kappa_guess])
    result = least_squares(residuals, start, jac=jacobian, method="lm",
                           ftol=1e-12, xtol=1e-12, gtol=1e-12,
                           max_nfev=max_iterations)
    converged = bool(result.success)
    fitted = result.x * kappa_guess
    fitted[0] += f0_guess
    if not probe.absolute:
        if reference_frequency is None:
            raise PreconditionError("A detuning grid needs a reference "
                                    "frequency to give f0")
        fitted[0] += reference_frequency
    jac = result.jac
    try:
        covariance = np.linalg.inv(jac.T @ jac)
    except np.linalg.LinAlgError:
        logger.warning("Singular Jacobian, the covariance is not available")
        covariance = np.full((3, 3), np.nan)
        converged = False
    if probe.sigma is None:
        dof = max(2 * len(probe) - 3, 1)
        covariance = covariance * np.sum(result.fun ** 2) / dof
    covariance = covariance * kappa_guess ** 2
    if fitted[1] < 0 or fitted[2] < 0:
        logger.warning("The fit gave a negative rate (kappa_i=%g, "
                       "kappa_e=%g), clipped to 0", fitted[1], fitted[2])
        fitted[1:] = np.clip(fitted[1:], 0, None)
        converged = False
    if not converged:
        logger.warning("The reflection fit did not converge: %s",
                       result.message)
    model, _ = _model(scaled, result.x)
    residual_norm = math.sqrt(float(np.mean(np.abs(values - model) ** 2)))
    report = FitReport(dict(zip(PARAMETER_NAMES, fitted.tolist())),
                       covariance, residual_norm, result.nfev, converged,
                       result.message)
    try:
        res = ResonatorParams(*fitted)
    except PhysicalDomainError as error:
        raise PreconditionError(f"The fit gave no valid resonator: {error}") \
            from error
    return res, report


def fit_fano_spectrum(s_out: Spectrum, s_out_off: Spectrum,
                      res: ResonatorParams,
                      n_in: Optional[float] = None) -> Tuple[Dict[str, float],
                                                             FitReport]:
    """ Fits the difference spectrum with a leakage-aware lineshape

    With a leakage ε e^{iφ} added to the reflection coefficient, the
    difference between the on and the off spectrum is
    κᵢκₑ [Δn̄ - (κ/κᵢ)(n̄_in + 1/2) ε cos φ] / ((κ/2)² + δ²)
    + 2 (n̄_in + 1/2) κₑ ε sin φ δ / ((κ/2)² + δ²).
    The symmetric part gives an apparent Δn̄ and the antisymmetric part the
    quadrature of the leakage. The in-phase part only shows in the level of
    the off spectrum, |1 + ε e^{iφ}|² (n̄_in + 1/2), so it needs n̄_in. This
    is a diagnostic: the occupancy extraction itself does not rely on the
    lineshape.

    Parameters
    ----------
    s_out : :class:`~pyradcool.physics.Spectrum`
        The on-resonance spectrum, in quanta
    s_out_off : :class:`~pyradcool.physics.Spectrum`
        The off-resonance spectrum, in quanta, on the same grid
    res : :class:`~pyradcool.physics.ResonatorParams`
        The resonator
    n_in : float, optional
        The occupancy of the external bath. Without it, the off level is
        taken as n̄_in + 1/2 and the in-phase leakage is not resolved.

    Returns
    ----------
    values : dict
        delta_n, apparent_delta_n, epsilon and phase
    report : :class:`~pyradcool.estimation.FitReport`
        The linear fit of (apparent_delta_n, leakage_quadrature)
    """
    s_out.check_same_grid(s_out_off)
    off_level = float(np.mean(s_out_off.values))
    if n_in is None:
        n_in = max(off_level - 0.5, 0.0)
    detunings = s_out.detunings(res)
    denominator = (res.kappa / 2) ** 2 + detunings ** 2
    design = np.column_stack([
        res.kappa_i * res.kappa_e / denominator,
        2 * (n_in + 0.5) * res.kappa_e * detunings / denominator])
    target = s_out.values - s_out_off.values
    variance = np.zeros(len(s_out))
    for spectrum in (s_out, s_out_off):
        if spectrum.sigma is not None:
            variance = variance + spectrum.sigma ** 2
    weighted = bool(np.all(variance > 0))
    weights = 1.0 / np.sqrt(variance) if weighted else np.ones(len(s_out))
    solution, _, rank, _ = np.linalg.lstsq(design * weights[:, None],
                                           target * weights, rcond=None)
    residual = target - design @ solution
    covariance = np.linalg.pinv((design * weights[:, None] ** 2).T @ design)
    if not weighted:
        dof = max(len(s_out) - 2, 1)
        covariance = covariance * np.sum(residual ** 2) / dof
    apparent, quadrature = solution.tolist()
    ratio = off_level / (n_in + 0.5)
    in_phase = math.sqrt(max(ratio - quadrature ** 2, 0.0)) - 1.0
    delta_n = apparent + res.kappa / res.kappa_i * (n_in + 0.5) * in_phase
    values = {"delta_n": delta_n,
              "apparent_delta_n": apparent,
              "epsilon": math.hypot(in_phase, quadrature),
              "phase": math.atan2(quadrature, in_phase)}
    report = FitReport({"apparent_delta_n": apparent,
                        "leakage_quadrature": quadrature},
                       covariance,
                       math.sqrt(float(np.mean(residual ** 2))),
                       1, rank == 2)
    return values, report
