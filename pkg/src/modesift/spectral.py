"""Spectral tools: periodogram, single-frequency projection amplitudes,
first-order high-pass filter fitting, and log-log slope estimation."""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFitError
from .validation import as_float_array, require

__all__ = [
    "Spectrum",
    "periodogram",
    "ProjectionAmplitudes",
    "project_fourier",
    "FilterFit",
    "estimate_alpha",
    "fit_filter_alphas",
    "SlopeFit",
    "fit_spectral_slope",
]


@dataclass(frozen=True)
class Spectrum:
    """One-sided power spectrum on the discrete frequency grid
    omega_j = 2*pi*j / (n*dt), j = 0..floor(n/2)."""

    omegas: np.ndarray
    power: np.ndarray
    bin_width: float
    n: int
    dt: float

    def energy(self):
        """Total spectral energy with one-sided weights (DC once, interior
        bins twice, Nyquist once when n is even); equals the time-domain
        energy sum((y - mean)^2) * dt of the analysed series."""
        p = self.power
        if self.n % 2 == 0:
            return float(p[0] + 2.0 * np.sum(p[1:-1]) + p[-1])
        return float(p[0] + 2.0 * np.sum(p[1:]))

    def peak_omega(self):
        return float(self.omegas[int(np.argmax(self.power))])


def periodogram(signal):
    """Rectangular-window periodogram of the mean-removed series.

    power[j] = |rfft(y - mean)[j]|^2 * dt / n, so the one-sided weighted
    sum over bins reproduces the time-domain energy exactly.
    """
    n = len(signal)
    require(n >= 4, f"need at least 4 samples for a periodogram, got {n}")
    y = signal.samples - np.mean(signal.samples)
    coeffs = np.fft.rfft(y)
    power = (coeffs.real ** 2 + coeffs.imag ** 2) * (signal.dt / n)
    omegas = 2.0 * np.pi * np.fft.rfftfreq(n, signal.dt)
    return Spectrum(omegas, power, 2.0 * np.pi / (n * signal.dt), n,
                    signal.dt)


@dataclass(frozen=True)
class ProjectionAmplitudes:
    """Trapezoid projections of a series on cos/sin at one frequency over
    one fundamental period: a = integral y*cos(omega*t) dt, likewise b."""

    omega: float
    cosine: float
    sine: float

    @property
    def amplitude(self):
        return float(np.hypot(self.cosine, self.sine))


def project_fourier(signal, omega, period):
    """Project a series on cos(omega*t)/sin(omega*t) over [t0, t0+period].

    The sample window must cover a full period; the integrals use the
    trapezoid rule on the covered samples.
    """
    require(omega > 0, f"omega must be > 0, got {omega}")
    require(period > 0, f"period must be > 0, got {period}")
    t = signal.times
    tau = t - t[0]
    mask = tau <= period * (1.0 + 1e-12)
    require(tau[-1] >= period * (1.0 - 1e-12),
            "sample window is shorter than one period")
    tt = t[mask]
    yy = signal.samples[mask]
    cosine = float(np.trapezoid(yy * np.cos(omega * tt), tt))
    sine = float(np.trapezoid(yy * np.sin(omega * tt), tt))
    return ProjectionAmplitudes(float(omega), cosine, sine)


@dataclass(frozen=True)
class FilterFit:
    """Least-squares fit of y_n = alpha * (y_{n-1} + x_n - x_{n-1})."""

    alpha: float
    residual_rms: float
    pairs: int


def estimate_alpha(x, y):
    """Fit the high-pass recurrence y_n = alpha*(y_{n-1} + x_n - x_{n-1}).

    With z_n = y_{n-1} + x_n - x_{n-1} the closed form is
    alpha = sum(y_n * z_n) / sum(z_n^2). A y that is identically zero is
    satisfied by any alpha and reports 0.0; z identically zero with y
    nonzero has no fit at all and raises DegenerateFitError.
    """
    x = as_float_array(x, "x", min_length=2)
    y = as_float_array(y, "y", min_length=2)
    require(len(x) == len(y),
            f"x and y must have equal length, got {len(x)} and {len(y)}")
    z = y[:-1] + x[1:] - x[:-1]
    target = y[1:]
    denom = float(np.dot(z, z))
    if denom == 0.0:
        if np.all(y == 0.0):
            return FilterFit(0.0, 0.0, len(z))
        raise DegenerateFitError(
            "filter input y_{n-1} + x_n - x_{n-1} is identically zero; "
            "alpha is unidentifiable")
    alpha = float(np.dot(target, z)) / denom
    residual = target - alpha * z
    return FilterFit(alpha, float(np.sqrt(np.mean(residual ** 2))), len(z))


def fit_filter_alphas(iterates):
    """Fit one alpha per consecutive pair of sifting iterates.

    iterates is the h-series of a single extraction (see
    sifting.collect_sift_iterates); element i is the input and element
    i+1 the output of pass i+1.
    """
    require(len(iterates) >= 2,
            f"need at least 2 iterates, got {len(iterates)}")
    return [estimate_alpha(iterates[i], iterates[i + 1])
            for i in range(len(iterates) - 1)]


@dataclass(frozen=True)
class SlopeFit:
    """Straight-line fit of log10(power) against log10(omega)."""

    slope: float
    intercept: float
    r_squared: float
    bins_used: int


def fit_spectral_slope(spectrum, omega_min, omega_max):
    """Fit the log-log spectral slope over [omega_min, omega_max].

    Only strictly positive frequencies with strictly positive power enter
    the fit; at least 4 such bins are required.
    """
    require(omega_min > 0, f"omega_min must be > 0, got {omega_min}")
    require(omega_max > omega_min,
            f"omega_max must exceed omega_min, got [{omega_min}, {omega_max}]")
    mask = ((spectrum.omegas >= omega_min) & (spectrum.omegas <= omega_max)
            & (spectrum.power > 0.0))
    count = int(np.count_nonzero(mask))
    require(count >= 4,
            f"need at least 4 positive-power bins in band, got {count}")
    lx = np.log10(spectrum.omegas[mask])
    ly = np.log10(spectrum.power[mask])
    slope, intercept = np.polyfit(lx, ly, 1)
    fitted = slope * lx + intercept
    ss_res = float(np.sum((ly - fitted) ** 2))
    ss_tot = float(np.sum((ly - np.mean(ly)) ** 2))
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return SlopeFit(float(slope), float(intercept), r_squared, count)
