"""Sampled-signal data model, synthetic generators, detrending and CSV I/O.

A Signal is an immutable uniformly sampled real series: samples plus the
grid origin t0 and spacing dt. Everything downstream (envelopes, sifting,
spectra, PCA) consumes this one type.
"""

from dataclasses import dataclass

import numpy as np

from .errors import FormatError
from .validation import as_float_array, require

__all__ = [
    "Signal",
    "ToneSpec",
    "NoiseSpec",
    "generate_multitone",
    "add_noise",
    "detrend_mean",
    "load_csv",
    "save_csv",
]


@dataclass(frozen=True, eq=False)
class Signal:
    """Uniformly sampled series; time of sample k is t0 + k*dt."""

    samples: np.ndarray
    t0: float = 0.0
    dt: float = 1.0

    def __post_init__(self):
        # copy before freezing so a caller-owned array is left writable
        arr = as_float_array(self.samples, "samples", min_length=2).copy()
        arr.flags.writeable = False
        object.__setattr__(self, "samples", arr)
        object.__setattr__(self, "t0", float(self.t0))
        object.__setattr__(self, "dt", float(self.dt))
        require(self.dt > 0, f"dt must be positive, got {self.dt}")

    def __len__(self):
        return self.samples.size

    @property
    def times(self):
        return self.t0 + np.arange(self.samples.size) * self.dt

    def with_samples(self, samples):
        """Same grid, new sample values."""
        return Signal(samples, self.t0, self.dt)


@dataclass(frozen=True)
class ToneSpec:
    """One cosine component: amplitude * cos(omega * t + phase)."""

    amplitude: float
    omega: float
    phase: float = 0.0

    def __post_init__(self):
        require(np.isfinite(self.omega) and self.omega >= 0,
                f"omega must be finite and >= 0, got {self.omega}")


@dataclass(frozen=True)
class NoiseSpec:
    """Zero-mean Gaussian noise: standard deviation and generator seed."""

    sigma: float
    seed: int = 0

    def __post_init__(self):
        require(self.sigma >= 0, f"sigma must be >= 0, got {self.sigma}")


def generate_multitone(tones, t0, dt, n):
    """Sum of cosines sampled on the grid t0 + k*dt, k = 0..n-1.

    samples[k] = sum_j amplitude_j * cos(omega_j * t_k + phase_j)
    """
    require(dt > 0, f"dt must be positive, got {dt}")
    require(isinstance(n, (int, np.integer)) and n >= 2,
            f"n must be an integer >= 2, got {n}")
    t = float(t0) + np.arange(int(n)) * float(dt)
    samples = np.zeros(int(n))
    for tone in tones:
        samples += tone.amplitude * np.cos(tone.omega * t + tone.phase)
    return Signal(samples, float(t0), float(dt))


def add_noise(signal, noise):
    """Add seeded Gaussian noise; sigma = 0 returns the input unchanged."""
    if noise.sigma == 0:
        return signal
    rng = np.random.default_rng(noise.seed)
    return signal.with_samples(
        signal.samples + rng.normal(0.0, noise.sigma, signal.samples.size)
    )


def detrend_mean(signal):
    """Remove the arithmetic mean; returns (detrended, mean)."""
    mean = float(np.mean(signal.samples))
    return signal.with_samples(signal.samples - mean), mean


# ---------------------------------------------------------------------------
# CSV I/O: two columns time,value; '#' comments and an optional header
# allowed; values written with 17 significant digits (exact float64
# round-trip).

_SPACING_RTOL = 1e-6


def save_csv(signal, path):
    times = signal.times
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("time,value\n")
        for t, v in zip(times, signal.samples):
            fh.write(f"{t:.17g},{v:.17g}\n")


def _parse_rows(path):
    rows = []
    header_seen = False
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(",")
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: expected two columns, got {line!r}")
            try:
                rows.append((float(parts[0]), float(parts[1])))
            except ValueError:
                # allow one non-numeric header row before any data
                if not rows and not header_seen and not _is_numeric(parts[0]):
                    header_seen = True
                    continue
                raise FormatError(f"line {lineno}: unparsable row {line!r}") from None
    return rows


def _is_numeric(text):
    try:
        float(text)
        return True
    except ValueError:
        return False


def load_csv(path):
    """Read a time,value CSV into a Signal; grid must be uniform."""
    rows = _parse_rows(path)
    if not rows:
        raise FormatError(f"{path}: no samples")
    if len(rows) < 2:
        raise FormatError(f"{path}: need at least 2 samples, got {len(rows)}")
    times = np.array([r[0] for r in rows])
    values = np.array([r[1] for r in rows])
    dt = times[1] - times[0]
    if dt <= 0:
        raise FormatError("row 2: times must be strictly increasing")
    steps = np.diff(times)
    bad = np.nonzero(np.abs(steps - dt) > _SPACING_RTOL * abs(dt))[0]
    if bad.size:
        row = int(bad[0]) + 2  # 1-based data row of the offending time
        raise FormatError(
            f"row {row}: non-uniform spacing (step {steps[bad[0]]:g}, expected {dt:g})"
        )
    return Signal(values, float(times[0]), float(dt))
