"""The sifting loop and the outer IMF-extraction loop.

One sifting pass subtracts a local-mean curve from the working series:
h <- h - m. A pass's change is measured by the configured norm of m
(identically ||h_i - h_{i+1}||); once it falls below the threshold the
working series is declared an intrinsic mode function. The outer loop
subtracts each IMF from the running remainder until the remainder has too
few extrema to sift.
"""

from dataclasses import dataclass

import numpy as np

from .envelope import (BOUNDARIES, classical_sifting_curve,
                       hybrid_sifting_curve, midpoint_sifting_curve)
from .errors import ResidualSignal
from .extrema import find_extrema
from .signals import Signal
from .validation import choice, positive_int, require

__all__ = [
    "SiftConfig",
    "Imf",
    "Decomposition",
    "sift_once",
    "extract_imf",
    "decompose",
    "collect_sift_iterates",
]

STRATEGIES = {"classical", "midpoint", "hybrid"}
NORMS = {"rms", "sup"}
EPSILON_MODES = {"relative", "absolute"}

_CURVES = {
    "classical": classical_sifting_curve,
    "midpoint": midpoint_sifting_curve,
    "hybrid": hybrid_sifting_curve,
}


@dataclass(frozen=True)
class SiftConfig:
    """Sifting parameters.

    epsilon_mode "relative" scales the threshold by the rms of the series
    at the start of each extraction (the default); "absolute" uses epsilon
    as-is. refine_extrema moves knots to parabola-vertex positions before
    curve construction, which keeps the discrete operator faithful to its
    continuous-time behaviour.
    """

    strategy: str = "midpoint"
    epsilon: float = 1e-3
    norm: str = "rms"
    max_sift_iterations: int = 200
    max_imfs: int = 12
    boundary: str = "mirror"
    epsilon_mode: str = "relative"
    refine_extrema: bool = True

    def __post_init__(self):
        choice(self.strategy, STRATEGIES, "strategy")
        choice(self.norm, NORMS, "norm")
        choice(self.boundary, BOUNDARIES, "boundary")
        choice(self.epsilon_mode, EPSILON_MODES, "epsilon_mode")
        require(self.epsilon > 0, f"epsilon must be > 0, got {self.epsilon}")
        positive_int(self.max_sift_iterations, "max_sift_iterations")
        positive_int(self.max_imfs, "max_imfs")


@dataclass(frozen=True)
class Imf:
    """One intrinsic mode function with its convergence record."""

    samples: np.ndarray
    iterations_used: int
    converged: bool
    strategy: str


@dataclass(frozen=True)
class Decomposition:
    """Ordered IMFs, the final residual, and per-IMF norm traces."""

    imfs: tuple
    residual: Signal
    traces: tuple

    def reconstruct(self):
        total = self.residual.samples.copy()
        for imf in self.imfs:
            total += imf.samples
        return total


def _norm(values, kind):
    if kind == "sup":
        return float(np.max(np.abs(values)))
    return float(np.sqrt(np.mean(np.square(values))))


def _curve(signal, strategy, boundary, refine):
    extrema = find_extrema(signal, refine=refine,
                           circular=(boundary == "periodic"))
    return _CURVES[strategy](signal, extrema, boundary)


def sift_once(h, strategy, boundary="mirror", refine=True):
    """One sifting pass; returns (h_next, curve) with h_next = h - curve."""
    choice(strategy, STRATEGIES, "strategy")
    curve = _curve(h, strategy, boundary, refine)
    return h.with_samples(h.samples - curve.values), curve


def _sift_steps(h, config):
    """Yield (h_next, curve, norm_of_change) until the iteration cap."""
    for _ in range(config.max_sift_iterations):
        curve = _curve(h, config.strategy, config.boundary,
                       config.refine_extrema)
        h = h.with_samples(h.samples - curve.values)
        yield h, curve, _norm(curve.values, config.norm)


def _threshold(h, config):
    if config.epsilon_mode == "absolute":
        return config.epsilon
    return config.epsilon * _norm(h.samples, "rms")


def extract_imf(h, config):
    """Sift h until the change-norm drops below the threshold.

    Returns (Imf, trace). Raises ResidualSignal when h cannot seed a
    single pass. If the extrema supply is exhausted mid-loop, the current
    series is returned as an unconverged IMF rather than discarded: the
    completed passes already changed it, and dropping them would lose
    information.
    """
    threshold = _threshold(h, config)
    trace = []
    current = h
    try:
        for current, _, change in _sift_steps(h, config):
            trace.append(change)
            if change < threshold:
                return (Imf(current.samples, len(trace), True,
                            config.strategy), trace)
    except ResidualSignal:
        if not trace:
            raise
        return Imf(current.samples, len(trace), False, config.strategy), trace
    return Imf(current.samples, len(trace), False, config.strategy), trace


def collect_sift_iterates(h, config):
    """The h-series [h_0, h_1, ...] of one extraction, for filter-parameter
    analysis; replays exactly the arithmetic of extract_imf."""
    threshold = _threshold(h, config)
    iterates = [h.samples]
    try:
        for current, _, change in _sift_steps(h, config):
            iterates.append(current.samples)
            if change < threshold:
                break
    except ResidualSignal:
        if len(iterates) == 1:
            raise
    return iterates


def decompose(signal, config=SiftConfig()):
    """Full EMD: extract IMFs from the running remainder until it has too
    few extrema or max_imfs is reached."""
    require(len(signal) >= 4, f"need at least 4 samples, got {len(signal)}")
    remainder = signal
    imfs = []
    traces = []
    for _ in range(config.max_imfs):
        try:
            imf, trace = extract_imf(remainder, config)
        except ResidualSignal:
            break
        imfs.append(imf)
        traces.append(tuple(trace))
        remainder = remainder.with_samples(remainder.samples - imf.samples)
    return Decomposition(tuple(imfs), remainder, tuple(traces))
