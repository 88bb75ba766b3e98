"""Side-by-side strategy comparison on one input signal.

All strategies decompose the same in-memory samples; the report records
per-IMF iteration counts, convergence flags, periodogram peaks, and any
"ghost" peaks — local spectral maxima above 1% of the global maximum
that sit more than one frequency bin away from every generator tone.
"""

from dataclasses import dataclass, replace

import numpy as np

from .sifting import decompose, sift_once
from .spectral import periodogram, project_fourier
from .validation import require

__all__ = [
    "GHOST_THRESHOLD",
    "find_spectral_peaks",
    "ghost_peaks",
    "ImfSpectralSummary",
    "StrategyResult",
    "ProjectionPair",
    "CompareReport",
    "compare_strategies",
    "single_sift_projections",
]

GHOST_THRESHOLD = 0.01


def find_spectral_peaks(spectrum, threshold_ratio=GHOST_THRESHOLD):
    """Indices of interior local maxima of the power spectrum exceeding
    threshold_ratio times the global maximum."""
    p = spectrum.power
    if len(p) < 3:
        return np.array([], dtype=int)
    floor = threshold_ratio * float(np.max(p))
    interior = ((p[1:-1] > p[:-2]) & (p[1:-1] > p[2:])
                & (p[1:-1] > floor))
    return np.flatnonzero(interior) + 1


def ghost_peaks(spectrum, tone_omegas, threshold_ratio=GHOST_THRESHOLD):
    """Frequencies of peaks not within one bin of any generator tone."""
    idx = find_spectral_peaks(spectrum, threshold_ratio)
    if idx.size == 0:
        return np.array([])
    omegas = spectrum.omegas[idx]
    if len(tone_omegas) == 0:
        return omegas
    tones = np.asarray(tone_omegas, dtype=float)
    distance = np.min(np.abs(omegas[:, np.newaxis] - tones[np.newaxis, :]),
                      axis=1)
    return omegas[distance > spectrum.bin_width]


@dataclass(frozen=True)
class ImfSpectralSummary:
    """Spectral fingerprint of one extracted IMF."""

    iterations: int
    converged: bool
    peak_omega: float
    peak_omegas: tuple
    ghost_omegas: tuple


@dataclass(frozen=True)
class StrategyResult:
    strategy: str
    imfs: tuple
    decomposition: object

    @property
    def total_iterations(self):
        return sum(s.iterations for s in self.imfs)


@dataclass(frozen=True)
class ProjectionPair:
    """Single-sift projections of one strategy's first pass: amplitude at
    the fast probe tone and at the slow probe tone."""

    strategy: str
    fast: object
    slow: object

    @property
    def ratio(self):
        """Slow-tone leakage relative to the fast-tone capture."""
        return self.slow.amplitude / self.fast.amplitude


@dataclass(frozen=True)
class CompareReport:
    results: tuple
    tone_omegas: tuple
    projections: tuple = ()

    def result(self, strategy):
        for entry in self.results:
            if entry.strategy == strategy:
                return entry
        raise KeyError(strategy)


def _summarize(decomposition, tone_omegas):
    summaries = []
    for imf, trace in zip(decomposition.imfs, decomposition.traces):
        signal = decomposition.residual.with_samples(imf.samples)
        spectrum = periodogram(signal)
        peak_idx = find_spectral_peaks(spectrum)
        ghosts = () if tone_omegas is None else tuple(
            ghost_peaks(spectrum, tone_omegas))
        summaries.append(ImfSpectralSummary(
            iterations=imf.iterations_used,
            converged=imf.converged,
            peak_omega=spectrum.peak_omega(),
            peak_omegas=tuple(spectrum.omegas[peak_idx]),
            ghost_omegas=ghosts,
        ))
    return tuple(summaries)


def compare_strategies(signal, config, tone_omegas=None,
                       strategies=("classical", "midpoint")):
    """Decompose one signal under each strategy and summarize.

    tone_omegas are the generator frequencies used for ghost matching;
    pass None when they are unknown (ghost lists are then empty rather
    than flagging every peak).
    """
    require(len(strategies) >= 1, "need at least one strategy")
    results = []
    for strategy in strategies:
        decomposition = decompose(signal, replace(config, strategy=strategy))
        results.append(StrategyResult(
            strategy=strategy,
            imfs=_summarize(decomposition, tone_omegas),
            decomposition=decomposition,
        ))
    return CompareReport(
        results=tuple(results),
        tone_omegas=tuple(tone_omegas) if tone_omegas is not None else (),
    )


def single_sift_projections(signal, probe_omegas, period,
                            boundary="periodic",
                            strategies=("classical", "midpoint")):
    """One sifting pass per strategy, projected on the two probe tones.

    probe_omegas is (fast, slow); an efficient pass keeps the fast tone
    (amplitude near the full-period projection of that tone) and sheds
    the slow one, so lower ratio = cleaner separation.
    """
    require(len(probe_omegas) == 2,
            f"need exactly 2 probe frequencies, got {len(probe_omegas)}")
    fast, slow = probe_omegas
    pairs = []
    for strategy in strategies:
        sifted, _ = sift_once(signal, strategy, boundary=boundary)
        pairs.append(ProjectionPair(
            strategy=strategy,
            fast=project_fourier(sifted, fast, period),
            slow=project_fourier(sifted, slow, period),
        ))
    return tuple(pairs)
