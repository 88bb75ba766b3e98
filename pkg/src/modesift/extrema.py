"""Extrema detection with plateau handling and parabolic refinement.

An interior sample is a maximum when it exceeds both neighbours; a plateau
(run of equal values bracketed by lower values) yields one maximum at the
plateau midpoint, index rounded down. Endpoints are never extrema. The
circular mode treats the series as one exact period (samples[0] ==
samples[-1]) and detects extrema on the fundamental domain with wraparound,
so an extremum sitting at t = t0 is found.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import ValidationError

__all__ = ["Extremum", "ExtremaSet", "find_extrema"]


class Extremum(NamedTuple):
    index: int
    t: float
    value: float


@dataclass(frozen=True)
class ExtremaSet:
    """Located maxima and minima; t/value may carry refined positions."""

    maxima: tuple
    minima: tuple

    @property
    def max_times(self):
        return np.array([e.t for e in self.maxima])

    @property
    def max_values(self):
        return np.array([e.value for e in self.maxima])

    @property
    def min_times(self):
        return np.array([e.t for e in self.minima])

    @property
    def min_values(self):
        return np.array([e.value for e in self.minima])

    def merged(self):
        """All extrema sorted by time, with kind tags (+1 max, -1 min)."""
        tagged = [(e.t, e.value, +1) for e in self.maxima]
        tagged += [(e.t, e.value, -1) for e in self.minima]
        tagged.sort(key=lambda item: item[0])
        return tagged

    def alternates(self):
        kinds = [kind for _, _, kind in self.merged()]
        return all(a != b for a, b in zip(kinds, kinds[1:]))


def _extrema_indices(y):
    """Vectorized interior extrema with the plateau-midpoint rule."""
    slopes = np.sign(np.diff(y))
    nz = np.flatnonzero(slopes)
    if nz.size < 2:
        return np.array([], int), np.array([], int)
    runs = slopes[nz]
    # a transition rise->fall at compressed position j brackets the plateau
    # samples nz[j]+1 .. nz[j+1]; its midpoint (rounded down) is the extremum
    mids = (nz[:-1] + 1 + nz[1:]) // 2
    max_mask = (runs[:-1] > 0) & (runs[1:] < 0)
    min_mask = (runs[:-1] < 0) & (runs[1:] > 0)
    return mids[max_mask], mids[min_mask]


def _extrema_indices_circular(y):
    """Plateau-aware extrema over the fundamental domain of a periodic
    series (y[0] == y[-1]); indices refer to samples 0..n-2."""
    core = np.asarray(y, float)[:-1]
    n = core.size
    ext = np.concatenate([core[-1:], core, core[:1]])
    maxima, minima = [], []
    k = 1
    while k <= n:
        if ext[k] > ext[k - 1]:
            j = k
            while j < n + 1 and ext[j + 1] == ext[j]:
                j += 1
            if j <= n and ext[j + 1] < ext[j]:
                maxima.append((k + j) // 2 - 1)
            k = j + 1
        elif ext[k] < ext[k - 1]:
            j = k
            while j < n + 1 and ext[j + 1] == ext[j]:
                j += 1
            if j <= n and ext[j + 1] > ext[j]:
                minima.append((k + j) // 2 - 1)
            k = j + 1
        else:
            k += 1
    return np.array(maxima, int), np.array(minima, int)


def _refine(y, idx, t0, dt, circular):
    """Parabola-vertex positions/values for the extrema at idx."""
    y = np.asarray(y, float)
    idx = np.asarray(idx, int)
    n = y.size - 1 if circular else y.size
    if circular:
        ym = y[(idx - 1) % n]
        yp = y[(idx + 1) % n]
    else:
        ym = y[idx - 1]
        yp = y[idx + 1]
    y0 = y[idx]
    a = (yp - 2 * y0 + ym) / (2 * dt * dt)
    b = (yp - ym) / (2 * dt)
    with np.errstate(divide="ignore", invalid="ignore"):
        tau = np.where(a != 0, -b / (2 * a), 0.0)
    ts = t0 + idx * dt + tau
    vs = y0 + b * tau + a * tau * tau
    return ts, vs


def find_extrema(signal, refine=False, circular=False):
    """Locate interior maxima/minima of a Signal as an ExtremaSet.

    refine moves each extremum to the vertex of the parabola through its
    three surrounding samples (positions exact to O(dt^2)); circular
    enables wraparound detection for exactly periodic series.
    """
    y = signal.samples
    if y.size < 3:
        raise ValidationError(f"need at least 3 samples, got {y.size}")
    if circular:
        max_idx, min_idx = _extrema_indices_circular(y)
    else:
        max_idx, min_idx = _extrema_indices(y)

    def build(idx):
        if idx.size == 0:
            return ()
        if refine:
            ts, vs = _refine(y, idx, signal.t0, signal.dt, circular)
        else:
            ts = signal.t0 + idx * signal.dt
            vs = y[idx]
        return tuple(Extremum(int(i), float(t), float(v))
                     for i, t, v in zip(idx, ts, vs))

    return ExtremaSet(maxima=build(max_idx), minima=build(min_idx))
