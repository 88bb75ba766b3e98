"""Sifting-curve construction: classical envelope mean, midpoint spline,
and their hybrid average.

Boundary policies
-----------------
mirror (default): each knot set is extended by reflecting its two nearest
strictly-interior knots across each endpoint. When the boundary sample is
itself more extreme than the nearest extremum of the opposite-leading kind
(a true extremum sits at the domain edge and the interior scan cannot see
it), the endpoint sample is promoted into that knot set first — otherwise
the signal pokes through its envelope at the edges and sifting enters an
edge-driven limit cycle.

periodic: knots are wrapped by one full period on both sides; meant for
signals that span exactly one period (samples[0] == samples[-1]) together
with circular extrema detection.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ResidualSignal
from .spline import natural_cubic_spline
from .validation import choice

__all__ = [
    "SiftingCurve",
    "classical_sifting_curve",
    "midpoint_sifting_curve",
    "hybrid_sifting_curve",
]

BOUNDARIES = {"mirror", "periodic"}


@dataclass(frozen=True)
class SiftingCurve:
    """One sifting pass's local-mean estimate, sampled on the signal grid.

    knot_count counts the interpolation knots inside the domain (before
    boundary augmentation); for the hybrid curve it is the sum over both
    constituents.
    """

    values: np.ndarray
    kind: str
    knot_count: int


def _promote_endpoints(signal, mxt, mxv, mnt, mnv):
    """Endpoint clamp: adopt a boundary sample as a knot when it is more
    extreme than the first/last extremum of the kind it would join."""
    if not (mxt.size and mnt.size):
        return mxt, mxv, mnt, mnv
    y = signal.samples
    t = signal.t0, signal.t0 + (y.size - 1) * signal.dt
    mxt, mxv, mnt, mnv = list(mxt), list(mxv), list(mnt), list(mnv)
    # left end: a minimum leads -> the endpoint can only act as a maximum
    if mnt[0] < mxt[0]:
        if y[0] >= mxv[0]:
            mxt.insert(0, t[0])
            mxv.insert(0, y[0])
    elif y[0] <= mnv[0]:
        mnt.insert(0, t[0])
        mnv.insert(0, y[0])
    # right end, symmetric
    if mnt[-1] > mxt[-1]:
        if y[-1] >= mxv[-1]:
            mxt.append(t[1])
            mxv.append(y[-1])
    elif y[-1] <= mnv[-1]:
        mnt.append(t[1])
        mnv.append(y[-1])
    return (np.asarray(mxt), np.asarray(mxv),
            np.asarray(mnt), np.asarray(mnv))


def _mirror_knots(kt, kv, t_start, t_end):
    """Reflect the two nearest strictly-interior knots across each end."""
    left = kt > t_start
    right = kt < t_end
    lt = (2.0 * t_start - kt[left][:2])[::-1]
    lv = kv[left][:2][::-1]
    rt = (2.0 * t_end - kt[right][-2:])[::-1]
    rv = kv[right][-2:][::-1]
    return np.concatenate([lt, kt, rt]), np.concatenate([lv, kv, rv])


def _periodic_knots(kt, kv, period):
    return (np.concatenate([kt - period, kt, kt + period]),
            np.concatenate([kv, kv, kv]))


def _strictify(kt, kv, gap):
    """Drop knots that violate strict time increase (keep-first)."""
    if kt.size < 2:
        return kt, kv
    keep = np.concatenate([[True], np.diff(kt) > gap])
    return kt[keep], kv[keep]


def _augment(kt, kv, signal, boundary):
    t_end = signal.t0 + (len(signal) - 1) * signal.dt
    if boundary == "periodic":
        kt, kv = _periodic_knots(kt, kv, t_end - signal.t0)
    else:
        kt, kv = _mirror_knots(kt, kv, signal.t0, t_end)
    return _strictify(kt, kv, 1e-9 * signal.dt)


def classical_sifting_curve(signal, extrema, boundary="mirror"):
    """Mean of the max/min envelope splines, the classical local mean."""
    choice(boundary, BOUNDARIES, "boundary")
    if len(extrema.maxima) < 2 or len(extrema.minima) < 2:
        raise ResidualSignal(
            f"need >= 2 maxima and >= 2 minima, got "
            f"{len(extrema.maxima)}/{len(extrema.minima)}"
        )
    mxt, mxv = extrema.max_times, extrema.max_values
    mnt, mnv = extrema.min_times, extrema.min_values
    if boundary == "mirror":
        mxt, mxv, mnt, mnv = _promote_endpoints(signal, mxt, mxv, mnt, mnv)
    knot_count = mxt.size + mnt.size
    times = signal.times
    upper = natural_cubic_spline(*_augment(mxt, mxv, signal, boundary), times)
    lower = natural_cubic_spline(*_augment(mnt, mnv, signal, boundary), times)
    return SiftingCurve(0.5 * (upper + lower), "envelope-mean", int(knot_count))


def _interp_samples(signal, query_times, periodic):
    t_end = signal.t0 + (len(signal) - 1) * signal.dt
    tq = np.asarray(query_times, float)
    if periodic:
        tq = signal.t0 + np.mod(tq - signal.t0, t_end - signal.t0)
    return np.interp(tq, signal.times, signal.samples)


def midpoint_sifting_curve(signal, extrema, boundary="mirror"):
    """Spline through the signal's values at midpoints between consecutive
    alternating extrema — the stand-in for zero crossings."""
    choice(boundary, BOUNDARIES, "boundary")
    if len(extrema.maxima) + len(extrema.minima) < 2:
        raise ResidualSignal(
            f"need >= 2 merged extrema, got "
            f"{len(extrema.maxima) + len(extrema.minima)}"
        )
    mxt, mxv = extrema.max_times, extrema.max_values
    mnt, mnv = extrema.min_times, extrema.min_values
    periodic = boundary == "periodic"
    if not periodic:
        mxt, mxv, mnt, mnv = _promote_endpoints(signal, mxt, mxv, mnt, mnv)
    merged = np.sort(np.concatenate([mxt, mnt]))
    if periodic:
        period = (len(signal) - 1) * signal.dt
        nxt = np.concatenate([merged[1:], merged[:1] + period])
        mid_t = 0.5 * (merged + nxt)
    else:
        mid_t = 0.5 * (merged[:-1] + merged[1:])
    mid_v = _interp_samples(signal, mid_t, periodic)
    mid_t, mid_v = _strictify(mid_t, mid_v, 1e-9 * signal.dt)
    knot_count = mid_t.size
    values = natural_cubic_spline(*_augment(mid_t, mid_v, signal, boundary),
                                  signal.times)
    return SiftingCurve(values, "midpoint", int(knot_count))


def hybrid_sifting_curve(signal, extrema, boundary="mirror"):
    """Pointwise average of the classical and midpoint curves."""
    classical = classical_sifting_curve(signal, extrema, boundary)
    midpoint = midpoint_sifting_curve(signal, extrema, boundary)
    return SiftingCurve(0.5 * (classical.values + midpoint.values), "hybrid",
                        classical.knot_count + midpoint.knot_count)
