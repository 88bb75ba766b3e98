"""Natural cubic spline interpolation.

Second derivatives come from the standard tridiagonal system solved with
the Thomas algorithm; the natural boundary sets them to zero at the first
and last knot. Queries outside the knot span are evaluated by extending
the first/last cubic segment (no clamping to the boundary value).
"""

import numpy as np

from .errors import ValidationError

__all__ = ["natural_cubic_spline", "spline_second_derivatives"]


def spline_second_derivatives(knot_times, knot_values):
    """Second derivatives M_i of the natural cubic spline at the knots.

    Interior values satisfy, for i = 1..n-2 with h_i = t_{i+1} - t_i:

        h_{i-1} M_{i-1} + 2 (h_{i-1} + h_i) M_i + h_i M_{i+1}
            = 6 [ (y_{i+1} - y_i)/h_i - (y_i - y_{i-1})/h_{i-1} ]

    and M_0 = M_{n-1} = 0.
    """
    ts = np.asarray(knot_times, float)
    ys = np.asarray(knot_values, float)
    n = ts.size
    if n == 2:
        return np.zeros(2)
    h = np.diff(ts)
    sub = h[:-1]
    diag = 2.0 * (h[:-1] + h[1:])
    sup = h[1:]
    rhs = 6.0 * ((ys[2:] - ys[1:-1]) / h[1:] - (ys[1:-1] - ys[:-2]) / h[:-1])

    m = n - 2
    cp = np.empty(m)
    dp = np.empty(m)
    cp[0] = sup[0] / diag[0]
    dp[0] = rhs[0] / diag[0]
    for i in range(1, m):
        den = diag[i] - sub[i] * cp[i - 1]
        cp[i] = sup[i] / den
        dp[i] = (rhs[i] - sub[i] * dp[i - 1]) / den
    second = np.zeros(n)
    second[m] = dp[m - 1]
    for i in range(m - 2, -1, -1):
        second[i + 1] = dp[i] - cp[i] * second[i + 2]
    return second


def _check_knots(knot_times):
    ts = np.asarray(knot_times, float)
    if ts.size < 2:
        raise ValidationError(f"need at least 2 knots, got {ts.size}")
    if np.any(np.diff(ts) <= 0):
        raise ValidationError("knot times must be strictly increasing")
    return ts


def natural_cubic_spline(knot_times, knot_values, query_times):
    """Evaluate the natural cubic spline through (knot_times, knot_values).

    Returns spline values at query_times; out-of-span queries extend the
    end cubic polynomials.
    """
    ts = _check_knots(knot_times)
    ys = np.asarray(knot_values, float)
    if ys.size != ts.size:
        raise ValidationError("knot times and values must have equal length")
    second = spline_second_derivatives(ts, ys)
    tq = np.asarray(query_times, float)

    idx = np.searchsorted(ts, tq, side="right") - 1
    idx = np.clip(idx, 0, ts.size - 2)
    h = ts[idx + 1] - ts[idx]
    u = ts[idx + 1] - tq
    v = tq - ts[idx]
    return (second[idx] * u**3 / (6 * h)
            + second[idx + 1] * v**3 / (6 * h)
            + (ys[idx] / h - second[idx] * h / 6) * u
            + (ys[idx + 1] / h - second[idx + 1] * h / 6) * v)
