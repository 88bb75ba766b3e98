"""Natural cubic spline against an independent dense-matrix oracle."""

import numpy as np
import pytest

from modesift import ValidationError, natural_cubic_spline
from modesift.spline import spline_second_derivatives


def oracle_second_derivatives(ts, ys):
    """Assemble the full natural-spline system and solve it densely.

    Independent route: np.linalg.solve on the explicit (n x n) matrix
    instead of the Thomas recurrence.
    """
    n = len(ts)
    h = np.diff(ts)
    a = np.zeros((n, n))
    b = np.zeros(n)
    a[0, 0] = 1.0
    a[-1, -1] = 1.0
    for i in range(1, n - 1):
        a[i, i - 1] = h[i - 1]
        a[i, i] = 2.0 * (h[i - 1] + h[i])
        a[i, i + 1] = h[i]
        b[i] = 6.0 * ((ys[i + 1] - ys[i]) / h[i]
                      - (ys[i] - ys[i - 1]) / h[i - 1])
    return np.linalg.solve(a, b)


def oracle_eval(ts, ys, second, x):
    """Piecewise-cubic evaluation in the second-derivative form."""
    i = min(max(np.searchsorted(ts, x, side="right") - 1, 0), len(ts) - 2)
    h = ts[i + 1] - ts[i]
    u = ts[i + 1] - x
    v = x - ts[i]
    return (second[i] * u ** 3 / (6 * h) + second[i + 1] * v ** 3 / (6 * h)
            + (ys[i] / h - second[i] * h / 6) * u
            + (ys[i + 1] / h - second[i + 1] * h / 6) * v)


def test_interpolates_knots_exactly(rng):
    ts = np.sort(rng.uniform(-5, 5, 12))
    ts += np.arange(12) * 1e-3  # guard against near-duplicates
    ys = rng.standard_normal(12)
    np.testing.assert_allclose(natural_cubic_spline(ts, ys, ts), ys,
                               atol=1e-12)


def test_collinear_knots_reproduce_the_line():
    ts = np.array([0.0, 1.0, 2.5, 4.0, 7.0])
    ys = 3.0 * ts - 2.0
    xq = np.linspace(-2.0, 9.0, 200)  # includes out-of-span queries
    np.testing.assert_allclose(natural_cubic_spline(ts, ys, xq),
                               3.0 * xq - 2.0, atol=1e-10)


def test_two_knots_give_straight_segment():
    values = natural_cubic_spline([0.0, 2.0], [1.0, 5.0], [0.5, 1.0, 1.5])
    np.testing.assert_allclose(values, [2.0, 3.0, 4.0], atol=1e-14)


def test_matches_dense_solve_oracle(rng):
    for _ in range(5):
        n = int(rng.integers(4, 15))
        ts = np.sort(rng.uniform(0, 10, n))
        ts += np.arange(n) * 1e-2
        ys = rng.standard_normal(n)
        second = oracle_second_derivatives(ts, ys)
        np.testing.assert_allclose(spline_second_derivatives(ts, ys), second,
                                   atol=1e-10)
        xq = rng.uniform(ts[0] - 1, ts[-1] + 1, 100)
        expected = [oracle_eval(ts, ys, second, x) for x in xq]
        np.testing.assert_allclose(natural_cubic_spline(ts, ys, xq),
                                   expected, atol=1e-10)


def test_natural_boundary_second_derivative_vanishes():
    ts = np.linspace(0, 6, 7)
    ys = np.sin(ts)
    eps = 1e-4
    for edge in (ts[0], ts[-1]):
        f = natural_cubic_spline(ts, ys, [edge - eps, edge, edge + eps])
        curvature = (f[0] - 2 * f[1] + f[2]) / eps ** 2
        assert abs(curvature) < 1e-5


def test_out_of_span_extends_end_cubic():
    ts = np.array([0.0, 1.0, 2.0, 3.0])
    ys = np.array([0.0, 1.0, 0.0, -1.0])
    second = spline_second_derivatives(ts, ys)
    # outside the span the first/last cubic keeps its polynomial form
    for x in (-0.7, -0.2, 3.4, 3.9):
        assert natural_cubic_spline(ts, ys, [x])[0] == pytest.approx(
            oracle_eval(ts, ys, second, x), abs=1e-12)


def test_smoothness_across_interior_knot():
    ts = np.array([0.0, 1.0, 2.0, 3.0, 4.0])
    ys = np.array([0.0, 2.0, -1.0, 1.5, 0.5])
    eps = 1e-5
    knot = ts[2]
    left = natural_cubic_spline(ts, ys, [knot - 2 * eps, knot - eps])
    right = natural_cubic_spline(ts, ys, [knot + eps, knot + 2 * eps])
    d_left = (left[1] - left[0]) / eps
    d_right = (right[1] - right[0]) / eps
    # first derivative continuous at the knot (second-order one-sided est.)
    assert d_left == pytest.approx(d_right, abs=1e-3)


def test_knot_validation():
    with pytest.raises(ValidationError):
        natural_cubic_spline([0.0], [1.0], [0.0])
    with pytest.raises(ValidationError):
        natural_cubic_spline([0.0, 0.0, 1.0], [1.0, 2.0, 3.0], [0.5])
    with pytest.raises(ValidationError):
        natural_cubic_spline([1.0, 0.0], [1.0, 2.0], [0.5])
    with pytest.raises(ValidationError):
        natural_cubic_spline([0.0, 1.0], [1.0, 2.0, 3.0], [0.5])


def test_second_derivatives_for_two_knots_are_zero():
    np.testing.assert_array_equal(
        spline_second_derivatives([0.0, 1.0], [3.0, 4.0]), np.zeros(2))
