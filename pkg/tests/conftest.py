"""Shared fixtures: seeded generators and small canonical signals."""

import numpy as np
import pytest

from modesift import Signal, ToneSpec, generate_multitone


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def two_tone():
    """Well-separated tones; every strategy resolves IMF_1 quickly."""
    return generate_multitone(
        (ToneSpec(0.5, 12 * np.pi / 256), ToneSpec(0.5, 8 * np.pi / 256)),
        -2048.0, 1.0, 4097)


@pytest.fixture
def rough_signal(rng):
    """Smoothed random walk with plenty of extrema on both scales."""
    steps = np.cumsum(rng.standard_normal(300))
    kernel = np.ones(5) / 5.0
    return Signal(np.convolve(steps, kernel, mode="same"), 0.0, 1.0)
