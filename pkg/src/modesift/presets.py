"""Canned benchmark signals.

Five presets bundle a tone list and grid with the sifting parameters
the benchmark expects. "eq2.1" is the three-tone separation demo;
"eq3.1" is the dense periodic two-tone grid used for single-sift
projection amplitudes; "case1".."case3" are the two-tone convergence
benchmarks with progressively closer frequencies.
"""

import math
from dataclasses import dataclass

from .sifting import SiftConfig
from .signals import ToneSpec, generate_multitone
from .validation import require

__all__ = ["ExperimentPreset", "PRESET_NAMES", "get_preset", "build_signal"]

_OMEGA0 = math.pi / 256.0


@dataclass(frozen=True)
class ExperimentPreset:
    """A named signal recipe plus the sifting setup it is analysed with.

    probe_omegas, when nonempty, are the (fast, slow) projection
    frequencies for single-sift efficiency measurements, and period is
    the fundamental period the projections integrate over.
    """

    name: str
    description: str
    tones: tuple
    t0: float
    dt: float
    n: int
    sift: SiftConfig
    period: float = 0.0
    probe_omegas: tuple = ()


def _two_tone(name, description, omega1, omega2, max_imfs):
    return ExperimentPreset(
        name=name,
        description=description,
        tones=(ToneSpec(0.5, omega1), ToneSpec(0.5, omega2)),
        t0=-2048.0,
        dt=1.0,
        n=4097,
        sift=SiftConfig(max_imfs=max_imfs),
    )


_PRESETS = {
    "eq2.1": ExperimentPreset(
        name="eq2.1",
        description="three equal tones at 12, 10, 8 times pi/256 on "
                    "[-2048, 2048]",
        tones=(ToneSpec(1.0 / 3.0, 12.0 * _OMEGA0),
               ToneSpec(1.0 / 3.0, 10.0 * _OMEGA0),
               ToneSpec(1.0 / 3.0, 8.0 * _OMEGA0)),
        t0=-2048.0,
        dt=1.0,
        n=4097,
        sift=SiftConfig(max_imfs=5),
    ),
    "eq3.1": ExperimentPreset(
        name="eq3.1",
        description="two half-amplitude tones at 3*pi/64 and pi/32 on a "
                    "dense dt=1/64 grid over one 128-sample period",
        tones=(ToneSpec(0.5, 3.0 * math.pi / 64.0),
               ToneSpec(0.5, math.pi / 32.0)),
        t0=0.0,
        dt=1.0 / 64.0,
        n=8193,
        sift=SiftConfig(boundary="periodic"),
        period=128.0,
        probe_omegas=(3.0 * math.pi / 64.0, math.pi / 32.0),
    ),
    "case1": _two_tone(
        "case1",
        "well-separated tones at 12 and 8 times pi/256",
        12.0 * _OMEGA0, 8.0 * _OMEGA0, max_imfs=1),
    "case2": _two_tone(
        "case2",
        "close tones at pi/24 plus/minus pi/288",
        math.pi / 24.0 + math.pi / 288.0,
        math.pi / 24.0 - math.pi / 288.0, max_imfs=2),
    "case3": _two_tone(
        "case3",
        "nearly overlapping tones at pi/24 plus/minus pi/1000",
        math.pi / 24.0 + math.pi / 1000.0,
        math.pi / 24.0 - math.pi / 1000.0, max_imfs=2),
}

PRESET_NAMES = tuple(sorted(_PRESETS))


def get_preset(name):
    require(name in _PRESETS,
            f"unknown preset '{name}'; available: {', '.join(PRESET_NAMES)}")
    return _PRESETS[name]


def build_signal(preset):
    """Materialize the preset's signal on its grid."""
    return generate_multitone(preset.tones, preset.t0, preset.dt, preset.n)
