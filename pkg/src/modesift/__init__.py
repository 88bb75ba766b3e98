"""modesift: signal decomposition by envelope-mean or midpoint sifting,
with spectral analysis and delay-embedded PCA."""

from .compare import (CompareReport, compare_strategies, find_spectral_peaks,
                      ghost_peaks, single_sift_projections)
from .envelope import (classical_sifting_curve, hybrid_sifting_curve,
                       midpoint_sifting_curve)
from .errors import (DegenerateFitError, FormatError, ModeSiftError,
                     NumericError, ResidualSignal, ValidationError)
from .estimators import DelayPca, SiftingDecomposer
from .extrema import ExtremaSet, Extremum, find_extrema
from .pca import (DelayEmbedding, GroupingCutoffs, PcaModel, autocovariance,
                  component_series, eigen_decompose, embed, group_components,
                  select_delta)
from .presets import PRESET_NAMES, ExperimentPreset, build_signal, get_preset
from .sifting import (Decomposition, Imf, SiftConfig, collect_sift_iterates,
                      decompose, extract_imf, sift_once)
from .signals import (NoiseSpec, Signal, ToneSpec, add_noise, detrend_mean,
                      generate_multitone, load_csv, save_csv)
from .spectral import (FilterFit, ProjectionAmplitudes, SlopeFit, Spectrum,
                       estimate_alpha, fit_filter_alphas, fit_spectral_slope,
                       periodogram, project_fourier)
from .spline import natural_cubic_spline, spline_second_derivatives

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "CompareReport", "compare_strategies", "find_spectral_peaks",
    "ghost_peaks", "single_sift_projections",
    "classical_sifting_curve", "hybrid_sifting_curve",
    "midpoint_sifting_curve",
    "DegenerateFitError", "FormatError", "ModeSiftError", "NumericError",
    "ResidualSignal", "ValidationError",
    "DelayPca", "SiftingDecomposer",
    "ExtremaSet", "Extremum", "find_extrema",
    "DelayEmbedding", "GroupingCutoffs", "PcaModel", "autocovariance",
    "component_series", "eigen_decompose", "embed", "group_components",
    "select_delta",
    "PRESET_NAMES", "ExperimentPreset", "build_signal", "get_preset",
    "Decomposition", "Imf", "SiftConfig", "collect_sift_iterates",
    "decompose", "extract_imf", "sift_once",
    "NoiseSpec", "Signal", "ToneSpec", "add_noise", "detrend_mean",
    "generate_multitone", "load_csv", "save_csv",
    "FilterFit", "ProjectionAmplitudes", "SlopeFit", "Spectrum",
    "estimate_alpha", "fit_filter_alphas", "fit_spectral_slope",
    "periodogram", "project_fourier",
    "natural_cubic_spline", "spline_second_derivatives",
]
