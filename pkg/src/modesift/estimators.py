"""Estimator-style adapters over the functional core.

Both classes follow the scikit-learn conventions (constructor params
stored verbatim, fit returns self, get_params/set_params inherited) and
treat the input X as a single time series of shape (n,) or (n, 1).
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .pca import (GroupingCutoffs, autocovariance, component_series,
                  eigen_decompose, embed, group_components, select_delta)
from .sifting import SiftConfig, decompose
from .signals import Signal
from .validation import as_float_array, require

__all__ = ["SiftingDecomposer", "DelayPca"]


def _as_series(X, name="X"):
    arr = np.asarray(X, dtype=float)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    require(arr.ndim == 1,
            f"{name} must be a single series of shape (n,) or (n, 1), "
            f"got shape {np.asarray(X).shape}")
    return as_float_array(arr, name, min_length=4)


class SiftingDecomposer(TransformerMixin, BaseEstimator):
    """Transform a series into its sifting components.

    transform returns an (n, max_imfs + 1) matrix: IMFs in extraction
    order, unused columns zero, and the residual in the last column, so
    the row sums reproduce the input exactly.
    """

    def __init__(self, strategy="midpoint", epsilon=1e-3, norm="rms",
                 max_sift_iterations=200, max_imfs=12, boundary="mirror",
                 epsilon_mode="relative", refine_extrema=True,
                 t0=0.0, dt=1.0):
        self.strategy = strategy
        self.epsilon = epsilon
        self.norm = norm
        self.max_sift_iterations = max_sift_iterations
        self.max_imfs = max_imfs
        self.boundary = boundary
        self.epsilon_mode = epsilon_mode
        self.refine_extrema = refine_extrema
        self.t0 = t0
        self.dt = dt

    def _config(self):
        return SiftConfig(
            strategy=self.strategy, epsilon=self.epsilon, norm=self.norm,
            max_sift_iterations=self.max_sift_iterations,
            max_imfs=self.max_imfs, boundary=self.boundary,
            epsilon_mode=self.epsilon_mode,
            refine_extrema=self.refine_extrema)

    def fit(self, X, y=None):
        series = _as_series(X)
        self._config()
        self.n_samples_in_ = len(series)
        return self

    def transform(self, X):
        check_is_fitted(self, "n_samples_in_")
        series = _as_series(X)
        config = self._config()
        decomposition = decompose(Signal(series, self.t0, self.dt), config)
        out = np.zeros((len(series), config.max_imfs + 1))
        for k, imf in enumerate(decomposition.imfs):
            out[:, k] = imf.samples
        out[:, -1] = decomposition.residual.samples
        return out


class DelayPca(TransformerMixin, BaseEstimator):
    """Delay-embedded PCA of a single series.

    fit learns the lag (auto-selected from the autocorrelation when delta
    is None) and the eigenbasis of the delay Gram matrix; transform
    returns the (effective_length, n_components) matrix of additive
    components, whose row sums reproduce the truncated series.
    """

    def __init__(self, n_components=8, delta=None):
        self.n_components = n_components
        self.delta = delta

    def fit(self, X, y=None):
        series = _as_series(X)
        signal = Signal(series, 0.0, 1.0)
        self.delta_ = (select_delta(signal) if self.delta is None
                       else int(self.delta))
        embedding = embed(signal, self.delta_, self.n_components)
        self.model_ = eigen_decompose(autocovariance(embedding))
        self.embedding_ = embedding
        self.eigenvalues_ = self.model_.eigenvalues
        self.components_ = self.model_.eigenvectors.T
        return self

    def transform(self, X):
        check_is_fitted(self, "model_")
        series = _as_series(X)
        embedding = embed(Signal(series, 0.0, 1.0), self.delta_,
                          self.n_components)
        columns = [component_series(embedding, self.model_, k)
                   for k in range(self.n_components)]
        return np.column_stack(columns)

    def group(self, m1, m2):
        """Split the fitted series into (mean_flow, waves, residual)."""
        check_is_fitted(self, "model_")
        return group_components(self.embedding_, self.model_,
                                GroupingCutoffs(m1, m2))
