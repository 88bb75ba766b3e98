"""Delay-embedded principal-component analysis.

A series X of length N is embedded as n delayed copies rows[i][k] =
X[k + i*delta] of common length N' = N - (n-1)*delta (truncated policy,
no wraparound). The Gram matrix R = rows @ rows.T is decomposed with a
cyclic Jacobi iteration, and the series splits into n additive components

    X(j) = sum_k (sum_i rows[i][j] * V[i][k]) * V[0][k]

which is an exact identity for any orthonormal V. Components are grouped
into slow "mean flow", mid-range "waves", and a residual by two cutoff
indices.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import NumericError
from .validation import positive_int, require

__all__ = [
    "DelayEmbedding",
    "PcaModel",
    "GroupingCutoffs",
    "embed",
    "autocovariance",
    "eigen_decompose",
    "component_series",
    "group_components",
    "select_delta",
]

JACOBI_SWEEPS = 30
JACOBI_TOL = 1e-12


@dataclass(frozen=True)
class DelayEmbedding:
    """n delayed copies of a series, truncated to common length."""

    delta: int
    rows: np.ndarray

    def __post_init__(self):
        self.rows.setflags(write=False)

    @property
    def n(self):
        return self.rows.shape[0]

    @property
    def effective_length(self):
        return self.rows.shape[1]


@dataclass(frozen=True)
class PcaModel:
    """Gram matrix with (optionally) its eigendecomposition.

    eigenvalues are nonincreasing; eigenvectors is column-matched and
    orthonormal, each column's first nonzero entry positive.
    """

    r: np.ndarray
    eigenvalues: np.ndarray = None
    eigenvectors: np.ndarray = None

    @property
    def decomposed(self):
        return self.eigenvalues is not None


@dataclass(frozen=True)
class GroupingCutoffs:
    """m1 = last mean-flow component index, m2 = last wave component."""

    m1: int
    m2: int

    def __post_init__(self):
        require(0 <= self.m1 <= self.m2,
                f"need 0 <= m1 <= m2, got m1={self.m1}, m2={self.m2}")


def embed(signal, delta, n):
    """Build the delay embedding rows[i][k] = X[k + i*delta]."""
    positive_int(delta, "delta")
    positive_int(n, "n")
    require(n >= 2, f"n must be >= 2, got {n}")
    length = len(signal)
    minimum = (n - 1) * delta + n
    require(length - (n - 1) * delta >= n,
            f"series too short for delta={delta}, n={n}: "
            f"need at least {minimum} samples, got {length}")
    effective = length - (n - 1) * delta
    x = signal.samples
    rows = np.stack([x[i * delta:i * delta + effective] for i in range(n)])
    return DelayEmbedding(delta, rows)


def autocovariance(embedding):
    """R_ij = sum_k rows[i][k] * rows[j][k] (raw sums, not averaged)."""
    gram = embedding.rows @ embedding.rows.T
    return PcaModel(0.5 * (gram + gram.T))


def _jacobi(matrix):
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Returns (eigenvalues, eigenvectors) unordered; raises NumericError if
    the off-diagonal mass has not reached the threshold within the sweep
    budget (unreachable for genuine symmetric input at these sizes).
    """
    a = matrix.astype(float).copy()
    n = a.shape[0]
    v = np.eye(n)
    threshold = JACOBI_TOL * np.linalg.norm(matrix)

    def off_norm():
        return float(np.sqrt(np.sum(np.square(a - np.diag(np.diag(a))))))

    for _ in range(JACOBI_SWEEPS):
        if off_norm() <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta == 0.0:
                    t = 1.0
                else:
                    t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                app, aqq = a[p, p], a[q, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                mask = np.ones(n, dtype=bool)
                mask[[p, q]] = False
                aip = a[mask, p].copy()
                aiq = a[mask, q].copy()
                a[mask, p] = a[p, mask] = c * aip - s * aiq
                a[mask, q] = a[q, mask] = s * aip + c * aiq
                vip = v[:, p].copy()
                v[:, p] = c * vip - s * v[:, q]
                v[:, q] = s * vip + c * v[:, q]
    if off_norm() > threshold:
        raise NumericError(
            f"eigendecomposition did not converge in {JACOBI_SWEEPS} sweeps")
    return np.diag(a).copy(), v


def eigen_decompose(model):
    """Fill a model with eigenvalues (nonincreasing) and orthonormal
    eigenvectors whose first nonzero entry is positive."""
    r = model.r
    require(r.ndim == 2 and r.shape[0] == r.shape[1],
            f"matrix must be square, got shape {r.shape}")
    scale = np.linalg.norm(r)
    require(np.linalg.norm(r - r.T) <= 1e-12 * max(scale, 1.0),
            "matrix must be symmetric")
    values, vectors = _jacobi(r)
    order = np.argsort(-values, kind="stable")
    values = values[order]
    vectors = vectors[:, order]
    for k in range(vectors.shape[1]):
        column = vectors[:, k]
        nonzero = np.flatnonzero(np.abs(column) > 1e-12)
        if nonzero.size and column[nonzero[0]] < 0.0:
            vectors[:, k] = -column
    return PcaModel(r, values, vectors)


def _all_components(embedding, model):
    require(model.decomposed, "model must be eigendecomposed first")
    v = model.eigenvectors
    coefficients = v.T @ embedding.rows
    return coefficients * v[0, :][:, np.newaxis]


def component_series(embedding, model, k):
    """The k-th additive component a_k(j) * phi_k[0]; summing over all k
    reproduces the leading row X[0..N'-1] exactly."""
    require(0 <= k < embedding.n,
            f"component index must be in [0, {embedding.n - 1}], got {k}")
    return _all_components(embedding, model)[k]


def group_components(embedding, model, cutoffs):
    """Split the reconstruction into (mean_flow, waves, residual) by the
    cutoff indices: components 0..m1, m1+1..m2, and m2+1..n-1."""
    require(cutoffs.m2 < embedding.n,
            f"m2 must be < n={embedding.n}, got {cutoffs.m2}")
    components = _all_components(embedding, model)
    mean_flow = components[:cutoffs.m1 + 1].sum(axis=0)
    waves = components[cutoffs.m1 + 1:cutoffs.m2 + 1].sum(axis=0)
    residual = components[cutoffs.m2 + 1:].sum(axis=0)
    return mean_flow, waves, residual


def select_delta(signal):
    """Pick a decorrelation lag from the sample autocorrelation: first
    zero crossing, else first dip below 1/e, else length//4 (warned)."""
    length = len(signal)
    require(length >= 16, f"need at least 16 samples, got {length}")
    x = signal.samples - np.mean(signal.samples)
    denom = float(np.dot(x, x))
    if denom > 0.0:
        acf = np.correlate(x, x, mode="full")[length - 1:] / denom
        crossed = np.flatnonzero(acf[1:] <= 0.0)
        if crossed.size:
            return int(crossed[0]) + 1
        decayed = np.flatnonzero(acf[1:] < 1.0 / np.e)
        if decayed.size:
            return int(decayed[0]) + 1
    warnings.warn("autocorrelation never decorrelates; "
                  "falling back to length//4", RuntimeWarning, stacklevel=2)
    return length // 4
