"""Per-class empirical normalization of feature marginals.

Each feature column of a training class is kept as a sorted list. A raw value
is mapped to a balanced uniform rank u = (R - 1/2)/n, where R is the 1-based
rank of the smallest training value >= x (clamped to [1, n]), and then through
the standard-normal quantile function. Training values therefore land exactly
on the quantiles invnorm((i - 1/2)/n), i = 1..n.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erfc

from .data import as_matrix
from .errors import DimensionMismatch, DomainError, EmptyClass, NonFiniteValue

_SQRT2 = math.sqrt(2.0)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class SortedFeature:
    """Ascending-sorted training values of one feature."""

    values: np.ndarray

    def __post_init__(self):
        vals = np.ascontiguousarray(self.values, dtype=float)
        if vals.ndim != 1 or vals.shape[0] < 2:
            raise EmptyClass("a feature needs at least 2 training values")
        if not np.all(np.isfinite(vals)):
            raise NonFiniteValue("feature contains NaN or infinite values")
        if np.any(np.diff(vals) < 0):
            vals = np.sort(vals)
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def rank(self, x):
        """1-based rank of the smallest training value >= x, clamped to [1, n].

        Ties resolve to the smallest qualifying index; a query above the
        maximum takes rank n so the uniform score stays inside (0, 1).
        """
        r = np.searchsorted(self.values, x, side="left") + 1
        return np.minimum(r, self.n)


@dataclass(frozen=True)
class MarginalNormalizer:
    """The componentwise feature map of one class: d sorted feature columns."""

    features: tuple[SortedFeature, ...]

    def __post_init__(self):
        object.__setattr__(self, "features", tuple(self.features))
        if len(self.features) == 0:
            raise DimensionMismatch("need at least one feature")
        ns = {f.n for f in self.features}
        if len(ns) != 1:
            raise DimensionMismatch(f"features disagree on sample count: {sorted(ns)}")

    @property
    def d(self) -> int:
        return len(self.features)

    @property
    def n(self) -> int:
        return self.features[0].n

    def transform(self, X) -> np.ndarray:
        """Map raw rows (m, d) or a single d-vector to normal scores."""
        X = np.asarray(X, dtype=float)
        single = X.ndim == 1
        mat = np.atleast_2d(X)
        if mat.shape[1] != self.d:
            raise DimensionMismatch(f"expected {self.d} features, got {mat.shape[1]}")
        Z = np.empty_like(mat)
        for j, feat in enumerate(self.features):
            Z[:, j] = invnorm(uniformize(feat, mat[:, j]))
        return Z[0] if single else Z


def fit_normalizer(data) -> MarginalNormalizer:
    """Sort each feature column of one class's training data."""
    X = as_matrix(data)
    if X.shape[0] < 2:
        raise EmptyClass(f"need at least 2 rows per class, got {X.shape[0]}")
    if X.shape[1] < 1:
        raise DimensionMismatch("need at least one feature column")
    if not np.all(np.isfinite(X)):
        raise NonFiniteValue("training data contains NaN or infinite values")
    return MarginalNormalizer(
        tuple(SortedFeature(np.sort(X[:, j])) for j in range(X.shape[1]))
    )


def uniformize(feature: SortedFeature, x):
    """Balanced uniform rank u = (R(x) - 1/2)/n in (0, 1).

    A training value of rank i maps to exactly (i - 1/2)/n.
    """
    xv = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(xv)):
        raise NonFiniteValue("query value is NaN or infinite")
    u = (feature.rank(xv) - 0.5) / feature.n
    return float(u) if np.ndim(x) == 0 else u


# Rational approximation by P. J. Acklam; one Newton step against the
# erfc-based normal CDF pushes the absolute error to ~1e-15.
_ACK_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
          1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_ACK_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
          6.680131188771972e+01, -1.328068155288572e+01)
_ACK_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
          -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_ACK_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
          3.754408661907416e+00)
_ACK_P_LOW = 0.02425


def _acklam_lower_half(q: np.ndarray) -> np.ndarray:
    """Initial quantile estimate for q in (0, 0.5]; result is <= 0."""
    a, b, c, d = _ACK_A, _ACK_B, _ACK_C, _ACK_D
    z = np.empty_like(q)
    tail = q < _ACK_P_LOW
    if tail.any():
        t = np.sqrt(-2.0 * np.log(q[tail]))
        num = ((((c[0] * t + c[1]) * t + c[2]) * t + c[3]) * t + c[4]) * t + c[5]
        den = (((d[0] * t + d[1]) * t + d[2]) * t + d[3]) * t + 1.0
        z[tail] = num / den
    mid = ~tail
    if mid.any():
        r = q[mid] - 0.5
        s = r * r
        num = (((((a[0] * s + a[1]) * s + a[2]) * s + a[3]) * s + a[4]) * s + a[5]) * r
        den = ((((b[0] * s + b[1]) * s + b[2]) * s + b[3]) * s + b[4]) * s + 1.0
        z[mid] = num / den
    return z


def invnorm(p):
    """Standard-normal quantile, antisymmetric by construction.

    Accepts a scalar or array of probabilities in the open interval (0, 1);
    absolute error is below 1e-9 throughout [1e-15, 1 - 1e-15].
    """
    arr = np.asarray(p, dtype=float)
    if not np.all((arr > 0.0) & (arr < 1.0)):
        raise DomainError("probability must lie strictly between 0 and 1")
    q = np.minimum(arr, 1.0 - arr)
    z = _acklam_lower_half(np.atleast_1d(q).copy())
    # Newton refinement: Phi(z) = erfc(-z/sqrt(2))/2 is cancellation-free for z <= 0.
    cdf = 0.5 * erfc(-z / _SQRT2)
    pdf = np.exp(-0.5 * z * z) / _SQRT_2PI
    z -= (cdf - np.atleast_1d(q)) / pdf
    out = np.where(np.atleast_1d(arr) <= 0.5, z, -z)
    return float(out[0]) if np.ndim(p) == 0 else out.reshape(arr.shape)


def normalize_point(normalizer: MarginalNormalizer, x) -> np.ndarray:
    """Map one raw d-vector to its normal score vector."""
    xv = np.asarray(x, dtype=float)
    if xv.ndim != 1 or xv.shape[0] != normalizer.d:
        raise DimensionMismatch(f"expected a vector of length {normalizer.d}")
    return normalizer.transform(xv)
