"""Sample-matrix container shared by fitting, simulation, and the CLI."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, MissingLabel, TooFewSamples


@dataclass(frozen=True)
class FeatureTable:
    """An n-by-d sample matrix with named columns and optional 0/1 labels.

    Label convention: 1 = case, 0 = control.
    """

    x: np.ndarray
    feature_names: tuple[str, ...]
    labels: np.ndarray | None = None

    def __post_init__(self):
        x = np.atleast_2d(np.asarray(self.x, dtype=float))
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "feature_names", tuple(self.feature_names))
        if x.ndim != 2 or x.shape[1] != len(self.feature_names):
            raise DimensionMismatch(
                f"matrix has {x.shape[1]} columns but {len(self.feature_names)} names"
            )
        if self.labels is not None:
            labels = np.asarray(self.labels, dtype=int)
            if labels.shape != (x.shape[0],):
                raise DimensionMismatch("labels length differs from row count")
            object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.x.shape[0]

    @property
    def d(self) -> int:
        return self.x.shape[1]

    @classmethod
    def from_array(cls, x, feature_names=None, labels=None) -> "FeatureTable":
        x = np.atleast_2d(np.asarray(x, dtype=float))
        if feature_names is None:
            feature_names = tuple(f"x{j + 1}" for j in range(x.shape[1]))
        return cls(x=x, feature_names=tuple(feature_names), labels=labels)

    def split_by_label(self) -> tuple["FeatureTable", "FeatureTable"]:
        """Return (case, control) sub-tables; raises if either class is unusable."""
        if self.labels is None:
            raise MissingLabel("table has no label column")
        case_rows = self.labels == 1
        control_rows = self.labels == 0
        if not case_rows.any():
            raise MissingLabel("no rows labeled 1 (case)")
        if not control_rows.any():
            raise MissingLabel("no rows labeled 0 (control)")
        case = FeatureTable(self.x[case_rows], self.feature_names)
        control = FeatureTable(self.x[control_rows], self.feature_names)
        if case.n < 2 or control.n < 2:
            raise TooFewSamples(
                f"need at least 2 rows per class, got case={case.n} control={control.n}"
            )
        return case, control


def as_matrix(data) -> np.ndarray:
    """Accept a FeatureTable or anything array-like; return the (n, d) matrix."""
    if isinstance(data, FeatureTable):
        return data.x
    return np.atleast_2d(np.asarray(data, dtype=float))
