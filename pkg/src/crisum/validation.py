"""Small input-validation helpers used at public API boundaries."""

from __future__ import annotations

import numpy as np


def require(condition: bool, message: str, exc=ValueError) -> None:
    if not condition:
        raise exc(message)


def check_unit_interval(value: float, name: str) -> float:
    if not (0.0 <= value <= 1.0):
        raise ValueError(f"{name} must lie in [0, 1], got {value!r}")
    return value


def check_similarity_matrix(S, tol: float = 1e-9) -> np.ndarray:
    """Validate a dense similarity matrix: square, finite, symmetric."""
    S = np.asarray(S, dtype=float)
    if S.ndim != 2 or S.shape[0] != S.shape[1]:
        raise ValueError(f"similarity matrix must be square, got shape {S.shape}")
    if not np.isfinite(S).all():
        raise ValueError("similarity matrix contains non-finite values")
    if S.size and np.abs(S - S.T).max() > tol:
        raise ValueError("similarity matrix is not symmetric")
    return S
