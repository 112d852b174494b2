"""SVD-based numerical rank and null spaces with a relative cutoff."""

from __future__ import annotations

import numpy as np


def svd_rank(a: np.ndarray, rtol: float) -> int:
    s = np.linalg.svd(np.atleast_2d(a), compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > rtol * s[0]))


def null_space(a: np.ndarray, rtol: float) -> np.ndarray:
    """Orthonormal basis (as rows) of ``{v : a @ v = 0}``."""
    a = np.atleast_2d(a)
    _, s, vh = np.linalg.svd(a)
    if s.size == 0 or s[0] == 0.0:
        return np.eye(a.shape[1])
    r = int(np.sum(s > rtol * s[0]))
    return vh[r:].copy()


def row_space(a: np.ndarray, rtol: float) -> np.ndarray:
    """Orthonormal basis (as rows) of the row space of ``a``."""
    a = np.atleast_2d(a)
    _, s, vh = np.linalg.svd(a)
    if s.size == 0 or s[0] == 0.0:
        return np.zeros((0, a.shape[1]))
    r = int(np.sum(s > rtol * s[0]))
    return vh[:r].copy()
