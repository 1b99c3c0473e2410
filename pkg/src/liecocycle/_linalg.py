"""Dense linear-algebra kernels shared by the algebraic modules."""

from __future__ import annotations

import warnings

import numpy as np
import scipy.linalg

TOL_ALG = 1e-10
TOL_VERIFY = 1e-6
TOL_RANK = 1e-9
TOL_FD = 1e-5

# Singular values within this factor of the rank threshold are reported.
_NEAR_THRESHOLD_FACTOR = 1e3


def expm(a: np.ndarray) -> np.ndarray:
    """Matrix exponential (scaling and squaring with a Pade approximant)."""
    a = np.asarray(a, dtype=float)
    if a.size == 0:
        return np.eye(a.shape[0])
    return scipy.linalg.expm(a)


def phi1(a: np.ndarray) -> np.ndarray:
    """Return ``(e^A - I) A^{-1}`` without inverting ``A``.

    The value is read off the upper-right block of ``exp([[A, I], [0, 0]])``,
    which stays exact when ``A`` is singular (e.g. nilpotent or zero).
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    aug = np.zeros((2 * n, 2 * n))
    aug[:n, :n] = a
    aug[:n, n:] = np.eye(n)
    return expm(aug)[:n, n:]


def phi1_apply(a: np.ndarray, v: np.ndarray) -> np.ndarray:
    """``phi1(a) @ v`` through the (n+1)-dimensional augmented exponential."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    aug = np.zeros((n + 1, n + 1))
    aug[:n, :n] = a
    aug[:n, n] = v
    return expm(aug)[:n, n]


def _singular_values(m: np.ndarray) -> np.ndarray:
    if m.size == 0:
        return np.zeros(0)
    return np.linalg.svd(m, compute_uv=False)


def _threshold(s: np.ndarray, tol_rank: float) -> float:
    return tol_rank * s[0] if s.size and s[0] > 0 else 0.0


def _warn_near_threshold(s: np.ndarray, thresh: float, what: str) -> None:
    if thresh <= 0:
        return
    near = (s > thresh / _NEAR_THRESHOLD_FACTOR) & (s < thresh * _NEAR_THRESHOLD_FACTOR)
    if np.any(near):
        warnings.warn(
            f"{what}: singular values near the rank threshold {thresh:.3e}: "
            f"{np.array2string(s, precision=3)}",
            RuntimeWarning,
            stacklevel=3,
        )


def numerical_rank(m: np.ndarray, tol_rank: float = TOL_RANK, what: str = "rank") -> int:
    """Count singular values above ``tol_rank * sigma_max``."""
    s = _singular_values(np.asarray(m, dtype=float))
    thresh = _threshold(s, tol_rank)
    _warn_near_threshold(s, thresh, what)
    if thresh == 0.0:
        return 0
    return int(np.sum(s > thresh))


def nullspace(m: np.ndarray, tol_rank: float = TOL_RANK, what: str = "nullspace") -> np.ndarray:
    """Orthonormal basis of the numerical right nullspace, one vector per row."""
    m = np.asarray(m, dtype=float)
    ncols = m.shape[1]
    if m.shape[0] == 0 or ncols == 0:
        return np.eye(ncols)
    _, s, vh = np.linalg.svd(m, full_matrices=True)
    thresh = _threshold(s, tol_rank)
    _warn_near_threshold(s, thresh, what)
    rank = 0 if thresh == 0.0 else int(np.sum(s > thresh))
    return vh[rank:].copy()


def range_basis(m: np.ndarray, tol_rank: float = TOL_RANK) -> np.ndarray:
    """Orthonormal basis of the column space, one vector per row."""
    m = np.asarray(m, dtype=float)
    if m.size == 0:
        return np.zeros((0, m.shape[0]))
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    thresh = _threshold(s, tol_rank)
    rank = 0 if thresh == 0.0 else int(np.sum(s > thresh))
    return u[:, :rank].T.copy()
