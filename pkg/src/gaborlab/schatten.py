"""Singular values, Schatten p-norms and the orthonormal-pair functional."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .operators import OperatorMatrix

__all__ = ["SingularSpectrum", "singular_values", "schatten_norm", "pair_functional"]

ORTHONORMAL_TOL = 1e-10


@dataclass(frozen=True)
class SingularSpectrum:
    """Non-increasing, non-negative singular values."""

    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.float64)
        if vals.ndim != 1 or np.any(vals < 0) or np.any(np.diff(vals) > 0):
            raise ValueError("singular values must be non-negative and descending")
        object.__setattr__(self, "values", vals)


def singular_values(a: OperatorMatrix) -> SingularSpectrum:
    return SingularSpectrum(np.linalg.svd(a.entries, compute_uv=False))


def _lp(values: np.ndarray, p: float) -> float:
    if p == math.inf:
        return float(values.max(initial=0.0))
    if p == 1.0:
        return float(values.sum())
    if p == 2.0:
        return float(np.sqrt((values * values).sum()))
    peak = float(values.max(initial=0.0))
    if peak == 0.0:
        return 0.0
    return peak * float(((values / peak) ** p).sum() ** (1.0 / p))


def schatten_norm(a: OperatorMatrix, p: float) -> float:
    """l^p norm of the singular values; p = 2 is Frobenius, p = inf operator norm."""
    if not (p >= 1.0):
        raise ValueError(f"Schatten exponent must be >= 1, got {p}")
    return _lp(singular_values(a).values, p)


def _check_orthonormal(vecs: np.ndarray, name: str) -> None:
    gram = vecs.conj() @ vecs.T
    if not np.allclose(gram, np.eye(vecs.shape[0]), atol=ORTHONORMAL_TOL):
        raise ValueError(f"{name} is not orthonormal within {ORTHONORMAL_TOL}")


def pair_functional(a: OperatorMatrix, fs, gs, p: float) -> float:
    """(sum_k |<A f_k, g_k>|^p)^(1/p) over orthonormal lists fs, gs.

    Always bounded by schatten_norm(a, p), with equality when fs and gs
    are right/left singular vectors.
    """
    if not (p >= 1.0):
        raise ValueError(f"exponent must be >= 1, got {p}")
    fs = np.asarray(fs, dtype=np.complex128)
    gs = np.asarray(gs, dtype=np.complex128)
    if fs.shape != gs.shape or fs.ndim != 2 or fs.shape[1] != a.n:
        raise ValueError("fs and gs must be equal-length lists of C^n vectors")
    _check_orthonormal(fs, "fs")
    _check_orthonormal(gs, "gs")
    inner = np.einsum("kx,xy,ky->k", gs.conj(), a.entries, fs)
    return _lp(np.abs(inner), p)
