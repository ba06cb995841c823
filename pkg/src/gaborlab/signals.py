"""Signals on the cyclic group Z_n^d.

Provides the core objects (FiniteSignal, TFArray) and operations:
time-frequency shifts, the unitary DFT, the normalized short-time
Fourier transform and the discrete Wiener amalgam norm.

Conventions fixed here and relied on everywhere else:

* Z_n^d points are indexed row-major; signal values are stored flat.
* The DFT is unitary: f_hat(xi) = n^(-d/2) * sum_t f(t) w^(-t.xi),
  w = exp(2 pi i / n).
* The STFT carries the same n^(-d/2) prefactor so that the Moyal
  identity sum |V|^2 = |f|^2 |g|^2 holds with constant 1.
* TFArray axes are ordered "all time shifts, then all frequencies".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, reduce

import numpy as np
import scipy.fft

__all__ = [
    "FiniteSignal",
    "TFArray",
    "tf_shift",
    "dft",
    "stft",
    "wiener_amalgam_norm",
    "delta",
    "constant",
    "periodized_gaussian",
    "random_signal",
]


@dataclass(frozen=True)
class FiniteSignal:
    """Complex-valued function on Z_n^d, stored flat in row-major order."""

    n: int
    dim: int
    values: np.ndarray

    def __post_init__(self):
        if self.n < 1 or self.dim < 1:
            raise ValueError("group size and dimension must be positive")
        vals = np.asarray(self.values, dtype=np.complex128).ravel()
        if vals.size != self.n**self.dim:
            raise ValueError(
                f"expected {self.n**self.dim} values for Z_{self.n}^{self.dim}, "
                f"got {vals.size}"
            )
        if not np.all(np.isfinite(vals)):
            raise ValueError("signal values must be finite")
        object.__setattr__(self, "values", vals)

    @property
    def grid(self) -> np.ndarray:
        """Values reshaped to (n,)*dim."""
        return self.values.reshape((self.n,) * self.dim)

    def norm(self) -> float:
        return float(np.linalg.norm(self.values))

    def inner(self, other: "FiniteSignal") -> complex:
        """<self, other> = sum self * conj(other)."""
        if (self.n, self.dim) != (other.n, other.dim):
            raise ValueError("signals live on different groups")
        return complex(np.vdot(other.values, self.values))

    def scaled(self, alpha: complex) -> "FiniteSignal":
        return FiniteSignal(self.n, self.dim, alpha * self.values)


@dataclass(frozen=True)
class TFArray:
    """Sampled STFT values on Z_n^m x Z_n^m with named axis semantics."""

    n: int
    m: int
    values: np.ndarray
    axis_roles: tuple = field(default=None)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.complex128)
        if vals.ndim != 2 * self.m:
            raise ValueError(f"expected rank {2 * self.m}, got rank {vals.ndim}")
        if vals.shape != (self.n,) * (2 * self.m):
            raise ValueError("all axes must have length n")
        object.__setattr__(self, "values", vals)
        roles = tuple(f"x{i + 1}" for i in range(self.m)) + tuple(
            f"xi{i + 1}" for i in range(self.m)
        )
        if self.axis_roles is None:
            object.__setattr__(self, "axis_roles", roles)
        elif tuple(self.axis_roles) != roles:
            raise ValueError("axis_roles must list every x before every xi")


def delta(n: int, dim: int = 1, at=0) -> FiniteSignal:
    """Point mass at `at` (scalar or index tuple)."""
    vals = np.zeros((n,) * dim, dtype=np.complex128)
    idx = (at,) * dim if np.isscalar(at) else tuple(at)
    vals[idx] = 1.0
    return FiniteSignal(n, dim, vals)


def constant(n: int, dim: int = 1, value: complex = 1.0) -> FiniteSignal:
    return FiniteSignal(n, dim, np.full(n**dim, value, dtype=np.complex128))


def periodized_gaussian(n: int, dim: int = 1) -> FiniteSignal:
    """Unit-norm periodization of exp(-pi t^2 / n), the standard window."""
    t = np.arange(n, dtype=float)
    g = np.zeros(n)
    for j in range(-4, 5):
        g += np.exp(-np.pi * (t + j * n) ** 2 / n)
    g /= np.linalg.norm(g)
    if dim == 1:
        return FiniteSignal(n, 1, g.astype(np.complex128))
    grid = reduce(np.multiply.outer, [g] * dim)
    grid /= np.linalg.norm(grid)
    return FiniteSignal(n, dim, grid.astype(np.complex128))


def random_signal(n: int, dim: int, rng: np.random.Generator) -> FiniteSignal:
    """I.i.d. standard complex Gaussian entries."""
    shape = (n,) * dim
    vals = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return FiniteSignal(n, dim, vals / np.sqrt(2.0))


def _index_vector(v, dim: int, name: str) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(v, dtype=np.int64))
    if arr.shape != (dim,):
        raise ValueError(f"{name} must have length {dim}")
    return arr


def tf_shift(f: FiniteSignal, k, l) -> FiniteSignal:
    """Time-frequency shift M_l T_k: t -> w^(l.t) f(t - k)."""
    k = _index_vector(k, f.dim, "k") % f.n
    l = _index_vector(l, f.dim, "l") % f.n
    shifted = np.roll(f.grid, tuple(k), axis=tuple(range(f.dim)))
    coords = np.indices((f.n,) * f.dim)
    phase = np.tensordot(l, coords, axes=(0, 0))
    out = np.exp(2j * np.pi * phase / f.n) * shifted
    return FiniteSignal(f.n, f.dim, out)


def dft(f: FiniteSignal) -> FiniteSignal:
    """Unitary DFT on Z_n^d."""
    out = scipy.fft.fftn(f.grid) * f.n ** (-f.dim / 2)
    return FiniteSignal(f.n, f.dim, out)


def idft(f: FiniteSignal) -> FiniteSignal:
    """Inverse of `dft`."""
    out = scipy.fft.ifftn(f.grid) * f.n ** (f.dim / 2)
    return FiniteSignal(f.n, f.dim, out)


@lru_cache(maxsize=4)
def _shift_index_table(n: int, dim: int) -> np.ndarray:
    """idx[k, t] = flat index of (t - k) mod n, both k, t flat over Z_n^dim."""
    coords = np.indices((n,) * dim).reshape(dim, -1)  # (dim, n^dim)
    diff = (coords[:, None, :] - coords[:, :, None]) % n  # (dim, k, t)
    flat = np.zeros((n**dim, n**dim), dtype=np.int64)
    for ax in range(dim):
        flat = flat * n + diff[ax]
    return flat.astype(np.int32 if n**dim < 2**31 else np.int64)


# Gathered conjugate-window tables are large (n^(2d) entries); keep only
# the most recent one, which covers the fixed-window/many-signals pattern.
_window_cache = {"key": None, "table": None}


def _window_table(g: FiniteSignal) -> np.ndarray:
    """windows[k, t] = conj(g)((t - k) mod n), flat over shifts and points."""
    key = (g.n, g.dim, g.values.tobytes())
    if _window_cache["key"] != key:
        idx = _shift_index_table(g.n, g.dim)
        _window_cache["key"] = key
        _window_cache["table"] = np.conj(g.values)[idx]
    return _window_cache["table"]


def stft(f: FiniteSignal, g: FiniteSignal) -> TFArray:
    """Short-time Fourier transform V_g f(k, l) = n^(-d/2) <f, M_l T_k g>."""
    if (f.n, f.dim) != (g.n, g.dim):
        raise ValueError("signal and window live on different groups")
    n, d = f.n, f.dim
    h = f.values[None, :] * _window_table(g)
    spec = scipy.fft.fftn(h.reshape((-1,) + (n,) * d),
                          axes=tuple(range(1, d + 1)), overwrite_x=True)
    vals = spec.reshape((n,) * (2 * d)) * n ** (-d / 2)
    return TFArray(n, d, vals)


def wiener_amalgam_norm(f: FiniteSignal, block_len: int) -> float:
    """Sum over consecutive length-L blocks of the local sup of |f| (d = 1)."""
    if f.dim != 1:
        raise ValueError("wiener_amalgam_norm is defined for d = 1")
    if block_len < 1 or f.n % block_len != 0:
        raise ValueError("block_len must divide n")
    blocks = np.abs(f.values).reshape(f.n // block_len, block_len)
    return float(blocks.max(axis=1).sum())
