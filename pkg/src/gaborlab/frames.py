"""Gabor systems on separable lattices aZ_n x bZ_n (d = 1).

Frame operator, frame bounds, dual and canonical tight windows,
analysis/synthesis maps and the lattice-vs-full-lattice norm
equivalence check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .mixednorm import ExponentVector, Permutation, mixed_modulation_norm, mixed_norm
from .operators import OperatorMatrix
from .signals import FiniteSignal

__all__ = [
    "NotAFrameError",
    "GaborSystem",
    "frame_operator",
    "frame_bounds",
    "dual_window",
    "canonical_tight_window",
    "analyze",
    "synthesize",
    "banach_frame_equivalence",
]

# Relative eigenvalue floor below which a frame operator counts as singular.
EIG_FLOOR = 1e-12


class NotAFrameError(ValueError):
    """The Gabor system does not span C^n."""


@dataclass(frozen=True)
class GaborSystem:
    """Window plus time step a and frequency step b, both dividing n."""

    window: FiniteSignal
    a: int
    b: int

    def __post_init__(self):
        if self.window.dim != 1:
            raise ValueError("Gabor systems are built from d = 1 windows")
        n = self.window.n
        if self.a < 1 or self.b < 1 or n % self.a or n % self.b:
            raise ValueError("a and b must be positive divisors of n")
        if self.window.norm() == 0.0:
            raise ValueError("window must be nonzero")

    @property
    def n(self) -> int:
        return self.window.n

    @property
    def time_nodes(self) -> np.ndarray:
        return np.arange(0, self.n, self.a)

    @property
    def freq_nodes(self) -> np.ndarray:
        return np.arange(0, self.n, self.b)

    def with_window(self, window: FiniteSignal) -> "GaborSystem":
        return GaborSystem(window, self.a, self.b)


def _element_rows(sys: GaborSystem, window: FiniteSignal = None) -> np.ndarray:
    """Rows M_l T_k g over the lattice, ordered (time-major, then frequency)."""
    g = (window or sys.window).values
    n = sys.n
    t = np.arange(n)
    shifts = np.stack([np.roll(g, k) for k in sys.time_nodes])  # (n/a, n)
    mods = np.exp(2j * np.pi * np.outer(sys.freq_nodes, t) / n)  # (n/b, n)
    rows = shifts[:, None, :] * mods[None, :, :]
    return rows.reshape(-1, n)


def frame_operator(sys: GaborSystem) -> OperatorMatrix:
    """S f = sum over the lattice of <f, M_l T_k g> M_l T_k g."""
    rows = _element_rows(sys)
    return OperatorMatrix(sys.n, rows.T @ rows.conj())


def frame_bounds(sys: GaborSystem) -> tuple:
    """(A, B) = extreme eigenvalues of the frame operator; A = 0 for non-frames."""
    eigs = np.linalg.eigvalsh(frame_operator(sys).entries)
    a, b = float(eigs[0]), float(eigs[-1])
    return (max(a, 0.0), b)


def _spectral_power(sys: GaborSystem, power: float) -> np.ndarray:
    s = frame_operator(sys).entries
    eigs, vecs = np.linalg.eigh(s)
    if eigs[0] <= EIG_FLOOR * max(eigs[-1], 1.0):
        raise NotAFrameError(
            f"Gabor system with a={sys.a}, b={sys.b} on Z_{sys.n} is not a frame "
            f"(smallest eigenvalue {eigs[0]:.3e})"
        )
    return (vecs * eigs**power) @ vecs.conj().T


def dual_window(sys: GaborSystem) -> FiniteSignal:
    """Canonical dual gamma = S^(-1) g."""
    return FiniteSignal(sys.n, 1, _spectral_power(sys, -1.0) @ sys.window.values)


def canonical_tight_window(sys: GaborSystem) -> FiniteSignal:
    """Parseval-izing window S^(-1/2) g."""
    return FiniteSignal(sys.n, 1, _spectral_power(sys, -0.5) @ sys.window.values)


def analyze(sys: GaborSystem, f: FiniteSignal) -> np.ndarray:
    """Coefficients <f, M_l T_k g> as an (n/a, n/b) array (time axis first)."""
    if f.dim != 1 or f.n != sys.n:
        raise ValueError("signal must live on the system's Z_n")
    rows = _element_rows(sys)
    coeffs = rows.conj() @ f.values
    return coeffs.reshape(len(sys.time_nodes), len(sys.freq_nodes))


def synthesize(sys: GaborSystem, coeffs: np.ndarray) -> FiniteSignal:
    """Adjoint of analyze: sum of coeffs[k, l] * M_l T_k g."""
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    shape = (len(sys.time_nodes), len(sys.freq_nodes))
    if coeffs.shape != shape:
        raise ValueError(f"coefficient array must have shape {shape}")
    rows = _element_rows(sys)
    return FiniteSignal(sys.n, 1, rows.T @ coeffs.ravel())


def banach_frame_equivalence(sys: GaborSystem, c: Permutation, exps: ExponentVector,
                             testset) -> tuple:
    """Extremes of lattice-norm / full-lattice-modulation-norm ratios.

    The lattice coefficients are rescaled by n^(-1/2) so that at the full
    lattice (a = b = 1) they coincide with STFT samples and every ratio
    is exactly 1.
    """
    frame_bounds_check(sys)
    ratios = []
    scale = sys.n ** (-0.5)
    for f in testset:
        num = mixed_norm(scale * analyze(sys, f), c, exps)
        den = mixed_modulation_norm(f, sys.window, c, exps)
        ratios.append(num / den)
    if not ratios:
        raise ValueError("testset must be nonempty")
    return (min(ratios), max(ratios))


def frame_bounds_check(sys: GaborSystem) -> tuple:
    """frame_bounds, raising NotAFrameError when the lower bound vanishes."""
    a, b = frame_bounds(sys)
    if a <= EIG_FLOOR * max(b, 1.0):
        raise NotAFrameError(f"lower frame bound {a:.3e} vanishes")
    return (a, b)
