"""Entanglement (Wootters concurrence) and l1-norm coherence of a dimer state."""

from __future__ import annotations

import numpy as np

from .density import DimerDensity
from .errors import NotADensityMatrix

__all__ = ["concurrence_x", "concurrence_general", "coherence_l1"]

# sigma_y (x) sigma_y, real in this basis
_SYSY = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)
_SYSY.setflags(write=False)

_DM_TOL = 1e-8


def concurrence_x(rho: DimerDensity) -> float:
    """Concurrence of the X-form state: 2 max(|r23| - sqrt(r11 r44), 0)."""
    corner = np.sqrt(max(rho.r11, 0.0) * max(rho.r44, 0.0))
    return max(2.0 * (abs(rho.r23) - corner), 0.0)


def concurrence_general(rho: np.ndarray) -> float:
    """Wootters concurrence of an arbitrary two-qubit density matrix.

    Eigenvalues of R = rho (sy x sy) rho* (sy x sy) are taken in decreasing
    order; tiny negatives from floating-point drift are clamped to zero
    before the square roots.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise NotADensityMatrix(f"expected a 4x4 matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > _DM_TOL:
        raise NotADensityMatrix("matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > _DM_TOL or abs(np.trace(rho).imag) > _DM_TOL:
        raise NotADensityMatrix("trace is not 1")
    if np.linalg.eigvalsh(rho).min() < -_DM_TOL:
        raise NotADensityMatrix("matrix is not positive semidefinite")

    r = rho @ _SYSY @ rho.conj() @ _SYSY
    lam = np.clip(np.linalg.eigvals(r).real, 0.0, None)
    roots = np.sort(np.sqrt(lam))[::-1]
    return max(0.0, float(roots[0] - roots[1] - roots[2] - roots[3]))


def coherence_l1(rho: DimerDensity) -> float:
    """l1-norm coherence: the sum of absolute off-diagonal elements, 2|r23|."""
    return 2.0 * abs(rho.r23)
