"""Reduced two-qubit density matrix of the distorted dimer in the infinite chain.

The reduced state is an X-form matrix with zero corners,

    [[r11, 0,   0,   0  ],
     [0,   r22, r23, 0  ],
     [0,   r23, r33, 0  ],
     [0,   0,   0,   r44]],

stored as its five independent reals. The production path is the closed
form rho_kl = (A_kl + B_kl) / M built from the transfer-matrix data; the
finite-ring trace route Tr(P_kl W^(N-1)) / Z is kept as an independent
check of the same algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ZeroPlaquettes
from .spectra import ISING_PAIRS, BlockSpectrum, ChainParams, IsingPair, all_spectra
from .transfer import _TINY_Q, _perron_mixing, _scaled_power, weights_from_spectra

__all__ = [
    "DimerDensity",
    "unnormalized_block_operator",
    "density_from_spectra",
    "impurity_density",
    "host_density",
    "impurity_density_finite",
]


@dataclass(frozen=True)
class DimerDensity:
    """Five independent reals of the X-form two-qubit thermal state."""

    r11: float
    r22: float
    r33: float
    r44: float
    r23: float

    def as_matrix(self) -> np.ndarray:
        """Materialise the full 4x4 matrix."""
        return np.array(
            [
                [self.r11, 0.0, 0.0, 0.0],
                [0.0, self.r22, self.r23, 0.0],
                [0.0, self.r23, self.r33, 0.0],
                [0.0, 0.0, 0.0, self.r44],
            ]
        )

    @property
    def populations(self):
        return (self.r11, self.r22, self.r33, self.r44)


def unnormalized_block_operator(spec: BlockSpectrum, beta: float, shift: float = 0.0) -> np.ndarray:
    """Projector expansion sum_k exp(-beta*(E_k - shift)) |k><k| of one block.

    The trace equals the block's (shifted) Boltzmann weight. The shift
    must match the one used for the transfer weights it is combined with.
    """
    w = np.exp(-beta * (spec.energies - shift))
    return (spec.eigvecs * w) @ spec.eigvecs.T


def density_from_spectra(host, imp, T: float) -> DimerDensity:
    """Thermodynamic-limit reduced density from precomputed block spectra.

    The off-diagonal (domain-wall) term uses the symmetrised average of
    the (+,-) and (-,+) block operators: the impurity block operator is
    not symmetric under swapping the Ising pair once J1 != J2 (its 22 and
    33 entries trade places), and only the symmetric part survives the
    contraction with the Perron vector.
    """
    td = weights_from_spectra(host, imp, T)
    beta = 1.0 / T
    block = {s: unnormalized_block_operator(imp[s], beta, td.shift) for s in ISING_PAIRS}
    b_pp = block[IsingPair.UP_UP]
    b_mm = block[IsingPair.DOWN_DOWN]
    b_cross = block[IsingPair.UP_DOWN] + block[IsingPair.DOWN_UP]

    if td.Q < _TINY_Q:
        rho = (b_pp + b_mm) / (td.wt_pp + td.wt_mm)
    else:
        # (A + B)/M divided through by 2Q: a positive combination of PSD
        # blocks normalised by its own trace a, so rho is PSD by construction.
        cos2, sin2, cs = _perron_mixing(td)
        rho = (cos2 * b_pp + sin2 * b_mm + cs * b_cross) / td.a
    return DimerDensity(
        float(rho[0, 0]), float(rho[1, 1]), float(rho[2, 2]), float(rho[3, 3]), float(rho[1, 2])
    )


def impurity_density(p: ChainParams) -> DimerDensity:
    """Reduced density of the distorted dimer in the infinite chain."""
    host, imp = all_spectra(p)
    return density_from_spectra(host, imp, p.T)


def host_density(p: ChainParams) -> DimerDensity:
    """Reduced density of a host dimer: the distortions of ``p`` are zeroed."""
    return impurity_density(p.without_distortion())


def impurity_density_finite(p: ChainParams, n_plaquettes: int) -> DimerDensity:
    """Reduced density on a finite ring of N plaquettes via the trace route.

    rho_kl = Tr(P_kl W^(N-1)) / Tr(Wt W^(N-1)) with P_kl the 2x2 matrix of
    block-operator elements over the Ising pair. Converges geometrically
    to ``impurity_density`` with rate |lambda_minus|/lambda_plus.
    """
    if n_plaquettes < 1:
        raise ZeroPlaquettes(f"need at least one plaquette, got {n_plaquettes}")
    host, imp = all_spectra(p)
    td = weights_from_spectra(host, imp, p.T)
    beta = 1.0 / p.T
    block = {s: unnormalized_block_operator(imp[s], beta, td.shift) for s in ISING_PAIRS}

    power, _ = _scaled_power(td.host_matrix, n_plaquettes - 1)  # scale cancels in the ratio
    grid = {
        IsingPair.UP_UP: (0, 0),
        IsingPair.UP_DOWN: (0, 1),
        IsingPair.DOWN_UP: (1, 0),
        IsingPair.DOWN_DOWN: (1, 1),
    }
    rho = np.zeros((4, 4))
    z = 0.0
    for s, (i, j) in grid.items():
        rho += block[s] * power[j, i]
        z += float(np.trace(block[s])) * power[j, i]
    rho /= z
    return DimerDensity(
        float(rho[0, 0]), float(rho[1, 1]), float(rho[2, 2]), float(rho[3, 3]), float(rho[1, 2])
    )
