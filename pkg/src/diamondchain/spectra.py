"""Dimer-block Hamiltonians of the diamond chain and their exact spectra.

The chain alternates classical Ising spins mu = +-1/2 with quantum XXZ
dimers. Because every Ising operator commutes with the Hamiltonian, the
problem splits into 4x4 dimer blocks labelled by the adjacent Ising pair
(mu_left, mu_right). Blocks are real symmetric in the ordered product
basis {|00>, |01>, |10>, |11>} with |0> = spin up (S^z = +1/2).

One plaquette of the chain (the "impurity") carries distorted couplings
J1 = J0(1+eta), J2 = J0(1+gamma), J(1+alpha) and Delta(1+Omega); the rest
(the "host") is uniform. The explicitly constructed block matrices are
the source of truth; the closed-form spectra are the fast path and are
reconciled against direct diagonalization in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from .errors import NonPositiveTemperature

__all__ = [
    "ChainParams",
    "IsingPair",
    "ISING_PAIRS",
    "BlockSpectrum",
    "build_host_block",
    "build_impurity_block",
    "eval_host_energies",
    "eval_impurity_energies",
    "all_spectra",
]


class IsingPair(Enum):
    """The four assignments of the two Ising neighbours of a dimer."""

    UP_UP = (0.5, 0.5)
    UP_DOWN = (0.5, -0.5)
    DOWN_UP = (-0.5, 0.5)
    DOWN_DOWN = (-0.5, -0.5)

    @property
    def mu_left(self) -> float:
        return self.value[0]

    @property
    def mu_right(self) -> float:
        return self.value[1]

    @property
    def mu_sum(self) -> float:
        return self.value[0] + self.value[1]


ISING_PAIRS = (
    IsingPair.UP_UP,
    IsingPair.UP_DOWN,
    IsingPair.DOWN_UP,
    IsingPair.DOWN_DOWN,
)


@dataclass(frozen=True)
class ChainParams:
    """Couplings, field and temperature of the chain (k_B = 1, J sets the unit).

    The distorted-plaquette couplings J1, J2, J_imp, Delta_imp are derived
    quantities and are recomputed on every access, never stored.
    """

    J: float = 1.0
    Delta: float = 1.0
    J0: float = 1.0
    B: float = 0.0
    T: float = 1.0
    alpha: float = 0.0
    eta: float = 0.0
    gamma: float = 0.0
    Omega: float = 0.0

    def __post_init__(self):
        if not self.T > 0.0:
            raise NonPositiveTemperature(f"temperature must be > 0, got T={self.T}")

    @property
    def beta(self) -> float:
        return 1.0 / self.T

    @property
    def J1(self) -> float:
        return self.J0 * (1.0 + self.eta)

    @property
    def J2(self) -> float:
        return self.J0 * (1.0 + self.gamma)

    @property
    def J_imp(self) -> float:
        return self.J * (1.0 + self.alpha)

    @property
    def Delta_imp(self) -> float:
        return self.Delta * (1.0 + self.Omega)

    def without_distortion(self) -> "ChainParams":
        """Same chain with the plaquette distortions switched off."""
        return replace(self, alpha=0.0, eta=0.0, gamma=0.0, Omega=0.0)


@dataclass(frozen=True)
class BlockSpectrum:
    """Eigenvalues and eigenvectors of one dimer block.

    Level order follows the block structure, not energy: level 0 is |00>,
    levels 1 and 2 are the central pair (coefficients (M, N) on |01>, |10>;
    level 1 carries the +sqrt(Sigma^2+J^2)/2 branch), level 3 is |11>.
    ``eigvecs[:, k]`` is the k-th eigenvector.
    """

    energies: np.ndarray
    eigvecs: np.ndarray

    def __post_init__(self):
        self.energies.setflags(write=False)
        self.eigvecs.setflags(write=False)

    @property
    def m_plus(self) -> float:
        return float(self.eigvecs[1, 1])

    @property
    def n_plus(self) -> float:
        return float(self.eigvecs[2, 1])

    @property
    def m_minus(self) -> float:
        return float(self.eigvecs[1, 2])

    @property
    def n_minus(self) -> float:
        return float(self.eigvecs[2, 2])

    def shifted(self, offset: float) -> "BlockSpectrum":
        """Same spectrum with every energy displaced by ``offset``."""
        return BlockSpectrum(self.energies + offset, self.eigvecs)


# Two-spin operators in the ordered basis {|00>, |01>, |10>, |11>}.
_SZ_A = np.diag([0.5, 0.5, -0.5, -0.5])
_SZ_B = np.diag([0.5, -0.5, 0.5, -0.5])
_SZSZ = np.diag([0.25, -0.25, -0.25, 0.25])
_XYFLIP = np.zeros((4, 4))
_XYFLIP[1, 2] = _XYFLIP[2, 1] = 0.5  # S^x S^x + S^y S^y
_ID4 = np.eye(4)
for _op in (_SZ_A, _SZ_B, _SZSZ, _XYFLIP, _ID4):
    _op.setflags(write=False)


def build_host_block(p: ChainParams, s: IsingPair) -> np.ndarray:
    """4x4 block of a host plaquette for the fixed Ising pair ``s``."""
    m = s.mu_sum
    h = p.J * (_XYFLIP + p.Delta * _SZSZ)
    h += p.J0 * m * (_SZ_A + _SZ_B)
    h -= p.B * (_SZ_A + _SZ_B)
    h -= 0.5 * p.B * m * _ID4
    return h


def build_impurity_block(p: ChainParams, s: IsingPair) -> np.ndarray:
    """4x4 block of the distorted plaquette for the fixed Ising pair ``s``.

    The two dimer spins couple to the Ising neighbours in a crossed
    pattern: spin a feels J1*mu_left + J2*mu_right, spin b the swap.
    """
    field_a = p.J1 * s.mu_left + p.J2 * s.mu_right
    field_b = p.J1 * s.mu_right + p.J2 * s.mu_left
    h = p.J_imp * (_XYFLIP + p.Delta_imp * _SZSZ)
    h += field_a * _SZ_A + field_b * _SZ_B
    h -= p.B * (_SZ_A + _SZ_B)
    h -= 0.5 * p.B * s.mu_sum * _ID4
    return h


def _central_eigvecs(j_xy: float, sigma: float):
    """Normalised eigenvectors of the central block [[sigma, j], [j, -sigma]]/2.

    Returns ((M_hi, N_hi), (M_lo, N_lo)) as coefficients on (|01>, |10>);
    "hi" belongs to the +sqrt(sigma^2+j^2)/2 eigenvalue. The j == 0 cases
    are spelled out because the generic quotient degenerates to 0/0 there;
    elsewhere the subtraction sqrt(sigma^2+j^2) - |sigma| is replaced by
    j^2/(sqrt(..) + |sigma|) to avoid cancellation.
    """
    if j_xy == 0.0:
        if sigma < 0.0:
            return (0.0, 1.0), (1.0, 0.0)
        if sigma > 0.0:
            return (1.0, 0.0), (0.0, -1.0)
        return (1.0, 0.0), (0.0, 1.0)  # degenerate pair: plain |01>, |10>

    r = float(np.hypot(sigma, j_xy))
    t_hi = j_xy * j_xy / (r + sigma) if sigma > 0.0 else r - sigma
    h_hi = float(np.hypot(j_xy, t_hi))
    t_lo = j_xy * j_xy / (r - sigma) if sigma < 0.0 else r + sigma
    h_lo = float(np.hypot(j_xy, t_lo))
    return (j_xy / h_hi, t_hi / h_hi), (j_xy / h_lo, -t_lo / h_lo)


def _dimer_spectrum(j_xy, zz_quarter, iso_mean, sigma, m, field) -> BlockSpectrum:
    """Closed-form spectrum of one dimer block.

    ``zz_quarter`` is J*Delta/4 of the block, ``iso_mean`` the mean Ising
    coupling seen by the dimer, ``sigma`` the antisymmetric Ising field on
    the central pair and ``m`` the Ising pair sum.
    """
    r = float(np.hypot(sigma, j_xy))
    e1 = zz_quarter + (iso_mean - 0.5 * field) * m - field
    e2 = -zz_quarter - 0.5 * field * m + 0.5 * r
    e3 = -zz_quarter - 0.5 * field * m - 0.5 * r
    e4 = zz_quarter - (iso_mean + 0.5 * field) * m + field
    (m_hi, n_hi), (m_lo, n_lo) = _central_eigvecs(j_xy, sigma)
    vecs = np.array(
        [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, m_hi, m_lo, 0.0],
            [0.0, n_hi, n_lo, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ]
    )
    return BlockSpectrum(np.array([e1, e2, e3, e4]), vecs)


def eval_host_energies(p: ChainParams, s: IsingPair) -> BlockSpectrum:
    """Closed-form spectrum of a host block; depends on s only via mu_sum."""
    return _dimer_spectrum(p.J, 0.25 * p.J * p.Delta, p.J0, 0.0, s.mu_sum, p.B)


def eval_impurity_energies(p: ChainParams, s: IsingPair) -> BlockSpectrum:
    """Closed-form spectrum of the impurity block.

    With all distortions zero this reproduces ``eval_host_energies``
    bitwise, so downstream thermal quantities of the two code paths
    coincide exactly in the host limit.
    """
    sigma = (p.J1 - p.J2) * (s.mu_left - s.mu_right)
    return _dimer_spectrum(
        p.J_imp,
        0.25 * p.J_imp * p.Delta_imp,
        0.5 * (p.J1 + p.J2),
        sigma,
        s.mu_sum,
        p.B,
    )


def all_spectra(p: ChainParams):
    """Closed-form spectra of all eight blocks, keyed by Ising pair."""
    host = {s: eval_host_energies(p, s) for s in ISING_PAIRS}
    imp = {s: eval_impurity_energies(p, s) for s in ISING_PAIRS}
    return host, imp
