"""Brute-force cross-checks for the transfer-matrix and teleportation paths.

Everything here recomputes its target from first principles: finite rings
are summed over all 2^N Ising configurations with numerically
diagonalised blocks (never the closed-form spectra), the teleportation
channel is the literal 16-term Pauli sum, and the average fidelity is a
Gauss-Legendre / uniform product quadrature over the input sphere. None
of the closed-form production formulas appear below.
"""

from __future__ import annotations

import numpy as np
from scipy.special import logsumexp

from .density import DimerDensity
from .errors import ChainTooLarge, ZeroPlaquettes
from .spectra import ISING_PAIRS, ChainParams, IsingPair, build_host_block, build_impurity_block
from .teleport import InputState

__all__ = [
    "enumerate_partition",
    "enumerate_impurity_density",
    "channel_probabilities",
    "channel_sum",
    "quadrature_average_fidelity",
]

_MAX_SITES = 20

# Ising value index 0 = up (+1/2), 1 = down (-1/2); grid of pairs (left, right).
_PAIR_GRID = {
    (0, 0): IsingPair.UP_UP,
    (0, 1): IsingPair.UP_DOWN,
    (1, 0): IsingPair.DOWN_UP,
    (1, 1): IsingPair.DOWN_DOWN,
}

_ID2 = np.eye(2, dtype=complex)
_SX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_SY = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
_SZ = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
_PAULIS = (_ID2, _SX, _SY, _SZ)

# Bell kets ordered so that entry i pairs with Pauli correction _PAULIS[i]
# for a protocol built around the singlet.
_BELLS = (
    np.array([0.0, 1.0, -1.0, 0.0]) / np.sqrt(2.0),  # |Psi->
    np.array([1.0, 0.0, 0.0, -1.0]) / np.sqrt(2.0),  # |Phi->
    np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2.0),   # |Phi+>
    np.array([0.0, 1.0, 1.0, 0.0]) / np.sqrt(2.0),   # |Psi+>
)

_KRONS = tuple(np.kron(si, sj) for si in _PAULIS for sj in _PAULIS)


def _validate_sites(n_plaquettes: int):
    if n_plaquettes < 1:
        raise ZeroPlaquettes(f"need at least one plaquette, got {n_plaquettes}")
    if n_plaquettes > _MAX_SITES:
        raise ChainTooLarge(
            f"enumeration capped at {_MAX_SITES} plaquettes, got {n_plaquettes}"
        )


def _diagonalised_blocks(p: ChainParams):
    """Numerically diagonalised blocks, their shift and shifted log-weights."""
    host_eigs = {s: np.linalg.eigh(build_host_block(p, s)) for s in ISING_PAIRS}
    imp_eigs = {s: np.linalg.eigh(build_impurity_block(p, s)) for s in ISING_PAIRS}
    shift = min(
        min(e.min() for e, _ in host_eigs.values()),
        min(e.min() for e, _ in imp_eigs.values()),
    )
    beta = p.beta
    logw = np.empty((2, 2))
    logwt = np.empty((2, 2))
    for (i, j), s in _PAIR_GRID.items():
        logw[i, j] = logsumexp(-beta * (host_eigs[s][0] - shift))
        logwt[i, j] = logsumexp(-beta * (imp_eigs[s][0] - shift))
    return host_eigs, imp_eigs, shift, logw, logwt


def _bond_indices(n_plaquettes: int):
    """Left/right Ising indices of every bond for all 2^N configurations."""
    confs = np.arange(2**n_plaquettes, dtype=np.int64)
    left = ((confs[:, None] >> np.arange(n_plaquettes)) & 1).astype(np.int8)
    right = np.roll(left, -1, axis=1)  # periodic: bond i joins sites i, i+1 mod N
    return left, right


def enumerate_partition(p: ChainParams, n_plaquettes: int) -> float:
    """log Z of the N-plaquette ring by explicit sum over Ising configurations.

    The impurity sits on bond 0; by cyclicity of the ring any position
    gives the same value.
    """
    _validate_sites(n_plaquettes)
    _, _, shift, logw, logwt = _diagonalised_blocks(p)
    left, right = _bond_indices(n_plaquettes)
    total = logwt[left[:, 0], right[:, 0]]
    if n_plaquettes > 1:
        total = total + logw[left[:, 1:], right[:, 1:]].sum(axis=1)
    return float(logsumexp(total) - n_plaquettes * p.beta * shift)


def enumerate_impurity_density(p: ChainParams, n_plaquettes: int) -> DimerDensity:
    """Exact reduced density of the impurity dimer on the N-plaquette ring.

    Sums the Boltzmann-weighted impurity block state over every Ising
    configuration, weighting each by the product of the other N-1 bond
    traces. Combination happens element-wise in log magnitude so strongly
    suppressed sectors cannot overflow on the way in.
    """
    _validate_sites(n_plaquettes)
    _, imp_eigs, shift, logw, logwt = _diagonalised_blocks(p)
    left, right = _bond_indices(n_plaquettes)
    if n_plaquettes > 1:
        env = logw[left[:, 1:], right[:, 1:]].sum(axis=1)
    else:
        env = np.zeros(left.shape[0])

    group = 2 * left[:, 0] + right[:, 0]
    log_z = logsumexp(env + logwt[left[:, 0], right[:, 0]])

    rho = np.zeros((4, 4))
    beta = p.beta
    for (i, j), s in _PAIR_GRID.items():
        mask = group == 2 * i + j
        if not mask.any():
            continue
        log_env = logsumexp(env[mask])
        evals, evecs = imp_eigs[s]
        block = (evecs * np.exp(-beta * (evals - shift))) @ evecs.T
        with np.errstate(divide="ignore"):
            rho += np.sign(block) * np.exp(np.log(np.abs(block)) + log_env - log_z)
    return DimerDensity(
        float(rho[0, 0]), float(rho[1, 1]), float(rho[2, 2]), float(rho[3, 3]), float(rho[1, 2])
    )


def channel_probabilities(rho: DimerDensity) -> np.ndarray:
    """Bell-projector overlaps tr(E_i rho) from the materialised channel."""
    mat = rho.as_matrix()
    return np.array([float(k @ mat @ k) for k in _BELLS])


def channel_sum(rho: DimerDensity, state: InputState) -> np.ndarray:
    """Literal 16-term depolarising-channel sum for one input state."""
    probs = channel_probabilities(rho)
    ket = state.ket()
    rho_in = np.outer(ket, ket.conj())
    out = np.zeros((4, 4), dtype=complex)
    for i in range(4):
        for j in range(4):
            k = _KRONS[4 * i + j]
            out += probs[i] * probs[j] * (k @ rho_in @ k)
    return out


def quadrature_average_fidelity(rho: DimerDensity, n_theta: int = 64, n_phi: int = 64) -> float:
    """Sphere-averaged fidelity by quadrature over the channel-sum output.

    Gauss-Legendre in cos(theta) crossed with a uniform periodic grid in
    phi; both directions are spectrally accurate for this smooth
    integrand, so 64x64 nodes reach ~1e-12 relative error.
    """
    nodes, weights = np.polynomial.legendre.leggauss(n_theta)
    thetas = np.arccos(nodes)
    phis = 2.0 * np.pi * np.arange(n_phi) / n_phi

    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    kets = np.zeros((n_theta, n_phi, 4), dtype=complex)
    kets[..., 1] = np.exp(1j * pp) * np.sin(0.5 * tt)
    kets[..., 2] = np.cos(0.5 * tt)
    kets = kets.reshape(-1, 4)

    probs = channel_probabilities(rho)
    coeff = np.outer(probs, probs).ravel()
    kstack = np.stack(_KRONS)
    rho_in = kets[:, :, None] * kets.conj()[:, None, :]
    out = np.einsum("k,kab,nbc,kcd->nad", coeff, kstack, rho_in, kstack, optimize=True)
    fid = np.einsum("na,nab,nb->n", kets.conj(), out, kets).real
    fid = fid.reshape(n_theta, n_phi)
    return float((weights @ fid).sum() / (2.0 * n_phi))
