"""Boltzmann weights, the 2x2 transfer matrices and the partition function.

Every thermal quantity is computed from shifted exponentials
exp(-beta*(E - shift)) with ``shift`` the minimum energy over all eight
blocks, so that no exponent is positive; beta up to ~500 is then safe.
Absolute quantities (log Z) are reconstructed from the shift at the end.
The 2x2 eigenproblem is solved in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveTemperature, ZeroPlaquettes
from .spectra import ISING_PAIRS, BlockSpectrum, ChainParams, IsingPair, all_spectra

__all__ = [
    "TransferData",
    "ThermoConvergence",
    "weights_from_spectra",
    "transfer_data_from_weights",
    "boltzmann_weights",
    "partition_function_finite",
    "convergence_gaps",
    "check_thermo_limit",
]

# Below this the transfer matrix is numerically degenerate and the
# boundary coefficients collapse to their limit (wt_pp + wt_mm)/2.
_TINY_Q = 1e-300

# Diagonal weight differences below this many ulp of the weight scale are
# unresolvable rounding noise; treating them as exact degeneracy keeps the
# Perron vector correct when beta*gap drives w_pm under the noise floor.
_DIFF_NOISE = 32.0 * np.finfo(float).eps


def _clamped_diff(w_pp: float, w_mm: float) -> float:
    diff = w_pp - w_mm
    if abs(diff) < _DIFF_NOISE * (w_pp + w_mm):
        return 0.0
    return diff


def _perron_mixing(td: "TransferData"):
    """(cos^2, sin^2, cos*sin) of the Perron eigenvector angle of W.

    All three are non-negative, so contractions u+^T X u+ evaluate as
    positive combinations and cannot cancel catastrophically.
    """
    diff = _clamped_diff(td.w_pp, td.w_mm)
    return (
        0.5 * (1.0 + diff / td.Q),
        0.5 * (1.0 - diff / td.Q),
        td.w_pm / td.Q,
    )


@dataclass(frozen=True)
class TransferData:
    """Shifted Boltzmann weights and spectral data of the transfer matrix.

    ``w_*`` are host weights, ``wt_*`` impurity weights, both in the
    gauge where ``shift`` has been subtracted from every block energy.
    ``a`` and ``d`` are the boundary coefficients of the single impurity
    insertion: Z = a*lambda_plus^(N-1) + d*lambda_minus^(N-1).
    """

    w_pp: float
    w_mm: float
    w_pm: float
    wt_pp: float
    wt_mm: float
    wt_pm: float
    lambda_plus: float
    lambda_minus: float
    Q: float
    a: float
    d: float
    shift: float

    @property
    def host_matrix(self) -> np.ndarray:
        return np.array([[self.w_pp, self.w_pm], [self.w_pm, self.w_mm]])

    @property
    def impurity_matrix(self) -> np.ndarray:
        return np.array([[self.wt_pp, self.wt_pm], [self.wt_pm, self.wt_mm]])

    @property
    def eigen_ratio(self) -> float:
        """|lambda_minus| / lambda_plus, the finite-size convergence rate."""
        return abs(self.lambda_minus) / self.lambda_plus


@dataclass(frozen=True)
class ThermoConvergence:
    """Relative gaps |Z_N - a*lambda_plus^(N-1)| / Z_N for a list of N."""

    n_values: tuple
    rel_gaps: tuple
    eigen_ratio: float


def transfer_data_from_weights(w_pp, w_mm, w_pm, wt_pp, wt_mm, wt_pm, shift=0.0) -> TransferData:
    """Assemble TransferData from raw (already shifted) weights.

    a = u+^T Wt u+ and d = u-^T Wt u- are evaluated through the Perron
    angle of W, which is the closed form (4 w_pm wt_pm + ...) / (2Q)
    rearranged into a cancellation-free combination.
    """
    diff = _clamped_diff(w_pp, w_mm)
    q = float(np.hypot(diff, 2.0 * w_pm))
    lam_p = 0.5 * ((w_pp + w_mm) + q)
    lam_m = 0.5 * ((w_pp + w_mm) - q)
    if q < _TINY_Q:
        a = d = 0.5 * (wt_pp + wt_mm)
    else:
        cos2 = 0.5 * (1.0 + diff / q)
        sin2 = 0.5 * (1.0 - diff / q)
        cross = 2.0 * (w_pm / q) * wt_pm
        a = cos2 * wt_pp + sin2 * wt_mm + cross
        d = sin2 * wt_pp + cos2 * wt_mm - cross
    return TransferData(
        w_pp=w_pp, w_mm=w_mm, w_pm=w_pm,
        wt_pp=wt_pp, wt_mm=wt_mm, wt_pm=wt_pm,
        lambda_plus=lam_p, lambda_minus=lam_m, Q=q, a=a, d=d, shift=shift,
    )


def weights_from_spectra(host, imp, T: float) -> TransferData:
    """TransferData from precomputed block spectra at temperature T.

    The shift is the global minimum energy over all eight blocks. The
    left/right Ising symmetry of the weights is asserted, not assumed.
    """
    if not T > 0.0:
        raise NonPositiveTemperature(f"temperature must be > 0, got T={T}")
    beta = 1.0 / T
    shift = min(
        min(spec.energies.min() for spec in host.values()),
        min(spec.energies.min() for spec in imp.values()),
    )

    def weight(spec: BlockSpectrum) -> float:
        return float(np.exp(-beta * (spec.energies - shift)).sum())

    w = {s: weight(host[s]) for s in ISING_PAIRS}
    wt = {s: weight(imp[s]) for s in ISING_PAIRS}
    assert w[IsingPair.UP_DOWN] == w[IsingPair.DOWN_UP], "host weight symmetry broken"
    assert wt[IsingPair.UP_DOWN] == wt[IsingPair.DOWN_UP], "impurity weight symmetry broken"
    return transfer_data_from_weights(
        w[IsingPair.UP_UP], w[IsingPair.DOWN_DOWN], w[IsingPair.UP_DOWN],
        wt[IsingPair.UP_UP], wt[IsingPair.DOWN_DOWN], wt[IsingPair.UP_DOWN],
        shift=shift,
    )


def boltzmann_weights(p: ChainParams) -> TransferData:
    """TransferData of the chain described by ``p``."""
    host, imp = all_spectra(p)
    return weights_from_spectra(host, imp, p.T)


def _scaled_power(w: np.ndarray, n: int):
    """(M, log_scale) with M * exp(log_scale) = w^n, M kept O(1)."""
    power = np.eye(2)
    log_scale = 0.0
    for _ in range(n):
        power = power @ w
        peak = power.max()
        power /= peak
        log_scale += np.log(peak)
    return power, log_scale


def partition_function_finite(p: ChainParams, n_plaquettes: int) -> float:
    """log Z of the periodic N-plaquette ring with one impurity plaquette.

    Computed by an explicit 2x2 matrix power, Z = Tr(Wt W^(N-1)); the
    running product is rescaled so arbitrarily large N stays in range.
    """
    if n_plaquettes < 1:
        raise ZeroPlaquettes(f"need at least one plaquette, got {n_plaquettes}")
    td = boltzmann_weights(p)
    power, log_scale = _scaled_power(td.host_matrix, n_plaquettes - 1)
    trace = float(np.trace(td.impurity_matrix @ power))
    return float(np.log(trace) + log_scale - n_plaquettes * p.beta * td.shift)


def convergence_gaps(td: TransferData, n_values) -> ThermoConvergence:
    """Relative truncation error of keeping only the leading eigenvalue.

    gap(N) = |d| |lambda_minus|^(N-1) / Z_N, evaluated through the ratio
    x = (d/a) (lambda_minus/lambda_plus)^(N-1) so powers never overflow.
    Requires |lambda_minus| < lambda_plus and a > 0, which holds for any
    strictly positive weight matrix (Perron-Frobenius).
    """
    gaps = []
    ratio = td.lambda_minus / td.lambda_plus
    for n in n_values:
        if n < 1:
            raise ZeroPlaquettes(f"need at least one plaquette, got {n}")
        x = (td.d / td.a) * ratio ** (n - 1)
        gaps.append(abs(x) / (1.0 + x))
    return ThermoConvergence(tuple(n_values), tuple(gaps), td.eigen_ratio)


def check_thermo_limit(p: ChainParams, n_values) -> ThermoConvergence:
    """Finite-N vs thermodynamic-limit gap report for ascending ``n_values``."""
    n_values = list(n_values)
    if any(b <= a for a, b in zip(n_values, n_values[1:])):
        raise ValueError("n_values must be strictly ascending")
    return convergence_gaps(boltzmann_weights(p), n_values)
