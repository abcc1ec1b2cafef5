"""Shared fixtures and random-state factories for the test suite."""

import numpy as np
import pytest

from diamondchain import ChainParams, DimerDensity

# Distortions of the reference "fig2" comparison point.
FIG2_DISTORTION = dict(alpha=0.0, eta=-0.5, gamma=-0.6, Omega=0.8)


def fig2_params(B=1.0, T=0.5, **overrides) -> ChainParams:
    kw = dict(J=1.0, Delta=1.0, J0=1.0, B=B, T=T, **FIG2_DISTORTION)
    kw.update(overrides)
    return ChainParams(**kw)


def random_params(rng, **overrides) -> ChainParams:
    """One broad random parameter draw (J > 0; every distortion exercised)."""
    kw = dict(
        J=rng.uniform(0.3, 2.0),
        Delta=rng.uniform(0.0, 2.0),
        J0=rng.uniform(-1.5, 2.0),
        B=rng.uniform(0.0, 3.0),
        T=rng.uniform(0.05, 5.0),
        alpha=rng.uniform(-1.0, 1.0),
        eta=rng.uniform(-1.5, 1.0),
        gamma=rng.uniform(-1.5, 1.0),
        Omega=rng.uniform(-1.0, 1.0),
    )
    kw.update(overrides)
    return ChainParams(**kw)


def edge_draws(rng, n):
    """Random draws with the degenerate branches (eta=-1, Sigma=0, J_imp=0) mixed in."""
    draws = []
    for k in range(n):
        if k % 10 == 7:
            draws.append(random_params(rng, eta=-1.0))
        elif k % 10 == 8:
            g = rng.uniform(-1.5, 1.0)
            draws.append(random_params(rng, eta=g, gamma=g))  # J1 = J2 -> Sigma = 0
        elif k % 10 == 9:
            draws.append(random_params(rng, alpha=-1.0))  # J_imp = 0
        else:
            draws.append(random_params(rng))
    return draws


def random_x_state(rng) -> DimerDensity:
    """Random valid X-form density (PSD central block, zero corners)."""
    pops = rng.dirichlet(np.ones(4))
    r23 = rng.uniform(-1.0, 1.0) * np.sqrt(pops[1] * pops[2])
    return DimerDensity(pops[0], pops[1], pops[2], pops[3], float(r23))


def random_density(rng) -> np.ndarray:
    """Random full two-qubit density matrix (Ginibre ensemble)."""
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


SINGLET = DimerDensity(0.0, 0.5, 0.5, 0.0, -0.5)
MAXIMALLY_MIXED = DimerDensity(0.25, 0.25, 0.25, 0.25, 0.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
