"""Transfer-matrix weights, partition function and thermodynamic-limit gaps."""

import numpy as np
import pytest
from conftest import fig2_params, random_params

from diamondchain import (
    ChainParams,
    all_spectra,
    boltzmann_weights,
    check_thermo_limit,
    convergence_gaps,
    partition_function_finite,
    transfer_data_from_weights,
    weights_from_spectra,
)
from diamondchain.errors import NonPositiveTemperature, ZeroPlaquettes
from diamondchain.oracle import enumerate_partition
from diamondchain.spectra import ISING_PAIRS, build_host_block, build_impurity_block


def test_infinite_temperature_degeneracy():
    td = boltzmann_weights(fig2_params(T=1e6))
    for w in (td.w_pp, td.w_mm, td.w_pm, td.wt_pp, td.wt_mm, td.wt_pm):
        assert w == pytest.approx(4.0, rel=1e-5)
    assert np.isfinite(td.lambda_plus) and np.isfinite(td.lambda_minus)
    assert td.a + td.d == pytest.approx(td.wt_pp + td.wt_mm, rel=1e-12)


def test_host_limit_collapses_boundary_coefficients(rng):
    for _ in range(50):
        p = random_params(rng, alpha=0.0, eta=0.0, gamma=0.0, Omega=0.0)
        td = boltzmann_weights(p)
        assert td.a == pytest.approx(td.lambda_plus, rel=1e-12)
        assert td.d == pytest.approx(td.lambda_minus, rel=1e-12, abs=1e-12)


def test_weights_match_independent_resummation_fig2():
    # Re-sum exp(-beta e) from numerically diagonalised blocks, same shift.
    p = fig2_params(T=0.5, B=1.0)
    td = boltzmann_weights(p)
    beta = p.beta

    def resum(build, s):
        evals = np.linalg.eigvalsh(build(p, s))
        return np.exp(-beta * (evals - td.shift)).sum()

    from diamondchain import IsingPair

    assert td.w_pp == pytest.approx(resum(build_host_block, IsingPair.UP_UP), rel=1e-12)
    assert td.w_mm == pytest.approx(resum(build_host_block, IsingPair.DOWN_DOWN), rel=1e-12)
    assert td.w_pm == pytest.approx(resum(build_host_block, IsingPair.UP_DOWN), rel=1e-12)
    assert td.wt_pp == pytest.approx(resum(build_impurity_block, IsingPair.UP_UP), rel=1e-12)
    assert td.wt_mm == pytest.approx(resum(build_impurity_block, IsingPair.DOWN_DOWN), rel=1e-12)
    assert td.wt_pm == pytest.approx(resum(build_impurity_block, IsingPair.UP_DOWN), rel=1e-12)


def test_trace_identity_random(rng):
    for _ in range(200):
        td = boltzmann_weights(random_params(rng))
        assert td.a + td.d == pytest.approx(td.wt_pp + td.wt_mm, rel=1e-12)


def test_perron_gap_random(rng):
    for _ in range(200):
        td = boltzmann_weights(random_params(rng))
        assert td.lambda_plus > abs(td.lambda_minus)
        assert td.Q >= 0.0
        assert td.a > 0.0


def test_partition_single_plaquette_is_impurity_trace():
    p = fig2_params(T=0.7)
    td = boltzmann_weights(p)
    expected = np.log(td.wt_pp + td.wt_mm) - p.beta * td.shift
    assert partition_function_finite(p, 1) == pytest.approx(expected, rel=1e-14)


def test_partition_matches_enumeration(rng):
    for _ in range(10):
        p = random_params(rng, T=float(rng.uniform(0.2, 5.0)))
        for n in (2, 4, 7):
            assert partition_function_finite(p, n) == pytest.approx(
                enumerate_partition(p, n), abs=1e-10
            )


def test_partition_host_limit_matches_eigenvalue_powers(rng):
    for _ in range(20):
        p = random_params(rng, alpha=0.0, eta=0.0, gamma=0.0, Omega=0.0)
        td = boltzmann_weights(p)
        for n in (1, 3, 6):
            expected = np.log(td.lambda_plus**n + td.lambda_minus**n) - n * p.beta * td.shift
            assert partition_function_finite(p, n) == pytest.approx(expected, rel=1e-12)


def test_partition_large_ring_stays_finite():
    # 4000 plaquettes at beta = 50: the explicit power route must agree
    # with the eigenvalue closed form a * lambda_plus^(N-1).
    p = fig2_params(T=0.02, B=1.0)
    n = 4000
    logz = partition_function_finite(p, n)
    assert np.isfinite(logz)
    td = boltzmann_weights(p)
    tail = (td.d / td.a) * (td.lambda_minus / td.lambda_plus) ** (n - 1)
    expected = (
        np.log(td.a) + (n - 1) * np.log(td.lambda_plus) + np.log1p(tail)
        - n * p.beta * td.shift
    )
    assert logz == pytest.approx(expected, rel=1e-12)


def test_rank_one_transfer_matrix_converges_immediately():
    # w_pp * w_mm = w_pm^2 makes lambda_minus exactly zero.
    td = transfer_data_from_weights(4.0, 1.0, 2.0, 3.0, 2.0, 1.0)
    assert td.lambda_minus == 0.0
    report = convergence_gaps(td, [2, 3, 5, 9])
    assert report.rel_gaps == (0.0, 0.0, 0.0, 0.0)


def test_thermo_gap_fig2():
    p = fig2_params(T=0.5, B=1.0)
    report = check_thermo_limit(p, [2, 4, 8, 16, 32])
    gaps = np.array(report.rel_gaps)
    assert (np.diff(gaps) < 0).all()
    assert gaps[-1] < 1e-6


def test_gap_ratio_tracks_eigenvalue_ratio():
    p = fig2_params(T=0.5, B=1.0)
    report = check_thermo_limit(p, list(range(6, 13)))
    gaps = np.array(report.rel_gaps)
    ratios = gaps[1:] / gaps[:-1]
    np.testing.assert_allclose(ratios, report.eigen_ratio, rtol=5e-2)


def test_shift_invariance_of_transfer_ratios(rng):
    # A common offset on every block energy must not move any ratio quantity.
    p = random_params(rng)
    host, imp = all_spectra(p)
    offset = float(rng.uniform(-7.0, 7.0))
    host_s = {s: host[s].shifted(offset) for s in ISING_PAIRS}
    imp_s = {s: imp[s].shifted(offset) for s in ISING_PAIRS}
    td = weights_from_spectra(host, imp, p.T)
    td_s = weights_from_spectra(host_s, imp_s, p.T)
    assert td_s.shift == pytest.approx(td.shift + offset, abs=1e-12)
    for field in ("w_pp", "w_mm", "w_pm", "wt_pp", "wt_mm", "wt_pm", "lambda_plus", "lambda_minus", "Q", "a", "d"):
        assert getattr(td_s, field) == pytest.approx(getattr(td, field), rel=1e-12, abs=1e-300)


def test_validation_errors():
    with pytest.raises(NonPositiveTemperature):
        weights_from_spectra(*all_spectra(fig2_params()), -0.5)
    with pytest.raises(ZeroPlaquettes):
        partition_function_finite(fig2_params(), 0)
    with pytest.raises(ValueError):
        check_thermo_limit(fig2_params(), [4, 2])


def test_weight_positivity_at_tested_temperatures(rng):
    for _ in range(50):
        td = boltzmann_weights(random_params(rng, T=float(rng.uniform(0.05, 10.0))))
        for w in (td.w_pp, td.w_mm, td.w_pm, td.wt_pp, td.wt_mm, td.wt_pm):
            assert w > 0.0
