"""Teleportation channel: probabilities, output state, fidelities."""

import numpy as np
import pytest
from conftest import MAXIMALLY_MIXED, SINGLET, fig2_params, random_x_state

from diamondchain import (
    CLASSICAL_FIDELITY,
    InputState,
    average_fidelity,
    bell_probabilities,
    concurrence_general,
    concurrence_out,
    concurrence_out_imbalance,
    fidelity,
    impurity_density,
    output_state,
)
from diamondchain.oracle import channel_probabilities, channel_sum, quadrature_average_fidelity


def test_bell_probabilities_limits():
    np.testing.assert_allclose(bell_probabilities(SINGLET), [1.0, 0.0, 0.0, 0.0], atol=1e-15)
    np.testing.assert_allclose(bell_probabilities(MAXIMALLY_MIXED), [0.25] * 4, atol=1e-15)


def test_bell_probabilities_match_projector_traces(rng):
    for _ in range(200):
        rho = random_x_state(rng)
        probs = bell_probabilities(rho)
        np.testing.assert_allclose(probs, channel_probabilities(rho), atol=1e-12)
        assert probs.sum() == pytest.approx(1.0, abs=1e-12)
        assert (probs >= -1e-15).all()


def test_singlet_channel_is_identity():
    state = InputState(1.1, 2.3)
    out = output_state(SINGLET, state)
    rho_in = np.outer(state.ket(), state.ket().conj())
    np.testing.assert_allclose(out.as_matrix(), rho_in, atol=1e-15)
    assert fidelity(SINGLET, state) == pytest.approx(1.0, abs=1e-12)


def test_maximally_mixed_channel_depolarises_completely():
    out = output_state(MAXIMALLY_MIXED, InputState(0.7, 0.1))
    assert out.c == pytest.approx(0.25, abs=1e-15)
    assert out.f == pytest.approx(0.25, abs=1e-15)
    assert out.g == pytest.approx(0.25, abs=1e-15)
    assert out.chi == 0.0
    assert average_fidelity(MAXIMALLY_MIXED) == pytest.approx(0.25, abs=1e-15)


def test_output_state_invariants(rng):
    for _ in range(200):
        rho = random_x_state(rng)
        state = InputState(float(rng.uniform(0, np.pi)), float(rng.uniform(0, 2 * np.pi)))
        out = output_state(rho, state)
        assert 2 * out.c + out.f + out.g == pytest.approx(1.0, abs=1e-12)
        assert min(out.c, out.f, out.g) >= 0.0
        assert abs(out.chi) <= np.sqrt(out.f * out.g) + 1e-10


def test_output_matches_channel_sum_oracle(rng):
    for _ in range(300):
        rho = random_x_state(rng)
        state = InputState(float(rng.uniform(0, np.pi)), float(rng.uniform(0, 2 * np.pi)))
        np.testing.assert_allclose(
            output_state(rho, state).as_matrix(), channel_sum(rho, state), atol=1e-10
        )


def test_output_matches_oracle_fig2_point():
    rho = impurity_density(fig2_params(T=0.5, B=1.0))
    state = InputState(np.pi / 2, 0.0)
    np.testing.assert_allclose(
        output_state(rho, state).as_matrix(), channel_sum(rho, state), atol=1e-10
    )


def test_concurrence_out_limits():
    assert concurrence_out(SINGLET, InputState(np.pi / 2)) == pytest.approx(1.0, abs=1e-12)
    assert concurrence_out_imbalance(SINGLET, InputState(np.pi / 2)) == pytest.approx(1.0, abs=1e-12)
    # theta = 0: product input, diagonal output, no entanglement survives
    for rho in (SINGLET, MAXIMALLY_MIXED):
        assert concurrence_out(rho, InputState(0.0)) == 0.0


def test_concurrence_out_equals_wootters_of_output(rng):
    rho = impurity_density(fig2_params(T=0.3, B=1.0))
    state = InputState(np.pi / 2)
    assert concurrence_out(rho, state) == pytest.approx(
        concurrence_general(output_state(rho, state).as_matrix()), abs=1e-10
    )
    for _ in range(100):
        ch = random_x_state(rng)
        st = InputState(float(rng.uniform(0, np.pi)), float(rng.uniform(0, 2 * np.pi)))
        assert concurrence_out(ch, st) == pytest.approx(
            concurrence_general(output_state(ch, st).as_matrix()), abs=1e-10
        )


def test_fidelity_closed_form_matches_expectation_value(rng):
    for _ in range(200):
        rho = random_x_state(rng)
        state = InputState(float(rng.uniform(0, np.pi)), float(rng.uniform(0, 2 * np.pi)))
        ket = state.ket()
        direct = float((ket.conj() @ output_state(rho, state).as_matrix() @ ket).real)
        assert fidelity(rho, state) == pytest.approx(direct, abs=1e-12)


def test_fidelity_special_inputs(rng):
    for phi in np.linspace(0.0, 2 * np.pi, 7):
        assert fidelity(SINGLET, InputState(0.42, float(phi))) == pytest.approx(1.0, abs=1e-12)
    rho = random_x_state(rng)
    mid = rho.r22 + rho.r33
    assert fidelity(rho, InputState(0.0)) == pytest.approx(mid**2, abs=1e-12)
    assert fidelity(MAXIMALLY_MIXED, InputState(1.0, 2.0)) == pytest.approx(0.25, abs=1e-12)


def test_fidelity_phi_independence(rng):
    rho = random_x_state(rng)
    theta = 1.234
    base = fidelity(rho, InputState(theta, 0.0))
    for phi in np.linspace(0.0, 2 * np.pi, 9):
        assert fidelity(rho, InputState(theta, float(phi))) == pytest.approx(base, abs=1e-12)
        ket = InputState(theta, float(phi)).ket()
        direct = float((ket.conj() @ output_state(rho, InputState(theta, float(phi))).as_matrix() @ ket).real)
        assert direct == pytest.approx(base, abs=1e-12)


def test_average_fidelity_limits_and_quadrature(rng):
    assert average_fidelity(SINGLET) == pytest.approx(1.0, abs=1e-12)
    assert average_fidelity(MAXIMALLY_MIXED) == pytest.approx(0.25, abs=1e-12)
    for _ in range(20):
        rho = random_x_state(rng)
        assert average_fidelity(rho) == pytest.approx(
            quadrature_average_fidelity(rho), abs=1e-10
        )


def test_fig10_host_stays_classical_fig11_impurity_does_not():
    from dataclasses import replace

    fig11 = fig2_params(alpha=0.5, T=1.0, B=1.0)
    host = fig11.without_distortion()
    host_fa = [
        average_fidelity(impurity_density(replace(host, T=float(t))))
        for t in np.linspace(0.01, 4.0, 50)
    ]
    assert max(host_fa) < CLASSICAL_FIDELITY
    assert average_fidelity(impurity_density(replace(fig11, T=0.05))) > CLASSICAL_FIDELITY


def test_concurrence_and_fidelity_move_together_on_fig11_path():
    # singlet-dominated regime: higher channel concurrence never pairs
    # with lower average fidelity along the temperature path
    from dataclasses import replace

    from diamondchain import concurrence_x

    p = fig2_params(alpha=0.5, B=1.0)
    ts = np.linspace(0.05, 2.0, 80)
    cs, fas = [], []
    for t in ts:
        rho = impurity_density(replace(p, T=t))
        cs.append(concurrence_x(rho))
        fas.append(average_fidelity(rho))
    dcs = np.diff(cs)
    dfas = np.diff(fas)
    assert not ((dcs > 1e-12) & (dfas < -1e-12)).any()
