import math

import numpy as np
import pytest

from boswit import oracle
from boswit.states import (
    acstark_state,
    default_photon_outcomes,
    maximally_entangled,
    szsz_state,
)
from boswit.witness import correlation_tensor, evaluate, t_max


def _family_states(n):
    yield szsz_state(n, 0.3)
    yield maximally_entangled(n)
    n_c, n_d = default_photon_outcomes(n)
    yield acstark_state(n, 0.2, n_c, n_d).state


@pytest.mark.parametrize("n", range(1, 7))
def test_roundtrip_all_families(n):
    for state in _family_states(n):
        ten = correlation_tensor(state)
        assert oracle.roundtrip_error(state, ten) < 1e-10


def test_roundtrip_small_case_tight():
    state = szsz_state(1, 0.3)
    ten = correlation_tensor(state)
    assert oracle.roundtrip_error(state, ten) < 1e-12


def test_reconstruction_has_unit_trace():
    ten = correlation_tensor(maximally_entangled(2))
    rho = oracle.reconstruct_density(ten)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
    assert np.max(np.abs(rho - rho.conj().T)) < 1e-12


def test_reconstruction_scale_limit():
    from boswit.witness import CorrelationTensor

    m = 13 * 13 - 1
    big = CorrelationTensor(d=13, t=np.zeros((m, m)), local_a=np.zeros(m), local_b=np.zeros(m))
    with pytest.raises(ValueError, match="d <= 12"):
        oracle.reconstruct_density(big)


def test_search_product_state_is_its_own_maximizer():
    rng = np.random.default_rng(2)
    ten = correlation_tensor(oracle.random_product_state(2, rng))
    res = oracle.product_overlap_search(ten, iterations=8, seed=5)
    assert res.best == pytest.approx(1.0, abs=1e-9)
    assert abs(res.gap) < 1e-9


def test_search_reaches_bell_bound():
    ten = correlation_tensor(maximally_entangled(1))
    res = oracle.product_overlap_search(ten, iterations=20, seed=5)
    assert t_max(ten) == pytest.approx(1.0, abs=1e-12)
    assert abs(res.best - 1.0) < 1e-3
    assert res.samples == 20


def test_search_reaches_qutrit_bound():
    ten = correlation_tensor(maximally_entangled(2))
    res = oracle.product_overlap_search(ten, iterations=20, seed=5)
    assert abs(res.best - 0.5) < 1e-6


def test_search_never_exceeds_singular_bound():
    rng = np.random.default_rng(9)
    for _ in range(20):
        n = int(rng.integers(1, 6))
        ten = correlation_tensor(oracle.random_pure_state(n, rng))
        bound = t_max(ten)
        for seed in (0, 1, 2):
            res = oracle.product_overlap_search(ten, iterations=5, seed=seed)
            assert res.best <= bound + 1e-8


def test_search_rejects_bad_iterations():
    ten = correlation_tensor(maximally_entangled(1))
    with pytest.raises(ValueError):
        oracle.product_overlap_search(ten, iterations=0)


def test_reference_closed_forms():
    ref = oracle.reference_closed_forms("szsz_n2", 2, 0.0)
    assert ref["t_norm"] == pytest.approx(1.0, abs=1e-12)
    assert ref["t_max"] == pytest.approx(1.0, abs=1e-12)
    ref = oracle.reference_closed_forms("szsz_n1", 1, math.pi / 4)
    assert ref["t_norm"] == pytest.approx(3.0, abs=1e-12)
    ref = oracle.reference_closed_forms("spin_elements", 5, 0.2)
    assert ref["txx"] == pytest.approx(math.cos(0.4) ** 8, abs=1e-12)
    ref = oracle.reference_closed_forms("bloch_closed", 2, 0.3)
    assert 0.0 < ref["bloch_sq"] < 1.0
    with pytest.raises(ValueError, match="unsupported"):
        oracle.reference_closed_forms("szsz_n3", 3, 0.1)
    with pytest.raises(ValueError, match="unsupported"):
        oracle.reference_closed_forms("szsz_n1", 2, 0.1)


def test_pdc_average_matches_closed_form():
    for squeezing in (0.05, 0.25, 0.5, 1.0, 1.5):
        series, closed = oracle.pdc_epsilon_average(squeezing, n_trunc=200)
        assert abs(series - closed) < 1e-8
        assert closed > 1.0


def test_pdc_average_boundary_and_monotone():
    series, closed = oracle.pdc_epsilon_average(1e-6)
    assert series == pytest.approx(1.0, abs=1e-8)
    assert closed == pytest.approx(1.0, abs=1e-8)
    grid = np.linspace(0.05, 1.5, 30)
    values = [oracle.pdc_epsilon_average(float(k))[1] for k in grid]
    assert all(b > a for a, b in zip(values, values[1:]))


def test_pdc_average_truncation_guard():
    with pytest.raises(ValueError, match="truncation"):
        oracle.pdc_epsilon_average(1.5, n_trunc=10)


def test_pure_entanglement_oracle():
    rng = np.random.default_rng(4)
    assert not oracle.pure_entanglement_oracle(oracle.random_product_state(3, rng))
    assert oracle.pure_entanglement_oracle(szsz_state(3, 0.2))
    assert oracle.pure_entanglement_oracle(maximally_entangled(4))


def test_criterion_positive_implies_schmidt_rank():
    rng = np.random.default_rng(6)
    states = [szsz_state(n, t) for n in range(1, 6) for t in np.linspace(0.0, 1.5, 7)]
    states += [oracle.random_pure_state(3, rng) for _ in range(20)]
    n_c, n_d = default_photon_outcomes(4)
    states += [acstark_state(4, t, n_c, n_d).state for t in (0.1, 0.4)]
    for state in states:
        rep = evaluate(state)
        if rep.entangled_by_eps:
            assert oracle.pure_entanglement_oracle(state)
