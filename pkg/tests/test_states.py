import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from boswit.states import (
    PdcEnsemble,
    acstark_state,
    bloch_closed_coefficients,
    bloch_length_closed,
    catalan,
    default_photon_outcomes,
    from_coefficients,
    maximally_entangled,
    pdc_weight,
    spin_coherent,
    szsz_state,
)


def test_from_coefficients_bell():
    st_ = from_coefficients(1, np.eye(2))
    assert np.allclose(st_.coeff, np.eye(2) / math.sqrt(2))
    assert st_.source_norm == pytest.approx(math.sqrt(2))
    assert st_.d == 2


def test_from_coefficients_uniform():
    st_ = from_coefficients(2, np.ones((3, 3)))
    assert np.allclose(np.abs(st_.coeff) ** 2, np.full((3, 3), 1.0 / 9.0))


def test_from_coefficients_errors():
    with pytest.raises(ValueError, match="zero norm"):
        from_coefficients(1, np.zeros((2, 2)))
    with pytest.raises(ValueError, match="shape"):
        from_coefficients(2, np.eye(2))
    with pytest.raises(ValueError):
        from_coefficients(0, np.eye(1))


def test_maximally_entangled():
    st_ = maximally_entangled(3)
    assert np.allclose(st_.coeff, np.eye(4) * 0.5)


def test_spin_coherent_values():
    assert np.allclose(spin_coherent(2, 1.0, 0.0), [1.0, 0.0, 0.0])
    r = 1 / math.sqrt(2)
    assert np.allclose(spin_coherent(2, r, r), [0.5, r, 0.5], atol=1e-12)
    assert np.allclose(spin_coherent(1, r, r), [r, r], atol=1e-12)


def test_spin_coherent_normalization_error():
    with pytest.raises(ValueError, match="alpha"):
        spin_coherent(2, 1.0, 0.5)


def test_szsz_no_interaction_is_product():
    n = 3
    st_ = szsz_state(n, 0.0)
    r = 1 / math.sqrt(2)
    v = spin_coherent(n, r, r)
    assert np.allclose(st_.coeff, np.outer(v, v), atol=1e-12)


def test_szsz_amplitudes_and_phases():
    n, tau = 2, 0.3
    st_ = szsz_state(n, tau)
    for k in range(3):
        for l in range(3):
            mag = math.sqrt(math.comb(2, k) * math.comb(2, l)) / 4.0
            expected = mag * np.exp(-1j * (n - 2 * k) * (n - 2 * l) * tau)
            assert st_.coeff[k, l] == pytest.approx(expected, abs=1e-12)


def test_szsz_tau_reduced_modulo_period():
    a = szsz_state(3, 0.4)
    b = szsz_state(3, 0.4 + math.pi / 2)
    assert np.allclose(a.coeff, b.coeff, atol=1e-12)


@given(st.integers(min_value=1, max_value=8), st.floats(min_value=-2.0, max_value=4.0))
def test_szsz_normalized(n, tau):
    st_ = szsz_state(n, tau)
    assert abs(np.linalg.norm(st_.coeff) - 1.0) < 1e-12


def test_default_photon_outcomes():
    assert default_photon_outcomes(4) == (2, 2)
    assert default_photon_outcomes(5) == (2, 3)
    assert default_photon_outcomes(1) == (0, 1)


def test_acstark_t_zero_factorizes():
    for n in (1, 2, 5):
        n_c, n_d = default_photon_outcomes(n)
        out = acstark_state(n, 0.0, n_c, n_d)
        assert out.norm_weight == pytest.approx(2.0 ** -n, rel=1e-12)
        svals = np.linalg.svd(out.state.coeff, compute_uv=False)
        assert svals[1] < 1e-12


@pytest.mark.parametrize("n", [2, 4, 6])
def test_acstark_even_matches_simplified_cosine(n):
    t = 0.37
    n_c, n_d = default_photon_outcomes(n)
    assert n_c == n_d
    out = acstark_state(n, t, n_c, n_d)
    raw = out.state.coeff * out.state.source_norm
    k = np.arange(n + 1)
    w = np.array([math.sqrt(math.comb(n, kk)) for kk in k]) / 2.0 ** (n / 2.0)
    signs = np.where(k % 2 == 0, 1.0, -1.0)
    simple = np.outer(w, w) * signs[None, :]
    simple = simple * np.cos(4.0 * t * (np.add.outer(k, k) - n)) ** n_c / 2.0 ** n_c
    assert np.max(np.abs(raw - simple)) < 1e-10


def test_acstark_argument_errors():
    with pytest.raises(ValueError):
        acstark_state(2, 0.1, -1, 1)
    with pytest.raises(ValueError):
        acstark_state(2, 0.1, 1, 1.5)
    with pytest.raises(ValueError):
        acstark_state(0, 0.1, 0, 0)


def test_pdc_weight_values():
    assert pdc_weight(0, 1e-8) == pytest.approx(1.0, abs=1e-12)
    expected = 3.0 * math.tanh(1.0) ** 4 / math.cosh(1.0) ** 4
    assert pdc_weight(2, 1.0) == pytest.approx(expected, rel=1e-14)
    with pytest.raises(ValueError):
        pdc_weight(2, 0.0)
    with pytest.raises(ValueError):
        pdc_weight(-1, 0.5)


@pytest.mark.parametrize("squeezing", [0.1, 0.5, 1.0, 1.5])
def test_pdc_weights_sum_to_one(squeezing):
    ens = PdcEnsemble.build(squeezing, n_trunc=200)
    assert np.all(ens.weights >= 0.0)
    assert 1.0 - float(ens.weights.sum()) < 1e-8


def test_pdc_truncation_error():
    with pytest.raises(ValueError, match="truncation"):
        PdcEnsemble.build(1.5, n_trunc=5)


def test_catalan_values():
    assert catalan(0) == 1
    assert catalan(3) == 5
    assert catalan(4) == 14
    with pytest.raises(ValueError):
        catalan(-1)


def test_bloch_closed_printed_expansions():
    taus = np.linspace(0.0, math.pi / 2, 40, endpoint=False)

    def printed(n, tau):
        c = [math.cos(2 * l * tau) for l in range(0, n + 1)]
        if n == 1:
            return c[1] ** 2
        if n == 2:
            return 1 / 16 + (3 / 4) * c[1] ** 4 + (3 / 16) * c[2] ** 4
        if n == 3:
            return 1 / 12 + (5 / 8) * c[1] ** 6 + (1 / 4) * c[2] ** 6 + (1 / 24) * c[3] ** 6
        return (
            47 / 512
            + (35 / 64) * c[1] ** 8
            + (35 / 128) * c[2] ** 8
            + (5 / 64) * c[3] ** 8
            + (5 / 512) * c[4] ** 8
        )

    for n in range(1, 5):
        for tau in taus:
            assert bloch_length_closed(n, float(tau)) == pytest.approx(
                printed(n, float(tau)), abs=1e-12
            )


def test_bloch_closed_constant_term_n4():
    b0, coeffs = bloch_closed_coefficients(4)
    assert b0 == pytest.approx(47.0 / 512.0, abs=1e-15)
    assert coeffs == pytest.approx([35 / 64, 35 / 128, 5 / 64, 5 / 512], abs=1e-15)


@pytest.mark.parametrize("n", range(1, 13))
def test_bloch_closed_is_one_at_zero(n):
    assert bloch_length_closed(n, 0.0) == pytest.approx(1.0, abs=1e-12)
    assert bloch_length_closed(n, 0.2) < 1.0
