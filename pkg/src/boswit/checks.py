"""Named verification suites behind the command-line ``check`` interface."""

from __future__ import annotations

import math

import numpy as np

from . import oracle, states, witness
from .basis import (
    _spin_identity_errors,
    gellmann_basis,
    gm_index,
    schwinger_ops,
    spin_gellmann_decomposition,
)
from .oracle import OracleReport

__all__ = ["run_checks", "SELECTORS"]

SELECTORS = ("basis", "appendix", "closed-forms", "roundtrip", "all")


def _basis_checks(dims, rng) -> list:
    reports = []
    for d in dims:
        basis = gellmann_basis(d)
        el = basis.elements
        m = d * d

        herm = float(np.max(np.abs(el - el.conj().transpose(0, 2, 1))))
        flat = el.reshape(m, -1)
        gram = (flat[1:] @ flat[1:].conj().T).real
        ortho = float(np.max(np.abs(gram - 2.0 * np.eye(m - 1))))
        reports.append(OracleReport(f"basis_orthogonality_d{d}", max(herm, ortho), max(herm, ortho) <= 1e-12))

        h = rng.standard_normal((d, d)) + 1.0j * rng.standard_normal((d, d))
        h = h + h.conj().T
        coeffs = np.einsum("iab,ba->i", el, h)
        norms = np.einsum("iab,iba->i", el, el)
        rebuilt = np.einsum("i,iab->ab", coeffs / norms, el)
        comp = float(np.max(np.abs(rebuilt - h)))
        reports.append(OracleReport(f"basis_completeness_d{d}", comp, comp <= 1e-10))

        worst = 0
        for k in range(1, d):
            worst = max(worst, abs(gm_index(d, "symmetric", (k - 1, k)) - (2 * d * (k - 1) - k * k + k + 2) // 2))
            worst = max(worst, abs(gm_index(d, "antisymmetric", (k - 1, k)) - (d * (d - 1) // 2 + k * (k - 1) // 2 + 1)))
            worst = max(worst, abs(gm_index(d, "diagonal", k) - (d * (d - 1) + k)))
        reports.append(OracleReport(f"basis_index_formulas_d{d}", float(worst), worst == 0))

        dec = spin_gellmann_decomposition(d)
        ops = schwinger_ops(d, "spin_j")
        err = 0.0
        for axis, target in (("x", ops.sx), ("y", ops.sy), ("z", ops.sz)):
            total = np.zeros((d, d), dtype=complex)
            for idx, coeff in dec[axis]:
                total += coeff * el[idx]
            err = max(err, float(np.max(np.abs(total - target))))
        reports.append(OracleReport(f"basis_spin_decomposition_d{d}", err, err <= 1e-12))
    return reports


def _appendix_checks() -> list:
    return [
        OracleReport(f"spin_identity_{name}", err, err <= 1e-12)
        for name, err in _spin_identity_errors()
    ]


def _closed_form_checks() -> list:
    reports = []
    grid = np.linspace(0.0, math.pi / 2.0, 128, endpoint=False)

    for n, family in ((1, "szsz_n1"), (2, "szsz_n2")):
        err = 0.0
        for tau in grid:
            tensor = witness.correlation_tensor(states.szsz_state(n, tau))
            ref = oracle.reference_closed_forms(family, n, tau)
            err = max(err, abs(witness.tensor_norm(tensor) - ref["t_norm"]))
            err = max(err, abs(witness.t_max(tensor) - ref["t_max"]))
        reports.append(OracleReport(f"closed_form_szsz_n{n}", err, err <= 1e-9, samples=len(grid)))

    grid64 = np.linspace(0.0, math.pi / 2.0, 64, endpoint=False)
    err = 0.0
    for n in range(1, 9):
        for tau in grid64:
            tensor = witness.correlation_tensor(states.szsz_state(n, tau))
            _, bloch_sq = witness.bloch_vector(tensor, "A")
            err = max(err, abs(bloch_sq - states.bloch_length_closed(n, tau)))
    reports.append(OracleReport("closed_form_bloch_n1_8", err, err <= 1e-9, samples=8 * len(grid64)))

    err = 0.0
    for n in range(1, 11):
        for tau in grid64:
            tp = witness.spin_tensor(states.szsz_state(n, tau))
            ref = oracle.reference_closed_forms("spin_elements", n, tau)
            expected = np.zeros((3, 3))
            expected[0, 0] = ref["txx"]
            expected[1, 2] = expected[2, 1] = ref["tyz"]
            err = max(err, float(np.max(np.abs(tp - expected))))
    reports.append(OracleReport("closed_form_spin_elements_n1_10", err, err <= 1e-9, samples=10 * len(grid64)))

    err = 0.0
    ks = np.linspace(0.05, 1.5, 30)
    for k in ks:
        series, closed = oracle.pdc_epsilon_average(float(k))
        err = max(err, abs(series - closed))
    reports.append(OracleReport("closed_form_pdc_average", err, err <= 1e-8, samples=len(ks)))
    return reports


def _family_states(n: int):
    yield "szsz", states.szsz_state(n, 0.3)
    yield "maxent", states.maximally_entangled(n)
    n_c, n_d = states.default_photon_outcomes(n)
    yield "acstark", states.acstark_state(n, 0.2, n_c, n_d).state


def _roundtrip_checks(rng, seed: int) -> list:
    reports = []
    for label in ("szsz", "maxent", "acstark"):
        err = 0.0
        for n in range(1, 7):
            for fam, state in _family_states(n):
                if fam != label:
                    continue
                tensor = witness.correlation_tensor(state)
                err = max(err, oracle.roundtrip_error(state, tensor))
        reports.append(OracleReport(f"roundtrip_{label}_n1_6", err, err <= 1e-10, samples=6))

    violation = 0.0
    worst_gap = 0.0
    count = 0
    for _ in range(50):
        n = int(rng.integers(1, 6))
        state = oracle.random_pure_state(n, rng)
        tensor = witness.correlation_tensor(state)
        bound = witness.t_max(tensor)
        for offset in range(3):
            res = oracle.product_overlap_search(tensor, iterations=6, seed=seed + offset)
            violation = max(violation, res.best - bound)
            worst_gap = max(worst_gap, res.gap)
            count += 1
    reports.append(
        OracleReport(
            "product_search_bound",
            max(0.0, violation),
            violation <= 1e-8,
            samples=count,
            search_gap=worst_gap,
        )
    )

    mismatches = 0
    total = 0
    for n in range(1, 6):
        for tau in np.linspace(0.0, math.pi / 2.0, 9, endpoint=False):
            state = states.szsz_state(n, float(tau))
            rep = witness.evaluate(state)
            if rep.entangled_by_eps and not oracle.pure_entanglement_oracle(state):
                mismatches += 1
            total += 1
        for _ in range(10):
            state = oracle.random_pure_state(n, rng)
            rep = witness.evaluate(state)
            if rep.entangled_by_eps and not oracle.pure_entanglement_oracle(state):
                mismatches += 1
            total += 1
    reports.append(OracleReport("criterion_implies_schmidt_rank", float(mismatches), mismatches == 0, samples=total))
    return reports


def run_checks(selector: str, d: int | None = None, seed: int = 7) -> tuple:
    """Run one named suite (or all) and aggregate the reports."""
    if selector not in SELECTORS:
        raise ValueError(f"unknown check selector {selector!r}; choose from {SELECTORS}")
    rng = np.random.default_rng(seed)
    reports: list = []
    if selector in ("basis", "all"):
        dims = [d] if d is not None else list(range(2, 13))
        reports.extend(_basis_checks(dims, rng))
    if selector in ("appendix", "all"):
        reports.extend(_appendix_checks())
    if selector in ("closed-forms", "all"):
        reports.extend(_closed_form_checks())
    if selector in ("roundtrip", "all"):
        reports.extend(_roundtrip_checks(rng, seed))
    return reports, all(r.passed for r in reports)
