"""Correlation-tensor entanglement identifiers for bipartite boson states.

For a state with coefficient matrix c in the |k) basis, the two-point
function over matrix units is q[a, b, m, n] = conj(c)[a, m] c[b, n], so
every joint expectation <M_i x M_j> is a sparse contraction of q against
the generators on each side.  The full (d^2-1) x (d^2-1) tensor therefore
costs O(d^4); no d^2 x d^2 density matrix is ever materialized.

The tensor entries carry the prefactor d / (2(d-1)), which normalizes pure
product states to unit tensor norm and unit leading singular value.  The
reported identifiers are the squared tensor norm, its largest singular
value, and their ratio; each exceeding one certifies entanglement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import HermitianBasis, gellmann_basis, project_traceless, schwinger_ops
from .states import PureBipartiteState

__all__ = [
    "CorrelationTensor",
    "CriterionReport",
    "correlation_tensor",
    "tensor_norm",
    "t_max",
    "epsilon",
    "bloch_vector",
    "von_neumann_entropy",
    "spin_tensor",
    "spin_criterion",
    "evaluate",
]

_IMAG_TOL = 1e-10
_NORM_TOL = 1e-10
# Soundness margin for the boolean flags: separable states can land a few
# ulp above the bound, and a detector must not report those as positives.
_FLAG_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class CorrelationTensor:
    """Joint correlation block T_ij plus the two local expectation vectors."""

    d: int
    t: np.ndarray           # (d^2-1, d^2-1) real
    local_a: np.ndarray     # (d^2-1,) real, T_i0
    local_b: np.ndarray     # (d^2-1,) real, T_0j


@dataclass(frozen=True)
class CriterionReport:
    """All identifiers evaluated on one state."""

    t_norm: float
    t_max: float
    epsilon: float
    entangled_by_norm: bool
    entangled_by_eps: bool
    bloch_sq_a: float
    bloch_sq_b: float
    entropy: float
    spin_t_norm: float
    spin_t_max: float
    spin_epsilon: float


def _require_normalized(state: PureBipartiteState) -> None:
    nrm = float(np.linalg.norm(state.coeff))
    if abs(nrm - 1.0) > _NORM_TOL:
        raise ValueError(f"state is not normalized: |c| = {nrm!r}")


def _real_guard(arr: np.ndarray) -> np.ndarray:
    resid = float(np.max(np.abs(arr.imag))) if arr.size else 0.0
    if resid > _IMAG_TOL:
        raise ValueError(f"expectation values acquired imaginary residue {resid:.3e}")
    return np.ascontiguousarray(arr.real)


def correlation_tensor(state: PureBipartiteState, basis: HermitianBasis | None = None) -> CorrelationTensor:
    """Correlation tensor of a normalized pure state.

    T_ij = d/(2(d-1)) <M_i x M_j> for i, j >= 1; the locals are the
    matching expectations against the scaled identity on the other side.
    """
    _require_normalized(state)
    d = state.d
    if basis is None:
        basis = gellmann_basis(d)
    c = state.coeff
    pref = d / (2.0 * (d - 1.0))

    q = np.einsum("am,bn->abmn", c.conj(), c)
    x = project_traceless(basis, q)                               # (d^2-1, d, d)
    y = project_traceless(basis, np.moveaxis(x, (1, 2), (0, 1)))  # (j, i)
    t = _real_guard(pref * y.T)

    m0 = 1.0 / math.sqrt(d * (d - 1) / 2.0)
    rho_a = c @ c.conj().T
    rho_b_t = c.conj().T @ c          # transpose of the second reduced state
    local_a = _real_guard(pref * m0 * project_traceless(basis, rho_a.T))
    local_b = _real_guard(pref * m0 * project_traceless(basis, rho_b_t))
    for a in (t, local_a, local_b):
        a.setflags(write=False)
    return CorrelationTensor(d=d, t=t, local_a=local_a, local_b=local_b)


def tensor_norm(tensor: CorrelationTensor) -> float:
    """Squared Frobenius norm of the joint block, locals excluded."""
    return float(np.sum(tensor.t * tensor.t))


def t_max(tensor: CorrelationTensor) -> float:
    """Largest singular value of the joint block."""
    if not np.any(tensor.t):
        raise ValueError("degenerate tensor: all joint correlations vanish")
    return float(np.linalg.svd(tensor.t, compute_uv=False)[0])


def epsilon(tensor: CorrelationTensor) -> float:
    """Ratio of the squared tensor norm to the largest singular value."""
    return tensor_norm(tensor) / t_max(tensor)


def bloch_vector(tensor: CorrelationTensor, side: str) -> tuple:
    """Local Bloch vector of one side and its squared length.

    Scaled as (d-1) times the local tensor entries, the unique scale under
    which pure product states have unit length.
    """
    if side not in ("A", "B"):
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    local = tensor.local_a if side == "A" else tensor.local_b
    vec = (tensor.d - 1.0) * local
    return vec, float(vec @ vec)


def von_neumann_entropy(state: PureBipartiteState) -> float:
    """Entanglement entropy in bits from the Schmidt spectrum of c."""
    _require_normalized(state)
    svals = np.linalg.svd(state.coeff, compute_uv=False)
    p = svals * svals
    p = p[p > 1e-15]
    return float(-np.sum(p * np.log2(p)) + 0.0)   # +0.0 clears IEEE -0.0


def spin_tensor(state: PureBipartiteState) -> np.ndarray:
    """3x3 correlation matrix of the integer-spectrum spin components,
    scaled by 1/N^2 so an x-polarized product pair gives unit xx entry."""
    _require_normalized(state)
    ops = schwinger_ops(state.d, "schwinger")
    mats = (ops.sx, ops.sy, ops.sz)
    c = state.coeff
    left = [c.conj().T @ m @ c for m in mats]
    raw = np.array([[np.sum(li * mj) for mj in mats] for li in left])
    return _real_guard(raw / float(state.n) ** 2)


def spin_criterion(tprime: np.ndarray) -> tuple:
    """Squared norm, largest singular value, and their ratio for the 3x3
    spin correlation matrix."""
    tprime = np.asarray(tprime, dtype=float)
    if not np.any(tprime):
        raise ValueError("degenerate tensor: all spin correlations vanish")
    norm = float(np.sum(tprime * tprime))
    top = float(np.linalg.svd(tprime, compute_uv=False)[0])
    return norm, top, norm / top


def evaluate(state: PureBipartiteState, basis: HermitianBasis | None = None) -> CriterionReport:
    """Evaluate every identifier on one state.

    A state whose spin correlations all vanish exactly gets zero spin
    identifiers (the three-operator criterion detects nothing there).
    """
    tensor = correlation_tensor(state, basis)
    tn = tensor_norm(tensor)
    tm = t_max(tensor)
    eps = tn / tm
    _, bloch_a = bloch_vector(tensor, "A")
    _, bloch_b = bloch_vector(tensor, "B")
    tp = spin_tensor(state)
    stn, stm, seps = spin_criterion(tp) if np.any(tp) else (0.0, 0.0, 0.0)
    return CriterionReport(
        t_norm=tn,
        t_max=tm,
        epsilon=eps,
        entangled_by_norm=tn > 1.0 + _FLAG_TOL,
        entangled_by_eps=eps > 1.0 + _FLAG_TOL,
        bloch_sq_a=bloch_a,
        bloch_sq_b=bloch_b,
        entropy=von_neumann_entropy(state),
        spin_t_norm=stn,
        spin_t_max=stm,
        spin_epsilon=seps,
    )
