"""State families for two separated ensembles of N two-mode bosons.

Every state is stored as a complex (N+1) x (N+1) coefficient matrix c_kl in
the per-component occupation basis |k) = |N-k, k>, normalized to unit
Frobenius norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PureBipartiteState",
    "AcStarkOutcome",
    "PdcEnsemble",
    "from_coefficients",
    "maximally_entangled",
    "spin_coherent",
    "szsz_state",
    "acstark_state",
    "default_photon_outcomes",
    "pdc_weight",
    "bloch_length_closed",
    "bloch_closed_coefficients",
    "catalan",
    "TAU_PERIOD",
]

# The z-z interaction repeats after this phase.
TAU_PERIOD = math.pi / 2.0

_EXACT_BINOM_LIMIT = 60


def _check_n(n) -> int:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise ValueError(f"boson number per component must be an integer >= 1, got {n!r}")
    return int(n)


def _binom(n: int, k: int) -> float:
    if n <= _EXACT_BINOM_LIMIT:
        return float(math.comb(n, k))
    return math.exp(math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1))


def _half_binom_row(n: int) -> np.ndarray:
    """Amplitudes sqrt(binom(n, k)) / 2^(n/2) for k = 0 .. n."""
    return np.array([math.sqrt(_binom(n, k)) for k in range(n + 1)]) / 2.0 ** (n / 2.0)


def catalan(n: int) -> int:
    """Catalan number, exact integer arithmetic."""
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 0:
        raise ValueError(f"catalan is defined for integers n >= 0, got {n!r}")
    return math.comb(2 * n, n) // (n + 1)


@dataclass(frozen=True, eq=False)
class PureBipartiteState:
    """Normalized pure state of two components with N bosons each."""

    n: int
    coeff: np.ndarray
    source_norm: float = 1.0    # Euclidean norm of the raw input matrix

    @property
    def d(self) -> int:
        return self.n + 1


@dataclass(frozen=True, eq=False)
class AcStarkOutcome:
    """Post-measurement state for one photon-count outcome (n_c, n_d)."""

    n: int
    t: float
    n_c: int
    n_d: int
    state: PureBipartiteState
    norm_weight: float          # squared norm of the projected amplitudes


@dataclass(frozen=True, eq=False)
class PdcEnsemble:
    """Pair-number distribution of a bright squeezed vacuum source."""

    squeezing: float
    weights: np.ndarray         # p_N for N = 0 .. n_trunc
    n_trunc: int

    @classmethod
    def build(cls, squeezing: float, n_trunc: int = 200, tail_tol: float = 1e-8):
        if squeezing <= 0.0:
            raise ValueError(f"squeezing must be positive, got {squeezing!r}")
        n = np.arange(n_trunc + 1)
        w = (n + 1) * math.tanh(squeezing) ** (2 * n) / math.cosh(squeezing) ** 4
        tail = 1.0 - float(w.sum())
        if tail > tail_tol:
            raise ValueError(
                f"truncation at N={n_trunc} leaves probability {tail:.3e} > {tail_tol:.1e}"
            )
        w.setflags(write=False)
        return cls(squeezing=float(squeezing), weights=w, n_trunc=int(n_trunc))


def from_coefficients(n: int, raw) -> PureBipartiteState:
    """Normalize a raw (N+1) x (N+1) coefficient matrix into a state."""
    n = _check_n(n)
    raw = np.asarray(raw, dtype=complex)
    if raw.shape != (n + 1, n + 1):
        raise ValueError(
            f"coefficient matrix for N={n} must have shape {(n + 1, n + 1)}, got {raw.shape}"
        )
    nrm = float(np.linalg.norm(raw))
    if nrm < 1e-150:
        raise ValueError("degenerate state: coefficient matrix has zero norm")
    coeff = raw / nrm
    coeff.setflags(write=False)
    return PureBipartiteState(n=n, coeff=coeff, source_norm=nrm)


def maximally_entangled(n: int) -> PureBipartiteState:
    """Equal-weight diagonal state c_kl = delta_kl / sqrt(N+1)."""
    n = _check_n(n)
    return from_coefficients(n, np.eye(n + 1))


def spin_coherent(n: int, alpha: complex, beta: complex) -> np.ndarray:
    """Amplitudes of N bosons sharing the single-particle mode alpha|a>+beta|b>.

    Entry k is sqrt(binom(N, k)) alpha^(N-k) beta^k.
    """
    n = _check_n(n)
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) > 1e-10:
        raise ValueError("mode amplitudes must satisfy |alpha|^2 + |beta|^2 = 1")
    k = np.arange(n + 1)
    amps = np.array([math.sqrt(_binom(n, kk)) for kk in k], dtype=complex)
    amps *= np.power(complex(alpha), n - k) * np.power(complex(beta), k)
    return amps


def szsz_state(n: int, tau: float) -> PureBipartiteState:
    """Two x-polarized components entangled by a z-z phase interaction.

    c_kl = 2^-N sqrt(binom(N,k) binom(N,l)) exp(-i (N-2k)(N-2l) tau); the
    interaction phase is reduced modulo pi/2.
    """
    n = _check_n(n)
    tau = float(tau) % TAU_PERIOD
    w = _half_binom_row(n)
    m = n - 2.0 * np.arange(n + 1)
    phase = np.exp(-1.0j * np.outer(m, m) * tau)
    return from_coefficients(n, np.outer(w, w) * phase)


def default_photon_outcomes(n: int) -> tuple:
    """Central photon-count outcome pair (floor(N/2), N - floor(N/2))."""
    n = _check_n(n)
    n_c = n // 2
    return n_c, n - n_c


def acstark_state(n: int, t: float, n_c: int, n_d: int) -> AcStarkOutcome:
    """Two-component state after a shared dispersive light coupling of
    duration ``t`` followed by counting n_c and n_d photons in the two
    polarization outputs.

    The unnormalized amplitudes are
    2^-N sqrt(binom(N,k1) binom(N,k2)) (-1)^k2 sin(xi)^n_c cos(xi)^n_d with
    xi = 2 t (k1 + k2 - N) + pi/4.  The returned state is normalized; the
    squared norm of the raw amplitudes is kept as a probability weight.
    """
    n = _check_n(n)
    for label, value in (("n_c", n_c), ("n_d", n_d)):
        if not isinstance(value, (int, np.integer)) or isinstance(value, bool) or value < 0:
            raise ValueError(f"{label} must be a non-negative integer, got {value!r}")
    t = float(t)
    w = _half_binom_row(n)
    k = np.arange(n + 1)
    xi = 2.0 * t * (np.add.outer(k, k) - n) + math.pi / 4.0
    signs = np.where(k % 2 == 0, 1.0, -1.0)
    amps = np.outer(w, w) * signs[np.newaxis, :]
    amps = amps * np.sin(xi) ** n_c * np.cos(xi) ** n_d
    weight = float(np.sum(np.abs(amps) ** 2))
    if weight < 1e-300:
        raise ValueError(
            f"degenerate outcome: all amplitudes vanish for (t, n_c, n_d)=({t}, {n_c}, {n_d})"
        )
    state = from_coefficients(n, amps)
    return AcStarkOutcome(n=n, t=t, n_c=int(n_c), n_d=int(n_d), state=state, norm_weight=weight)


def pdc_weight(n: int, squeezing: float) -> float:
    """Probability of post-selecting N photon pairs at the given squeezing."""
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 0:
        raise ValueError(f"pair number must be an integer >= 0, got {n!r}")
    if squeezing <= 0.0:
        raise ValueError(f"squeezing must be positive, got {squeezing!r}")
    return (n + 1) * math.tanh(squeezing) ** (2 * n) / math.cosh(squeezing) ** 4


def bloch_closed_coefficients(n: int) -> tuple:
    """Constant term and cosine-power coefficients of the squared Bloch
    length of ``szsz_state`` as a function of the interaction phase.

    Returns (b0, [b_1 .. b_N]) with
    b_l = 2 Cat(N) (N+1) prod_{i=2..l}(N-i+1) / (4^N prod_{i=2..l}(N+i))
    and b0 = (N+1)^2 Cat(N) / (4^N N) - 1/N; all products are exact integer
    arithmetic before the final division.
    """
    n = _check_n(n)
    cat = catalan(n)
    four_n = 4 ** n
    b0 = float((n + 1) ** 2 * cat) / float(four_n * n) - 1.0 / n
    num = 2 * cat * (n + 1)
    den = four_n
    coeffs = []
    for l in range(1, n + 1):
        if l >= 2:
            num *= n - l + 1
            den *= n + l
        coeffs.append(float(num) / float(den))
    return b0, coeffs


def bloch_length_closed(n: int, tau: float) -> float:
    """Squared local Bloch length of ``szsz_state(n, tau)``, closed form."""
    b0, coeffs = bloch_closed_coefficients(n)
    tau = float(tau)
    total = b0
    for l, b in enumerate(coeffs, start=1):
        total += b * math.cos(2.0 * l * tau) ** (2 * n)
    return total
