"""Generalized Gell-Mann matrices and collective two-mode spin operators.

A single bosonic component with N particles in two modes is treated as one
(N+1)-level system in the occupation basis |k) = |N-k, k>.  This module
builds the Hermitian operator basis used for that system:

* flat index 0 holds the scaled identity M_0 = I / sqrt(d(d-1)/2);
* symmetric pair matrices E_ij + E_ji, pairs i < j in lexicographic order,
  occupy indices 1 .. d(d-1)/2;
* antisymmetric pair matrices -i E_ij + i E_ji follow, ordered by column j
  ascending and, inside one column, row i descending;
* the d-1 diagonal matrices sqrt(2/(k(k+1))) (sum_{m<k} E_mm - k E_kk)
  occupy the last slots.

Under this enumeration the three collective spin components of the two-mode
system expand over adjacent-pair matrices with closed-form flat indices; see
``gm_index`` and ``spin_gellmann_decomposition``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

__all__ = [
    "HermitianBasis",
    "SpinOperatorTriple",
    "build_gellmann",
    "gellmann_basis",
    "gm_index",
    "schwinger_ops",
    "spin_gellmann_decomposition",
    "verify_gellmann_from_spin",
    "project_traceless",
]


def _check_dimension(d) -> int:
    if not isinstance(d, (int, np.integer)) or isinstance(d, bool) or d < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {d!r}")
    return int(d)


@dataclass(frozen=True, eq=False)
class HermitianBasis:
    """Ordered Hermitian basis M_0 .. M_{d^2-1} for one d-level component."""

    d: int
    elements: np.ndarray        # (d^2, d, d) complex, read-only
    sym_pairs: np.ndarray       # (d(d-1)/2, 2) int
    anti_pairs: np.ndarray      # (d(d-1)/2, 2) int
    index_map: dict = field(repr=False)

    @property
    def n_pairs(self) -> int:
        return self.d * (self.d - 1) // 2

    def flat_index(self, kind: str, arg) -> int:
        return gm_index(self.d, kind, arg)


@dataclass(frozen=True, eq=False)
class SpinOperatorTriple:
    """Collective spin components for one two-mode component."""

    d: int
    sx: np.ndarray
    sy: np.ndarray
    sz: np.ndarray
    convention: str


def build_gellmann(d: int) -> HermitianBasis:
    """Build the full operator basis for dimension ``d``."""
    d = _check_dimension(d)
    n_pairs = d * (d - 1) // 2
    elements = np.zeros((d * d, d, d), dtype=complex)
    elements[0] = np.eye(d) / math.sqrt(d * (d - 1) / 2.0)

    sym_pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    anti_pairs = [(i, j) for j in range(1, d) for i in range(j - 1, -1, -1)]
    index_map: dict = {}

    for m, (i, j) in enumerate(sym_pairs):
        a = elements[1 + m]
        a[i, j] = 1.0
        a[j, i] = 1.0
        index_map[("symmetric", (i, j))] = 1 + m
    for m, (i, j) in enumerate(anti_pairs):
        a = elements[1 + n_pairs + m]
        a[i, j] = -1.0j
        a[j, i] = 1.0j
        index_map[("antisymmetric", (i, j))] = 1 + n_pairs + m
    for k in range(1, d):
        a = elements[d * (d - 1) + k]
        w = math.sqrt(2.0 / (k * (k + 1)))
        for m in range(k):
            a[m, m] = w
        a[k, k] = -k * w
        index_map[("diagonal", k)] = d * (d - 1) + k

    elements.setflags(write=False)
    return HermitianBasis(
        d=d,
        elements=elements,
        sym_pairs=np.array(sym_pairs, dtype=int),
        anti_pairs=np.array(anti_pairs, dtype=int),
        index_map=index_map,
    )


@lru_cache(maxsize=None)
def gellmann_basis(d: int) -> HermitianBasis:
    """Shared read-only basis for dimension ``d``."""
    return build_gellmann(d)


def gm_index(d: int, kind: str, arg) -> int:
    """Flat index of a basis element from its kind and pair or level.

    Off-diagonal kinds take a 0-based pair (i, j) with i < j; the diagonal
    kind takes a level k in 1 .. d-1.  For adjacent pairs (k-1, k) the
    returned values reduce to

        symmetric      (2d(k-1) - k^2 + k + 2) / 2
        antisymmetric  d(d-1)/2 + k(k-1)/2 + 1
        diagonal       d(d-1) + k
    """
    d = _check_dimension(d)
    if kind == "diagonal":
        k = int(arg)
        if not 1 <= k <= d - 1:
            raise ValueError(f"diagonal level must be in 1..{d - 1}, got {arg!r}")
        return d * (d - 1) + k
    try:
        i, j = (int(arg[0]), int(arg[1]))
    except (TypeError, IndexError) as exc:
        raise ValueError(f"expected an index pair, got {arg!r}") from exc
    if not 0 <= i < j <= d - 1:
        raise ValueError(f"pair must satisfy 0 <= i < j <= {d - 1}, got {(i, j)}")
    if kind == "symmetric":
        return i * (d - 1) - i * (i - 1) // 2 + (j - i)
    if kind == "antisymmetric":
        return d * (d - 1) // 2 + j * (j - 1) // 2 + (j - i)
    raise ValueError(f"unknown basis kind {kind!r}")


def schwinger_ops(d: int, convention: str = "schwinger") -> SpinOperatorTriple:
    """Collective spin components in the |k) = |N-k, k> basis, N = d-1.

    The ``schwinger`` convention has integer spectrum N-2k on the z
    component; ``spin_j`` divides every component by two, giving the
    standard spin-(N/2) matrices.
    """
    d = _check_dimension(d)
    if convention not in ("schwinger", "spin_j"):
        raise ValueError(f"unknown convention {convention!r}")
    k = np.arange(1, d)
    off = np.sqrt(k * (d - k)).astype(complex)
    sx = np.zeros((d, d), dtype=complex)
    sy = np.zeros((d, d), dtype=complex)
    sx[k - 1, k] = off
    sx[k, k - 1] = off
    sy[k - 1, k] = -1.0j * off
    sy[k, k - 1] = 1.0j * off
    sz = np.diag((d - 1) - 2.0 * np.arange(d)).astype(complex)
    if convention == "spin_j":
        sx, sy, sz = sx / 2.0, sy / 2.0, sz / 2.0
    for a in (sx, sy, sz):
        a.setflags(write=False)
    return SpinOperatorTriple(d=d, sx=sx, sy=sy, sz=sz, convention=convention)


def spin_gellmann_decomposition(d: int) -> dict:
    """Expansion of the spin-(N/2) components over the basis.

    Returns 'x', 'y', 'z' lists of (flat index, coefficient) pairs whose
    weighted sums reproduce ``schwinger_ops(d, "spin_j")`` exactly.
    """
    d = _check_dimension(d)
    x = []
    y = []
    z = []
    for k in range(1, d):
        c = 0.5 * math.sqrt(k * (d - k))
        x.append((gm_index(d, "symmetric", (k - 1, k)), c))
        y.append((gm_index(d, "antisymmetric", (k - 1, k)), c))
        z.append((gm_index(d, "diagonal", k), 0.5 * math.sqrt(k * (k + 1) / 2.0)))
    return {"x": x, "y": y, "z": z}


def _spin_identity_errors() -> list:
    """Entrywise errors of the eight d=3 generators rebuilt from spin-1 ops."""
    ops = schwinger_ops(3, "spin_j")
    sx, sy, sz = ops.sx, ops.sy, ops.sz
    r2 = math.sqrt(2.0)
    r3 = math.sqrt(3.0)
    built = {
        "M1": (sx + sx @ sz + sz @ sx) / r2,
        "M2": sx @ sx - sy @ sy,
        "M3": (sx - sx @ sz - sz @ sx) / r2,
        "M4": (sy + sy @ sz + sz @ sy) / r2,
        "M5": (sy - sy @ sz - sz @ sy) / r2,
        "M6": sx @ sy + sy @ sx,
        "M7": (sz + 2.0 * (sz @ sz) - sx @ sx - sy @ sy) / 2.0,
        # The squared-z term must enter negatively: the positive-sign
        # combination is not traceless and cannot equal a generator.
        "M8": (3.0 * sz - 2.0 * (sz @ sz) + sx @ sx + sy @ sy) / (2.0 * r3),
    }
    elements = gellmann_basis(3).elements
    out = []
    for m, (name, candidate) in enumerate(built.items(), start=1):
        err = float(np.max(np.abs(candidate - elements[m])))
        out.append((name, err))
    return out


def verify_gellmann_from_spin(atol: float = 1e-12) -> list:
    """Check the eight d=3 generators against polynomials in spin-1 ops.

    Returns one record per generator with the entrywise error.  Raises if
    any identity is violated beyond ``atol``.
    """
    reports = [
        {"name": name, "max_abs_error": err, "passed": err <= atol}
        for name, err in _spin_identity_errors()
    ]
    bad = [r["name"] for r in reports if not r["passed"]]
    if bad:
        raise ValueError(f"spin identity violated for {', '.join(bad)}")
    return reports


def project_traceless(basis: HermitianBasis, q: np.ndarray) -> np.ndarray:
    """Contract ``q`` against every traceless element along two leading axes.

    Returns out[i-1, ...] = sum_{ab} (M_i)_{ab} q[a, b, ...] for
    i = 1 .. d^2 - 1, in basis order.
    """
    d = basis.d
    si, sj = basis.sym_pairs[:, 0], basis.sym_pairs[:, 1]
    ai, aj = basis.anti_pairs[:, 0], basis.anti_pairs[:, 1]
    sym = q[si, sj] + q[sj, si]
    anti = 1.0j * (q[aj, ai] - q[ai, aj])
    idx = np.arange(d)
    diag = q[idx, idx]
    csum = np.cumsum(diag, axis=0)
    k = np.arange(1, d)
    w = np.sqrt(2.0 / (k * (k + 1)))
    extra = (1,) * (diag.ndim - 1)
    dia = w.reshape((-1,) + extra) * (csum[:-1] - k.reshape((-1,) + extra) * diag[1:])
    return np.concatenate([sym, anti, dia], axis=0)
