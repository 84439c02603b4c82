"""Matricization, SVD with trimming, Schmidt decomposition, entropies."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateTrimError, ShapeError, WireError
from .tensor import LOWER, UPPER, Tensor, WireSpec

RANK_TOL = 1e-12  # sigma counts toward rank iff sigma > RANK_TOL * sigma_max


# -- matricization -----------------------------------------------------


@dataclass(frozen=True)
class GroupInfo:
    """Bookkeeping needed to undo a matricization."""

    row_wires: tuple[WireSpec, ...]
    col_wires: tuple[WireSpec, ...]
    original_labels: tuple[str, ...]


def matricize(t: Tensor, row_labels: Sequence[str], col_labels: Sequence[str]) -> tuple[Tensor, GroupInfo]:
    """Group wires into a single UPPER row wire and LOWER column wire.

    The two groups must partition ``t``'s wires.  Grouping is row-major
    within each group; any flavor conversion implied by the grouping is a
    bend and leaves components untouched.
    """
    row_labels, col_labels = list(row_labels), list(col_labels)
    if sorted(row_labels + col_labels) != sorted(t.labels):
        raise WireError(
            f"row {row_labels} + col {col_labels} is not a partition of wires {list(t.labels)}"
        )
    perm = [t.axis(l) for l in row_labels + col_labels]
    data = np.transpose(t.data, perm)
    row_dim = math.prod(t.wire(l).dim for l in row_labels)
    m = Tensor(
        data.reshape(row_dim, -1),
        [WireSpec("row", row_dim, UPPER), WireSpec("col", data.size // row_dim, LOWER)],
    )
    info = GroupInfo(
        tuple(t.wire(l) for l in row_labels),
        tuple(t.wire(l) for l in col_labels),
        t.labels,
    )
    return m, info


def dematricize(m: Tensor, info: GroupInfo) -> Tensor:
    """Inverse of :func:`matricize`; restores wire order and flavors."""
    wires = info.row_wires + info.col_wires
    data = m.data.reshape([w.dim for w in wires])
    grouped = Tensor(data, wires)
    perm = [grouped.axis(l) for l in info.original_labels]
    return Tensor(np.transpose(grouped.data, perm), [wires[i] for i in perm])


# -- singular value decomposition --------------------------------------


@dataclass
class SvdResult:
    u: Tensor  # order-(1,1), isometric columns
    sigma: np.ndarray  # nonnegative, nonincreasing
    v_dag: Tensor  # order-(1,1), isometric rows


def _fix_phases(u: np.ndarray, v_dag: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Make the largest-magnitude entry of each left singular vector real
    positive (ties break toward the lowest index)."""
    u = u.copy()
    v_dag = v_dag.copy()
    for k in range(u.shape[1]):
        col = u[:, k]
        i = int(np.argmax(np.abs(col)))
        a = col[i]
        if abs(a) > 0:
            phase = a / abs(a)
            u[:, k] *= np.conj(phase)
            v_dag[k, :] *= phase
    return u, v_dag


def svd_matrix(m: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Thin SVD of a 2-D array with the package's fixed phase convention."""
    try:
        u, s, v_dag = np.linalg.svd(m, full_matrices=False)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - backend failure
        raise ArithmeticError(f"SVD backend failed: {exc}") from exc
    u, v_dag = _fix_phases(u, v_dag)
    return u, s, v_dag


def svd(m: Tensor) -> SvdResult:
    """SVD of an order-(1,1) tensor, m = u . diag(sigma) . v_dag."""
    if m.order != (1, 1):
        raise ShapeError(f"svd needs an order-(1,1) tensor, got {m.order}")
    i_up = next(i for i, w in enumerate(m.wires) if w.flavor is UPPER)
    arr = m.data if i_up == 0 else m.data.T
    u, s, v_dag = svd_matrix(arr)
    k = s.size
    wu, wl = m.wires[i_up], m.wires[1 - i_up]
    u_t = Tensor(u, [WireSpec(wu.label, wu.dim, UPPER), WireSpec("bond", k, LOWER)])
    v_t = Tensor(v_dag, [WireSpec("bond", k, UPPER), WireSpec(wl.label, wl.dim, LOWER)])
    return SvdResult(u_t, s, v_t)


def svd_reconstruct(s: SvdResult) -> np.ndarray:
    """u . diag(sigma) . v_dag as a plain matrix."""
    return (s.u.data * s.sigma[np.newaxis, :]) @ s.v_dag.data


# -- trimming ----------------------------------------------------------


@dataclass(frozen=True)
class TrimPolicy:
    """Either keep the ``chi`` largest singular values, or drop all
    singular values below the cutoff ``xi`` (absolute by default)."""

    chi: int | None = None
    xi: float | None = None
    relative: bool = False

    def __post_init__(self):
        if (self.chi is None) == (self.xi is None):
            raise ValueError("exactly one of chi / xi must be set")

    @classmethod
    def max_rank(cls, chi: int) -> "TrimPolicy":
        return cls(chi=int(chi))

    @classmethod
    def cutoff(cls, xi: float, relative: bool = False) -> "TrimPolicy":
        return cls(xi=float(xi), relative=relative)

    def keep_count(self, sigma: np.ndarray) -> int:
        if self.chi is not None:
            if self.chi < 1:
                raise DegenerateTrimError("max rank chi must be positive")
            return min(self.chi, sigma.size)
        xi = self.xi * (sigma[0] if sigma.size else 1.0) if self.relative else self.xi
        keep = int(np.sum(sigma >= xi))
        if keep == 0:
            raise DegenerateTrimError(f"cutoff {self.xi} discards every singular value")
        return keep


def trim(s: SvdResult, policy: TrimPolicy) -> tuple[SvdResult, float]:
    """Drop trailing singular values; returns the trimmed result and the
    discarded weight (sum of squares of dropped values).

    By Eckart-Young-Mirsky the Frobenius error of the trimmed
    reconstruction is exactly sqrt(discarded weight).
    """
    keep = policy.keep_count(s.sigma)
    dropped = s.sigma[keep:]
    discarded = float(np.sum(dropped**2))
    wu = s.u.wires[0]
    wl = s.v_dag.wires[1]
    u_t = Tensor(s.u.data[:, :keep], [wu, WireSpec("bond", keep, LOWER)])
    v_t = Tensor(s.v_dag.data[:keep, :], [WireSpec("bond", keep, UPPER), wl])
    return SvdResult(u_t, s.sigma[:keep].copy(), v_t), discarded


# -- Schmidt decomposition and reduced densities -----------------------


@dataclass
class SchmidtDecomposition:
    coeffs: np.ndarray  # nonincreasing, nonnegative
    left_vectors: np.ndarray  # columns are orthonormal kets on side A
    right_vectors: np.ndarray  # rows are orthonormal kets on side B

    @property
    def rank(self) -> int:
        return schmidt_rank(self.coeffs)


def schmidt(state: Tensor, left_labels: Sequence[str]) -> SchmidtDecomposition:
    """Schmidt decomposition of a ket across the given bipartition.

    ``state`` must have only UPPER wires; ``left_labels`` names side A.
    Reconstruction: sum_k coeffs[k] * left[:, k] (x) right[k, :].
    """
    if any(w.flavor is not UPPER for w in state.wires):
        raise ShapeError("schmidt expects a ket (all wires UPPER)")
    left_labels = list(left_labels)
    right_labels = [l for l in state.labels if l not in left_labels]
    if not left_labels or not right_labels:
        raise WireError("both sides of the bipartition must be non-empty")
    m, _ = matricize(state, left_labels, right_labels)
    u, s, v_dag = svd_matrix(m.data)
    return SchmidtDecomposition(s, u, v_dag)


def reduced_density(state: Tensor, keep_labels: Sequence[str]) -> Tensor:
    """Partial trace of |psi><psi| keeping the named subsystems.

    Result is an order-(k,k) tensor, Hermitian and PSD with unit trace for
    a normalized input ket.
    """
    if any(w.flavor is not UPPER for w in state.wires):
        raise ShapeError("reduced_density expects a ket (all wires UPPER)")
    if abs(state.norm() - 1.0) > 1e-8:
        raise ShapeError(f"state norm {state.norm():.3g} is not 1")
    keep_labels = list(keep_labels)
    keep_axes = [state.axis(l) for l in keep_labels]
    n = len(state.wires)
    sub_ket = list(range(n))
    # kept bra axes get fresh subscripts; traced axes share the ket's
    sub_bra = [i + n if i in keep_axes else i for i in range(n)]
    out = [*keep_axes, *(i + n for i in keep_axes)]
    rho = np.einsum(state.data, sub_ket, np.conj(state.data), sub_bra, out)
    wires = [state.wire(l) for l in keep_labels]
    wires += [WireSpec(w.label + "*", w.dim, LOWER) for w in wires]
    return Tensor(rho, wires)


# -- entropies ---------------------------------------------------------


def _check_probs(probs) -> np.ndarray:
    p = np.asarray(probs, dtype=float)
    if np.any(p < -1e-12):
        raise ValueError(f"negative probability in {p}")
    p = np.clip(p, 0.0, None)
    if abs(p.sum() - 1.0) > 1e-8:
        raise ValueError(f"probabilities sum to {p.sum()}, not 1")
    return p


def von_neumann(probs) -> float:
    """-sum p ln p with 0 ln 0 = 0 (natural log)."""
    p = _check_probs(probs)
    nz = p[p > 0]
    return float(-np.sum(nz * np.log(nz)))


def renyi_entropy(probs, q: float) -> float:
    """Renyi entropy (1/(1-q)) ln sum p^q, natural log, with 0^0 = 0.

    q = 1 dispatches to the von Neumann entropy; q = 0 gives ln(rank).
    """
    if q < 0:
        raise ValueError(f"order q must be >= 0, got {q}")
    p = _check_probs(probs)
    if q == 1:
        return von_neumann(p)
    nz = p[p > 0]
    if q == 0:
        return float(np.log(nz.size))
    return float(np.log(np.sum(nz**q)) / (1.0 - q))


def schmidt_rank(coeffs) -> int:
    """Number of singular values above RANK_TOL relative to the largest."""
    s = np.asarray(coeffs, dtype=float)
    if s.size == 0 or s.max() == 0.0:
        return 0
    return int(np.sum(s > RANK_TOL * s.max()))
