"""Matrix product states: exact factorization by recursive SVD,
truncation with quantified error, amplitude evaluation, named states, and
bond entropies.

Cores are order-3 arrays with axes (left bond, physical, right bond).
The factorization sweep runs left to right and absorbs the singular
values into the right factor at every step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .decomp import RANK_TOL, TrimPolicy, renyi_entropy, svd_matrix
from .errors import ShapeError, SizeLimitError
from .tensor import UPPER, Tensor, WireSpec

OPEN = "open"
PERIODIC = "periodic"

DENSE_GUARD = 2**20  # refuse to densify anything larger than this


@dataclass
class MPS:
    cores: list[np.ndarray]
    boundary: str = OPEN

    def __post_init__(self):
        if self.boundary not in (OPEN, PERIODIC):
            raise ValueError(f"unknown boundary {self.boundary!r}")
        if not self.cores:
            raise ShapeError("MPS needs at least one core")
        for k, c in enumerate(self.cores):
            if c.ndim != 3:
                raise ShapeError(f"core {k} has {c.ndim} axes, expected 3")
        for k in range(len(self.cores) - 1):
            if self.cores[k].shape[2] != self.cores[k + 1].shape[0]:
                raise ShapeError(f"bond mismatch between cores {k} and {k + 1}")
        if self.boundary == OPEN:
            if self.cores[0].shape[0] != 1 or self.cores[-1].shape[2] != 1:
                raise ShapeError("open MPS requires boundary bond dimension 1")
        elif self.cores[0].shape[0] != self.cores[-1].shape[2]:
            raise ShapeError("periodic MPS requires matching ring bonds")

    def __len__(self) -> int:
        return len(self.cores)

    @property
    def phys_dims(self) -> tuple[int, ...]:
        return tuple(c.shape[1] for c in self.cores)

    @property
    def bond_dims(self) -> tuple[int, ...]:
        """Internal bond dimensions (between consecutive sites)."""
        return tuple(c.shape[2] for c in self.cores[:-1])


@dataclass
class CompressionReport:
    bond_dims: tuple[int, ...]
    discarded_weights: tuple[float, ...]  # per internal cut
    fidelity_bound: float
    fidelity: float
    dropped_counts: tuple[int, ...] = field(default=())

    def lines(self) -> list[str]:
        out = ["bond_dims=" + ",".join(str(d) for d in self.bond_dims)]
        for k, w in enumerate(self.discarded_weights):
            out.append(f"discarded_weight_cut_{k + 1}={w:.15g}")
        out.append(f"fidelity_bound={self.fidelity_bound:.15g}")
        out.append(f"fidelity={self.fidelity:.15g}")
        return out


# -- construction ------------------------------------------------------


def mps_from_dense(state: Tensor, policy: TrimPolicy | None = None) -> tuple[MPS, CompressionReport]:
    """Factor a dense ket into an open-boundary MPS by recursive SVD.

    ``policy=None`` keeps every singular value (exact factorization);
    otherwise each cut is trimmed and the final state is renormalized.
    """
    if any(w.flavor is not UPPER for w in state.wires):
        raise ShapeError("mps_from_dense expects a ket (all wires UPPER)")
    dims = [w.dim for w in state.wires]
    n = len(dims)
    cores: list[np.ndarray] = []
    weights: list[float] = []
    dropped: list[int] = []
    v = state.data.reshape(1, -1)
    rank = 1
    for k in range(n - 1):
        m = v.reshape(rank * dims[k], -1)
        u, s, v_dag = svd_matrix(m)
        if policy is None:
            # exact up to numerical rank: zero singular values carry nothing
            keep = max(int(np.sum(s > RANK_TOL * s[0])), 1) if s.size else 1
        else:
            keep = policy.keep_count(s)
        weights.append(float(np.sum(s[keep:] ** 2)))
        dropped.append(s.size - keep)
        cores.append(u[:, :keep].reshape(rank, dims[k], keep))
        v = s[:keep, np.newaxis] * v_dag[:keep, :]
        rank = keep
    cores.append(v.reshape(rank, dims[-1], 1))
    m = MPS(cores)
    nrm = norm(m)
    if policy is not None and nrm > 0:
        cores[-1] = cores[-1] / nrm
    fid = abs(inner_dense(m, state)) ** 2 / max(np.linalg.norm(state.data) ** 2, 1e-300)
    bound = _fidelity_bound(policy, weights, dropped)
    return m, CompressionReport(m.bond_dims, tuple(weights), bound, float(fid), tuple(dropped))


def _fidelity_bound(policy: TrimPolicy | None, weights: list[float], dropped: list[int]) -> float:
    if policy is not None and policy.xi is not None and not policy.relative:
        # quadratic bound: |<psi|psi''>|^2 >= 1 - sum_cuts n_c xi^2
        return 1.0 - policy.xi**2 * sum(dropped)
    return 1.0 - sum(weights)


# -- evaluation --------------------------------------------------------


def amplitude(m: MPS, config: Sequence[int]) -> complex:
    """Component of the state at the given physical configuration."""
    if len(config) != len(m):
        raise ShapeError(f"config has {len(config)} entries for {len(m)} sites")
    for k, (s, d) in enumerate(zip(config, m.phys_dims)):
        if not 0 <= s < d:
            raise ShapeError(f"config[{k}] = {s} out of range for dim {d}")
    prod = m.cores[0][:, config[0], :]
    for k in range(1, len(m)):
        prod = prod @ m.cores[k][:, config[k], :]
    if m.boundary == PERIODIC:
        return complex(np.trace(prod))
    return complex(prod[0, 0])


def to_dense(m: MPS) -> Tensor:
    """Full state vector as a Tensor; guarded against huge outputs."""
    total = math.prod(m.phys_dims)
    if total > DENSE_GUARD:
        raise SizeLimitError(f"dense state would have {total} amplitudes (> {DENSE_GUARD})")
    acc = m.cores[0]  # (l0, phys..., r)
    for c in m.cores[1:]:
        acc = np.tensordot(acc, c, axes=([-1], [0]))
    if m.boundary == PERIODIC:
        acc = np.trace(acc, axis1=0, axis2=acc.ndim - 1)
    else:
        acc = acc.reshape(m.phys_dims)
    wires = [WireSpec(f"s{k}", d, UPPER) for k, d in enumerate(m.phys_dims)]
    return Tensor(acc, wires)


def inner(a: MPS, b: MPS) -> complex:
    """<a|b> by the transfer-matrix ladder (no densification)."""
    if a.phys_dims != b.phys_dims:
        raise ShapeError(f"physical dimensions differ: {a.phys_dims} vs {b.phys_dims}")
    if a.boundary != b.boundary:
        raise ShapeError("boundary conditions differ")
    env = None  # ((la, lb), (ra, rb)) transfer product
    for ca, cb in zip(a.cores, b.cores):
        step = np.einsum("apr,bps->abrs", np.conj(ca), cb)
        if env is None:
            env = step
        else:
            env = np.einsum("abcd,cdrs->abrs", env, step)
    if a.boundary == PERIODIC:
        return complex(np.einsum("abab->", env))
    return complex(env[0, 0, 0, 0])


def inner_dense(m: MPS, state: Tensor) -> complex:
    """<mps|dense state> (helper for compression reports)."""
    return complex(np.vdot(to_dense(m).data, state.data))


def norm(m: MPS) -> float:
    return math.sqrt(max(inner(m, m).real, 0.0))


# -- named states ------------------------------------------------------


def ghz_mps(n: int, boundary: str = OPEN) -> MPS:
    """GHZ state (|0...0> + |1...1>)/sqrt(2).

    The natural reading of the trace formula is a periodic bond-2 chain of
    identical diagonal cores; ``boundary=OPEN`` (the default) converts it
    to open form by exact refactorization.
    """
    if n < 2:
        raise ShapeError("ghz_mps needs n >= 2")
    core = np.zeros((2, 2, 2), dtype=complex)
    core[0, 0, 0] = 1.0
    core[1, 1, 1] = 1.0
    cores = [core.copy() for _ in range(n)]
    cores[0] = cores[0] / math.sqrt(2.0)
    ring = MPS(cores, PERIODIC)
    if boundary == PERIODIC:
        return ring
    m, _ = mps_from_dense(to_dense(ring))
    return m


def w_mps(n: int) -> MPS:
    """W state (|10...0> + |010...0> + ... + |0...01>)/sqrt(n)."""
    if n < 3:
        raise ShapeError("w_mps needs n >= 3")
    first = np.zeros((1, 2, 2), dtype=complex)  # row vector (|1>, |0>)
    first[0, 1, 0] = 1.0
    first[0, 0, 1] = 1.0
    bulk = np.zeros((2, 2, 2), dtype=complex)  # [[|0>, 0], [|1>, |0>]]
    bulk[0, 0, 0] = 1.0
    bulk[1, 1, 0] = 1.0
    bulk[1, 0, 1] = 1.0
    last = np.zeros((2, 2, 1), dtype=complex)  # column vector (|0>; |1>)
    last[0, 0, 0] = 1.0
    last[1, 1, 0] = 1.0
    cores = [first / math.sqrt(n)] + [bulk.copy() for _ in range(n - 2)] + [last]
    return MPS(cores)


def aklt_chain(n: int) -> Tensor:
    """Dense AKLT-style chain built from singlets and spin-1 projectors.

    ``n`` singlets (epsilon / sqrt 2) are laid side by side and each of the
    n - 1 interior qubit pairs is projected onto the spin-1 subspace,
    leaving two dangling boundary qubit wires around n - 1 spin-1 wires.
    Wire order: left qubit, spin sites left to right, right qubit.
    """
    from . import catalog
    from .network import TensorNetwork
    from .tensor import raise_wire

    if n < 2:
        raise ShapeError("aklt_chain needs n >= 2 singlets")
    singlet = raise_wire(raise_wire(catalog.epsilon(2), "i0"), "i1") * (1.0 / math.sqrt(2.0))
    net = TensorNetwork()
    singlets = [net.add(singlet) for _ in range(n)]
    projectors = [net.add(catalog.aklt_projector()) for _ in range(n - 1)]
    for k, p in enumerate(projectors):
        net.connect((p, "i0"), (singlets[k], "i1"))      # right qubit of singlet k
        net.connect((p, "i1"), (singlets[k + 1], "i0"))  # left qubit of singlet k+1
    state = net.contract_all()
    # open wires arrive node-ordered: boundary qubits first, then spins
    order = [state.labels[0]] + list(state.labels[2:]) + [state.labels[1]]
    perm = [state.axis(l) for l in order]
    data = np.transpose(state.data, perm)
    wires = [WireSpec("qL", 2, UPPER)]
    wires += [WireSpec(f"s{k}", 3, UPPER) for k in range(n - 1)]
    wires += [WireSpec("qR", 2, UPPER)]
    return Tensor(data, wires)


# -- entropies and compression -----------------------------------------


def schmidt_values(m: MPS, cut: int) -> np.ndarray:
    """Schmidt coefficients across the bond between sites cut-1 and cut."""
    if m.boundary != OPEN:
        raise ShapeError("schmidt_values requires an open-boundary MPS")
    if not 1 <= cut < len(m):
        raise ShapeError(f"cut must be in [1, {len(m) - 1}], got {cut}")
    # left QR sweep up to the cut
    carry = np.eye(1, dtype=complex)
    for k in range(cut):
        c = np.tensordot(carry, m.cores[k], axes=(1, 0))
        l, p, r = c.shape
        q, carry = np.linalg.qr(c.reshape(l * p, r))
    r_left = carry
    # right LQ sweep down to the cut
    carry = np.eye(1, dtype=complex)
    for k in range(len(m) - 1, cut - 1, -1):
        c = np.tensordot(m.cores[k], carry, axes=(2, 0))
        l, p, r = c.shape
        q, rr = np.linalg.qr(c.reshape(l, p * r).conj().T)
        carry = rr.conj().T
    center = r_left @ carry
    s = np.linalg.svd(center, compute_uv=False)
    return s


def bond_entropy(m: MPS, cut: int, q: float = 1.0) -> float:
    """Renyi-q entanglement entropy across the given cut (natural log)."""
    s = schmidt_values(m, cut)
    p = s**2
    total = p.sum()
    if total <= 0:
        raise ShapeError("zero-norm state has no entanglement entropy")
    return renyi_entropy(p / total, q)


def compress(m: MPS, policy: TrimPolicy) -> tuple[MPS, CompressionReport]:
    """Sweep of SVD + trim across every bond of an open-boundary MPS.

    The result is renormalized; the report carries per-cut discarded
    weights, the quadratic fidelity lower bound, and the actual fidelity
    against the input state.
    """
    if m.boundary != OPEN:
        raise ShapeError("compress requires an open-boundary MPS")
    n = len(m)
    cores = [c.copy() for c in m.cores]
    # right-canonicalize so each later SVD sees true Schmidt values
    for k in range(n - 1, 0, -1):
        l, p, r = cores[k].shape
        mk = cores[k].reshape(l, p * r)
        q_, rr = np.linalg.qr(mk.conj().T)
        cores[k] = q_.conj().T.reshape(-1, p, r)
        cores[k - 1] = np.tensordot(cores[k - 1], rr.conj().T, axes=(2, 0))
    weights: list[float] = []
    dropped: list[int] = []
    for k in range(n - 1):
        l, p, r = cores[k].shape
        u, s, v_dag = svd_matrix(cores[k].reshape(l * p, r))
        keep = policy.keep_count(s)
        weights.append(float(np.sum(s[keep:] ** 2)))
        dropped.append(s.size - keep)
        cores[k] = u[:, :keep].reshape(l, p, keep)
        carry = s[:keep, np.newaxis] * v_dag[:keep, :]
        cores[k + 1] = np.tensordot(carry, cores[k + 1], axes=(1, 0))
    out = MPS(cores)
    nrm = norm(out)
    if nrm > 0:
        cores[-1] = cores[-1] / nrm
        out = MPS(cores)
    fid = abs(inner(m, out)) ** 2 / max(inner(m, m).real, 1e-300)
    bound = _fidelity_bound(policy, weights, dropped)
    return out, CompressionReport(out.bond_dims, tuple(weights), bound, float(fid), tuple(dropped))
