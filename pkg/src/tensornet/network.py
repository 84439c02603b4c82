"""Tensor network graphs, greedy contraction ordering, and the
entanglement invariants that are naturally expressed as networks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import catalog
from .errors import ShapeError, WireError
from .tensor import LOWER, UPPER, Tensor, WireSpec, conjugate, raise_wire

End = tuple[int, str]  # (node id, wire label)


@dataclass
class ContractionPlan:
    """Ordered pairwise node merges; the merged node keeps the smaller id."""

    merges: list[tuple[int, int]] = field(default_factory=list)
    peak_size: int = 0


class TensorNetwork:
    """Multigraph of tensor nodes joined by bonds.

    Bonds join wires of equal dimension and opposite flavor; a wire can
    participate in at most one bond.  Nodes may be mutated (added,
    connected) until contraction, which is a pure function of the network.
    """

    def __init__(self):
        self._nodes: dict[int, Tensor] = {}
        self._bonds: list[tuple[End, End]] = []
        self._next_id = 0

    def add(self, t: Tensor) -> int:
        nid = self._next_id
        self._next_id += 1
        self._nodes[nid] = t
        return nid

    @property
    def nodes(self) -> dict[int, Tensor]:
        return dict(self._nodes)

    @property
    def bonds(self) -> list[tuple[End, End]]:
        return list(self._bonds)

    def _wire(self, end: End) -> WireSpec:
        nid, label = end
        if nid not in self._nodes:
            raise WireError(f"no node {nid}")
        return self._nodes[nid].wire(label)

    def connect(self, end_a: End, end_b: End) -> None:
        wa, wb = self._wire(end_a), self._wire(end_b)
        if wa.dim != wb.dim:
            raise WireError(f"bond {end_a}-{end_b}: dims {wa.dim} != {wb.dim}")
        if wa.flavor is wb.flavor:
            raise WireError(f"bond {end_a}-{end_b}: both wires are {wa.flavor.value}")
        for bond in self._bonds:
            if end_a in bond or end_b in bond:
                raise WireError(f"wire already bonded: {end_a if end_a in bond else end_b}")
        self._bonds.append((end_a, end_b))

    def open_wires(self) -> list[End]:
        bonded = {e for bond in self._bonds for e in bond}
        out = []
        for nid in sorted(self._nodes):
            for w in self._nodes[nid].wires:
                if (nid, w.label) not in bonded:
                    out.append((nid, w.label))
        return out

    # -- contraction ---------------------------------------------------

    def greedy_plan(self) -> ContractionPlan:
        """Deterministic greedy ordering: repeatedly merge the bonded pair
        whose contraction yields the smallest tensor, ties broken by the
        lowest (node id, node id) pair."""
        sizes = {}
        for nid, t in self._nodes.items():
            sizes[nid] = math.prod(w.dim for w in t.wires) or 1
        rep = {nid: nid for nid in self._nodes}
        pair_dims: dict[tuple[int, int], list[int]] = {}
        for (na, la), (nb, lb) in self._bonds:
            a, b = sorted((na, nb))
            d = self._wire((na, la)).dim
            if a == b:  # self-loop: trace shrinks the node, no pair merge
                sizes[a] //= d * d
            else:
                pair_dims.setdefault((a, b), []).append(d)
        plan = ContractionPlan(peak_size=max(sizes.values(), default=1))
        while pair_dims:
            best = None
            for (a, b), ds in pair_dims.items():
                cut = math.prod(ds)
                new_size = sizes[a] * sizes[b] // (cut * cut)
                key = (new_size, a, b)
                if best is None or key < best:
                    best = key
            new_size, a, b = best
            plan.merges.append((a, b))
            plan.peak_size = max(plan.peak_size, new_size)
            sizes[a] = new_size
            del sizes[b], pair_dims[(a, b)]
            for (x, y) in list(pair_dims):
                if b in (x, y):
                    other = x if y == b else y
                    na, nb = sorted((a, other))
                    pair_dims.setdefault((na, nb), []).extend(pair_dims.pop((x, y)))
        return plan

    def contract_all(self, plan: ContractionPlan | None = None) -> Tensor:
        """Contract every bond; open wires survive in declared order.

        Disconnected components are combined by tensor product (scalars
        multiply).  The result does not depend on the plan beyond floating
        point rounding.
        """
        if not self._nodes:
            return Tensor(np.array(1.0 + 0.0j), [])
        if plan is None:
            plan = self.greedy_plan()
        open_order = self.open_wires()

        arrays = {nid: t.data for nid, t in self._nodes.items()}
        keys = {nid: [(nid, w.label) for w in t.wires] for nid, t in self._nodes.items()}
        partner: dict[End, End] = {}
        for ea, eb in self._bonds:
            partner[ea] = eb
            partner[eb] = ea

        def trace_self(nid: int) -> None:
            while True:
                ks = keys[nid]
                hit = None
                for i, k in enumerate(ks):
                    p = partner.get(k)
                    if p is not None and p in ks:
                        hit = (i, ks.index(p))
                        break
                if hit is None:
                    return
                i, j = hit
                arrays[nid] = np.trace(arrays[nid], axis1=i, axis2=j)
                del partner[ks[i]], partner[ks[j]]
                keys[nid] = [k for idx, k in enumerate(ks) if idx not in (i, j)]

        for nid in list(arrays):
            trace_self(nid)

        for a, b in plan.merges:
            if a not in arrays or b not in arrays:
                raise WireError(f"plan refers to missing node pair ({a}, {b})")
            axes_a, axes_b = [], []
            for i, k in enumerate(keys[a]):
                p = partner.get(k)
                if p is not None and p in keys[b]:
                    axes_a.append(i)
                    axes_b.append(keys[b].index(p))
                    del partner[k], partner[p]
            if not axes_a:
                raise WireError(f"plan merges unbonded nodes ({a}, {b})")
            merged = np.tensordot(arrays[a], arrays[b], axes=(axes_a, axes_b))
            keep = min(a, b)
            drop = a + b - keep
            arrays[keep] = merged
            keys[keep] = [k for i, k in enumerate(keys[a]) if i not in axes_a] + [
                k for i, k in enumerate(keys[b]) if i not in axes_b
            ]
            del arrays[drop], keys[drop]
            trace_self(keep)

        if partner:
            raise WireError("plan did not touch every bond")

        # outer-product the remaining (disconnected) pieces in id order
        nids = sorted(arrays)
        data = arrays[nids[0]]
        all_keys = list(keys[nids[0]])
        for nid in nids[1:]:
            data = np.tensordot(data, arrays[nid], axes=0)
            all_keys += keys[nid]

        perm = [all_keys.index(end) for end in open_order]
        data = np.transpose(data, perm)
        wires = []
        taken = set()
        for nid, label in open_order:
            w = self._nodes[nid].wire(label)
            lab = label if label not in taken else f"n{nid}:{label}"
            taken.add(lab)
            wires.append(WireSpec(lab, w.dim, w.flavor))
        return Tensor(data, wires)


# -- invariants built as networks --------------------------------------


def _require_qubit_ket(psi: Tensor, n: int, what: str) -> None:
    if psi.order != (n, 0) or any(w.dim != 2 for w in psi.wires):
        raise ShapeError(f"{what} needs an order-({n},0) qubit ket, got {psi!r}")


def determinant_via_epsilon(s: Tensor) -> complex:
    """det(S) = eps_ij S^i_0 S^j_1 for a 2x2 order-(1,1) tensor."""
    if s.order != (1, 1) or any(w.dim != 2 for w in s.wires):
        raise ShapeError(f"determinant_via_epsilon needs a 2x2 order-(1,1) tensor, got {s!r}")
    up = next(w.label for w in s.wires if w.flavor is UPPER)
    low = next(w.label for w in s.wires if w.flavor is LOWER)
    net = TensorNetwork()
    eps = net.add(catalog.epsilon(2))
    s1 = net.add(s)
    s2 = net.add(s)
    k0 = net.add(Tensor([1, 0], [WireSpec("b", 2, UPPER)]))
    k1 = net.add(Tensor([0, 1], [WireSpec("b", 2, UPPER)]))
    net.connect((eps, "i0"), (s1, up))
    net.connect((eps, "i1"), (s2, up))
    net.connect((s1, low), (k0, "b"))
    net.connect((s2, low), (k1, "b"))
    return net.contract_all().item()


def concurrence(psi: Tensor) -> float:
    """|eps eps psi psi-bar-bra| = 2|det(psi)| for a two-qubit ket."""
    _require_qubit_ket(psi, 2, "concurrence")
    la, lb = psi.labels
    # the bra of the conjugate state has the unconjugated components
    bar = Tensor(psi.data, [WireSpec(w.label, w.dim, LOWER) for w in psi.wires])
    net = TensorNetwork()
    p1 = net.add(psi)
    p2 = net.add(bar)
    e1 = net.add(raise_wire(catalog.epsilon(2), "i1"))
    e2 = net.add(raise_wire(catalog.epsilon(2), "i1"))
    net.connect((e1, "i0"), (p1, la))
    net.connect((e1, "i1"), (p2, la))
    net.connect((e2, "i0"), (p1, lb))
    net.connect((e2, "i1"), (p2, lb))
    return abs(net.contract_all().item())


def three_tangle(psi: Tensor) -> float:
    """3-tangle tau = 2|tau'| from the six-epsilon, four-psi network.

    tau' contracts four copies of the state pairwise through epsilon
    tensors on every index; it equals twice the 2x2 determinant of the
    bilinear form b_kn = eps eps psi_..k psi_..n, i.e. twice Cayley's
    hyperdeterminant.
    """
    _require_qubit_ket(psi, 3, "three_tangle")
    l0, l1, l2 = psi.labels
    net = TensorNetwork()
    ps = [net.add(psi) for _ in range(4)]
    pairs = [  # (psi a, psi b, wire label): one epsilon per line
        (0, 1, l0),
        (0, 1, l1),
        (2, 3, l0),
        (2, 3, l1),
        (0, 2, l2),
        (1, 3, l2),
    ]
    for a, b, lab in pairs:
        e = net.add(catalog.epsilon(2))
        net.connect((e, "i0"), (ps[a], lab))
        net.connect((e, "i1"), (ps[b], lab))
    return 2.0 * abs(net.contract_all().item())


def kempe(psi: Tensor) -> complex:
    """Kempe invariant K = psi^ijk psibar_ilm psi^nlo psibar_pjo psi^pqm psibar_nqk."""
    _require_qubit_ket(psi, 3, "kempe")
    bar = Tensor(np.conj(psi.data), [WireSpec(w.label, w.dim, LOWER) for w in psi.wires])
    net = TensorNetwork()
    k1 = net.add(psi)   # ijk
    b2 = net.add(bar)   # ilm
    k3 = net.add(psi)   # nlo
    b4 = net.add(bar)   # pjo
    k5 = net.add(psi)   # pqm
    b6 = net.add(bar)   # nqk
    l0, l1, l2 = psi.labels
    for (na, wa), (nb, wb) in [
        ((k1, l0), (b2, l0)),  # i
        ((k1, l1), (b4, l1)),  # j
        ((k1, l2), (b6, l2)),  # k
        ((k3, l1), (b2, l1)),  # l
        ((k5, l2), (b2, l2)),  # m
        ((k3, l0), (b6, l0)),  # n
        ((k3, l2), (b4, l2)),  # o
        ((k5, l0), (b4, l0)),  # p
        ((k5, l1), (b6, l1)),  # q
    ]:
        net.connect((na, wa), (nb, wb))
    return net.contract_all().item()
