"""Acceptance suite: one test per numbered criterion.

Each test ends with a single PASS line (printed only if every assertion
in the test held); pytest -v shows the per-criterion verdict either way.
"""

import itertools
import math
import time

import numpy as np
import pytest

import tensornet as tn
from tensornet.cli import main as cli_main
from tensornet.counting import formula_state_network
from tensornet.fileio import format_amplitudes

rng = np.random.default_rng(0xACCE97)

THETA_TEXT = "nodes 2\n0 1\n0 1\n0 1\n"
PETERSEN = tn.Graph(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                         (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                         (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)])
K33_TEXT = "nodes 6\n" + "\n".join(f"{i} {j}" for i in range(3) for j in range(3, 6)) + "\n"


def report(n, text, t0):
    print(f"PASS criterion {n}: {text} ({time.perf_counter() - t0:.3f}s)")


def random_qubit_ket(n):
    v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    v /= np.linalg.norm(v)
    return tn.ket(v, dims=[2] * n)


def random_unitary(d=2):
    m = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(m)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def ghz3():
    return tn.ket(np.array([1, 0, 0, 0, 0, 0, 0, 1]) / math.sqrt(2), dims=[2, 2, 2])


def w3():
    return tn.ket(np.array([0, 1, 1, 0, 1, 0, 0, 0]) / math.sqrt(3), dims=[2, 2, 2])


def test_criterion_01_theta_graph(tmp_path, capsys):
    t0 = time.perf_counter()
    f = tmp_path / "theta.txt"
    f.write_text(THETA_TEXT)
    assert cli_main(["color-count", str(f)]) == 0
    out = capsys.readouterr().out
    assert "count: 6" in out
    with capsys.disabled():
        report(1, "theta graph color-count returns 6", t0)


def test_criterion_02_petersen(capsys):
    t0 = time.perf_counter()
    assert tn.count_3_edge_colorings(PETERSEN).count == 0
    assert tn.brute_force_colorings(PETERSEN) == 0
    with capsys.disabled():
        report(2, "Petersen graph has 0 colorings, oracle agrees", t0)


def test_criterion_03_k33_mismatch(tmp_path, capsys):
    t0 = time.perf_counter()
    f = tmp_path / "k33.txt"
    f.write_text(K33_TEXT)
    code = cli_main(["color-count", str(f), "--brute-force"])
    out = capsys.readouterr().out
    assert code == 4
    assert "raw: 0" in out
    assert "brute_force: 12" in out
    with capsys.disabled():
        report(3, "K33 contraction vanishes (0 vs 12 brute force), exit 4", t0)


def test_criterion_04_planar_suite(capsys):
    t0 = time.perf_counter()
    k4 = tn.Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    prism = tn.Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
                         (0, 3), (1, 4), (2, 5)])
    cube = tn.Graph(8, [(0, 1), (1, 2), (2, 3), (3, 0),
                        (4, 5), (5, 6), (6, 7), (7, 4),
                        (0, 4), (1, 5), (2, 6), (3, 7)])
    for name, g in [("K4", k4), ("3-prism", prism), ("cube", cube)]:
        assert tn.count_3_edge_colorings(g).count == tn.brute_force_colorings(g), name
    with capsys.disabled():
        report(4, "planar suite (K4, 3-prism, cube) matches brute force exactly", t0)


def test_criterion_05_sat_oracle_equivalence(capsys):
    t0 = time.perf_counter()
    for _ in range(200):
        num_vars = int(rng.integers(1, 11))
        num_clauses = int(rng.integers(1, 16))
        clauses = []
        for _ in range(num_clauses):
            width = int(rng.integers(1, min(4, num_vars + 1)))
            vs = rng.choice(num_vars, size=width, replace=False) + 1
            clauses.append(tuple(int(v) * (1 if rng.random() < 0.5 else -1) for v in vs))
        f = tn.CnfFormula(num_vars, clauses)
        assert tn.count_sat(f).count == tn.brute_force_sat(f)
    with capsys.disabled():
        report(5, "count_sat equals brute_force_sat on 200 random CNFs", t0)


def test_criterion_06_boolean_states(capsys):
    t0 = time.perf_counter()
    # f_GHZ: all variables equal; f_W: exactly one variable true
    f_ghz = tn.CnfFormula(3, [(-1, 2), (1, -2), (-2, 3), (2, -3)])
    f_w = tn.CnfFormula(3, [(1, 2, 3), (-1, -2), (-1, -3), (-2, -3)])
    assert tn.count_sat(f_ghz).count == 2
    assert tn.count_sat(f_w).count == 3
    for f, support in [(f_ghz, {(0, 0, 0), (1, 1, 1)}),
                       (f_w, {(0, 0, 1), (0, 1, 0), (1, 0, 0)})]:
        net, _ = formula_state_network(f)
        state = net.contract_all()
        found = {idx for idx in itertools.product(range(2), repeat=3)
                 if abs(state.data[idx]) > 0.5}
        assert found == support
    with capsys.disabled():
        report(6, "f_GHZ count 2 and f_W count 3 with the expected supports", t0)


def test_criterion_07_mps_exactness(capsys):
    t0 = time.perf_counter()
    for _ in range(50):
        n = int(rng.integers(2, 9))
        state = random_qubit_ket(n)
        m, _ = tn.mps_from_dense(state)
        assert np.max(np.abs(tn.to_dense(m).data - state.data)) < 1e-10
        assert max(m.bond_dims) <= 2 ** (n // 2)
    with capsys.disabled():
        report(7, "MPS round trip exact within 1e-10 on 50 random states", t0)


def test_criterion_08_truncation_bounds(capsys):
    t0 = time.perf_counter()
    n = 8
    for _ in range(20):
        state = random_qubit_ket(n)
        for xi in (1e-1, 1e-2):
            approx, rep = tn.mps_from_dense(state, tn.TrimPolicy.cutoff(xi))
            n_c = sum(rep.dropped_counts)
            assert rep.fidelity >= 1.0 - n_c * xi**2 - 1e-12
            # linear bound uses the unnormalized truncation, whose squared
            # norm is exactly 1 - (total discarded weight)
            raw_norm = math.sqrt(max(0.0, 1.0 - sum(rep.discarded_weights)))
            diff = tn.to_dense(approx).data.reshape(-1) * raw_norm - state.data.reshape(-1)
            for _ in range(100):
                phi = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
                phi /= np.linalg.norm(phi)
                assert abs(np.vdot(phi, diff)) <= n * xi + 1e-12
    with capsys.disabled():
        report(8, "quadratic and linear truncation error bounds hold", t0)


def test_criterion_09_schmidt_formula(capsys):
    t0 = time.perf_counter()
    for _ in range(100):
        state = random_qubit_ket(2)
        a, b, c, d = state.data.reshape(-1)
        disc = math.sqrt(max(0.0, 1.0 - 4.0 * abs(a * d - b * c) ** 2))
        expect = np.array([(1 + disc) / 2, (1 - disc) / 2])
        got = np.sort(tn.schmidt(state, ["w0"]).coeffs ** 2)[::-1]
        assert np.max(np.abs(got - expect)) < 1e-10
    with capsys.disabled():
        report(9, "two-qubit Schmidt coefficients match the closed formula", t0)


def test_criterion_10_concurrence(capsys):
    t0 = time.perf_counter()
    psi = random_qubit_ket(2)
    a, b, c, d = psi.data.reshape(-1)
    assert abs(tn.concurrence(psi) - 2 * abs(a * d - b * c)) < 1e-10
    base = tn.concurrence(psi)
    for _ in range(50):
        u, v = random_unitary(), random_unitary()
        rotated = np.einsum("ai,bj,ij->ab", u, v, psi.data)
        val = tn.concurrence(tn.ket(rotated.reshape(-1), dims=[2, 2]))
        assert abs(val - base) < 1e-10
    bell = tn.ket(np.array([1, 0, 0, 1]) / math.sqrt(2), dims=[2, 2])
    assert abs(tn.concurrence(bell) - 1.0) < 1e-10
    assert tn.concurrence(tn.ket([1, 0, 0, 0], dims=[2, 2])) < 1e-10
    with capsys.disabled():
        report(10, "concurrence network equals 2|ad-bc| and is LU invariant", t0)


def test_criterion_11_gate_identities(capsys):
    t0 = time.perf_counter()
    tol = 1e-12
    # CNOT = COPY on the control feeding XOR on the target
    copy = tn.copy_tensor(2, 1).data
    xor = tn.xor_tensor(2, 1).data
    built = np.einsum("acn, xcb -> axnb", copy, xor)
    assert np.max(np.abs(built - tn.cnot().data)) < tol
    # SWAP = three alternating CNOTs
    c12 = tn.cnot().data.reshape(4, 4)
    s = tn.swap().data.reshape(4, 4)
    c21 = s @ c12 @ s
    assert np.max(np.abs(c12 @ c21 @ c12 - s)) < tol
    # Hadamard from AND with <-|
    minus = tn.minus_ket().data
    h_from_and = np.einsum("o,oab->ab", minus, tn.and_tensor().data)
    assert np.max(np.abs(h_from_and - tn.hadamard().data)) < tol
    # De Morgan: NOT(AND) = OR(NOT, NOT)
    x = tn.not_tensor().data
    lhs = np.einsum("oc,cab->oab", x, tn.and_tensor().data)
    rhs = np.einsum("ocd,ca,db->oab", tn.or_tensor().data, x, x)
    assert np.max(np.abs(lhs - rhs)) < tol
    # ZX = iY
    assert np.max(np.abs(tn.pauli_z().data @ tn.pauli_x().data - 1j * tn.pauli_y().data)) < tol
    # Bell circuit: CNOT (H (x) I)
    circuit = tn.cnot().data.reshape(4, 4) @ np.kron(tn.hadamard().data, np.eye(2))
    bell_00 = circuit @ np.array([1, 0, 0, 0])
    bell_11 = circuit @ np.array([0, 0, 0, 1])
    assert np.max(np.abs(bell_00 - np.array([1, 0, 0, 1]) / math.sqrt(2))) < tol
    assert np.max(np.abs(bell_11 - np.array([0, 1, -1, 0]) / math.sqrt(2))) < tol
    with capsys.disabled():
        report(11, "CNOT/SWAP/H/De Morgan/ZX=iY/Bell circuit identities exact", t0)


def test_criterion_12_snake_epsilon_suite(capsys):
    t0 = time.perf_counter()
    # snake equation, bitwise
    v = tn.ket(rng.normal(size=4) + 1j * rng.normal(size=4), dims=[4], labels=["x"])
    bent = tn.contract(tn.cap(4), [("i0", "x")], v)
    back = tn.contract(bent, [("i1", "o0")], tn.cup(4))
    assert np.array_equal(back.data, v.data)
    # epsilon-SWAP relation: eps^{ij} eps_{kl} = delta^i_k delta^j_l - delta^i_l delta^j_k
    eps = tn.epsilon(2).data.real
    outer = np.einsum("ij,kl->ijkl", eps, eps)
    delta = np.eye(2)
    expect = np.einsum("ik,jl->ijkl", delta, delta) - np.einsum("il,jk->ijkl", delta, delta)
    assert np.array_equal(outer, expect)
    # (U (x) U)|eps> = det(U)|eps>
    for _ in range(50):
        u = random_unitary()
        rotated = np.einsum("ai,bj,ij->ab", u, u, tn.epsilon(2).data)
        assert np.max(np.abs(rotated - np.linalg.det(u) * tn.epsilon(2).data)) < 1e-10
    # reshape orbit of a generic (1,1) tensor
    generic = tn.matrix(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    assert len(tn.enumerate_reshapes(generic)) == 6
    with capsys.disabled():
        report(12, "snake equation, epsilon relations, and 6-element reshape orbit", t0)


def test_criterion_13_entropy_area_law(capsys):
    t0 = time.perf_counter()
    ghz = tn.ghz_mps(4)
    for cut in (1, 2, 3):
        assert abs(tn.bond_entropy(ghz, cut) - math.log(2)) < 1e-10
    chains = [ghz, tn.w_mps(5)]
    chains.append(tn.mps_from_dense(random_qubit_ket(6))[0])
    for m in chains:
        for cut in range(1, len(m)):
            s = tn.schmidt_values(m, cut)
            chi = m.bond_dims[cut - 1]
            assert tn.schmidt_rank(s) <= chi
            p = s**2
            assert tn.bond_entropy(m, cut) <= math.log(chi) + 1e-12
    for _ in range(100):
        mdat = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
        res = tn.svd(tn.matrix(mdat))
        trimmed, w = tn.trim(res, tn.TrimPolicy.max_rank(int(rng.integers(1, 6))))
        resid = np.linalg.norm(mdat - tn.svd_reconstruct(trimmed)) ** 2
        assert abs(resid - w) < 1e-10
    with capsys.disabled():
        report(13, "GHZ entropies ln 2, rank/entropy bounds, Eckart-Young residuals", t0)


def tangle_oracle(psi):
    """Cayley hyperdeterminant form of the 3-tangle (independent summation)."""
    p = psi.data
    d1 = (p[0, 0, 0] ** 2 * p[1, 1, 1] ** 2 + p[0, 0, 1] ** 2 * p[1, 1, 0] ** 2
          + p[0, 1, 0] ** 2 * p[1, 0, 1] ** 2 + p[1, 0, 0] ** 2 * p[0, 1, 1] ** 2)
    d2 = (p[0, 0, 0] * p[1, 1, 1] * p[0, 1, 1] * p[1, 0, 0]
          + p[0, 0, 0] * p[1, 1, 1] * p[1, 0, 1] * p[0, 1, 0]
          + p[0, 0, 0] * p[1, 1, 1] * p[1, 1, 0] * p[0, 0, 1]
          + p[0, 1, 1] * p[1, 0, 0] * p[1, 0, 1] * p[0, 1, 0]
          + p[0, 1, 1] * p[1, 0, 0] * p[1, 1, 0] * p[0, 0, 1]
          + p[1, 0, 1] * p[0, 1, 0] * p[1, 1, 0] * p[0, 0, 1])
    d3 = (p[0, 0, 0] * p[1, 1, 0] * p[1, 0, 1] * p[0, 1, 1]
          + p[1, 1, 1] * p[0, 0, 1] * p[0, 1, 0] * p[1, 0, 0])
    return 4.0 * abs(d1 - 2 * d2 + 4 * d3)


def kempe_oracle(psi):
    p = psi.data
    q = np.conj(p)
    total = 0.0 + 0.0j
    for idx in itertools.product(range(2), repeat=9):
        i, j, k, l, m, n, o, pp, qq = idx
        total += (p[i, j, k] * q[i, l, m] * p[n, l, o]
                  * q[pp, j, o] * p[pp, qq, m] * q[n, qq, k])
    return total


def test_criterion_14_invariant_oracles(capsys):
    t0 = time.perf_counter()
    basis = tn.ket([1, 0, 0, 0, 0, 0, 0, 0], dims=[2, 2, 2])
    assert abs(tn.kempe(basis) - 1.0) < 1e-10
    assert abs(tn.kempe(ghz3()) - 0.25) < 1e-10
    assert abs(tn.kempe(ghz3()) - kempe_oracle(ghz3())) < 1e-10
    assert abs(tn.three_tangle(ghz3()) - 1.0) < 1e-10
    assert abs(tn.three_tangle(w3())) < 1e-10
    for _ in range(10):
        psi = random_qubit_ket(3)
        assert abs(tn.three_tangle(psi) - tangle_oracle(psi)) < 1e-10
        assert abs(tn.kempe(psi) - kempe_oracle(psi)) < 1e-10
    proj = tn.aklt_projector().data.reshape(3, 4)
    assert np.max(np.abs(proj @ proj.conj().T - np.eye(3))) < 1e-10
    with capsys.disabled():
        report(14, "kempe/tangle values match independent oracles, AKLT isometry", t0)
