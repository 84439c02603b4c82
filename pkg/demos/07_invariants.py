"""Entanglement invariants as closed tensor networks.

Concurrence, the 3-tangle, and the Kempe invariant are all single
contractions of small networks built from copies of the state and
epsilon tensors; local unitaries cancel inside the network, so the
values only depend on the entanglement class.
"""

import math

import numpy as np

import tensornet as tn

bell = tn.ket(np.array([1, 0, 0, 1]) / math.sqrt(2), dims=[2, 2])
product = tn.ket([1, 0, 0, 0], dims=[2, 2])
print("concurrence(Bell) =", round(tn.concurrence(bell), 12))
print("concurrence(product) =", round(tn.concurrence(product), 12))

ghz = tn.ket(np.array([1, 0, 0, 0, 0, 0, 0, 1]) / math.sqrt(2), dims=[2, 2, 2])
w = tn.ket(np.array([0, 1, 1, 0, 1, 0, 0, 0]) / math.sqrt(3), dims=[2, 2, 2])
print("3-tangle(GHZ) =", round(tn.three_tangle(ghz), 12))
print("3-tangle(W) =", round(tn.three_tangle(w), 12))
print("kempe(GHZ) =", np.round(tn.kempe(ghz), 12))
print("kempe(W) =", np.round(tn.kempe(w), 12))

# invariance under random local unitaries
rng = np.random.default_rng(7)
def unitary():
    q, r = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    return q * (np.diag(r) / np.abs(np.diag(r)))

rotated = np.einsum("ai,bj,ck,ijk->abc", unitary(), unitary(), unitary(), ghz.data)
print("3-tangle after random local unitaries:",
      round(tn.three_tangle(tn.ket(rotated.reshape(-1), dims=[2, 2, 2])), 12))
