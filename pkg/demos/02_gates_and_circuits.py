"""Quantum gates as tensors and small circuit identities.

The catalog gates are plain dense tensors, so circuit identities become
numpy statements: CNOT splits into COPY and XOR, three CNOTs make a SWAP,
and the Bell circuit is a two-line contraction.
"""

import math

import numpy as np

import tensornet as tn

# CNOT = COPY on the control feeding XOR on the target
copy = tn.copy_tensor(2, 1).data
xor = tn.xor_tensor(2, 1).data
built = np.einsum("acn, xcb -> axnb", copy, xor)
print("CNOT = COPY/XOR contraction:", np.array_equal(built, tn.cnot().data))

# SWAP = three alternating CNOTs
c12 = tn.cnot().data.reshape(4, 4)
s = tn.swap().data.reshape(4, 4)
c21 = s @ c12 @ s
print("SWAP = CNOT CNOT CNOT:", np.array_equal(c12 @ c21 @ c12, s))

# the Hadamard hides inside AND: close the output with <-|
h = np.einsum("o,oab->ab", tn.minus_ket().data, tn.and_tensor().data)
print("H from AND and <-|:", np.allclose(h, tn.hadamard().data))

# Bell circuit: CNOT (H (x) I) |00>
circuit = c12 @ np.kron(tn.hadamard().data, np.eye(2))
bell = circuit @ np.array([1, 0, 0, 0])
print("Bell state:", np.round(bell * math.sqrt(2), 12))

# De Morgan as a tensor identity: NOT(a AND b) = (NOT a) OR (NOT b)
x = tn.not_tensor().data
lhs = np.einsum("oc,cab->oab", x, tn.and_tensor().data)
rhs = np.einsum("ocd,ca,db->oab", tn.or_tensor().data, x, x)
print("De Morgan:", np.array_equal(lhs, rhs))
