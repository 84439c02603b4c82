"""SVD trimming, Schmidt decomposition, and entanglement entropies."""

import numpy as np

import tensornet as tn

rng = np.random.default_rng(3)

# Eckart-Young: the discarded weight is exactly the squared residual
m = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
res = tn.svd(tn.matrix(m))
trimmed, weight = tn.trim(res, tn.TrimPolicy.max_rank(3))
residual = np.linalg.norm(m - tn.svd_reconstruct(trimmed)) ** 2
print(f"discarded weight {weight:.6f}  residual {residual:.6f}")

# Schmidt decomposition of a random 3-qubit state across (0 | 1,2)
v = rng.normal(size=8) + 1j * rng.normal(size=8)
v /= np.linalg.norm(v)
state = tn.ket(v, dims=[2, 2, 2])
dec = tn.schmidt(state, ["w0"])
print("Schmidt coefficients:", np.round(dec.coeffs, 6), "rank", dec.rank)

# the reduced density matrix has the squared coefficients as spectrum
rho = tn.reduced_density(state, ["w0"])
evals = np.sort(np.linalg.eigvalsh(rho.data))[::-1]
print("rho spectrum:", np.round(evals, 6))

p = dec.coeffs**2
print(f"von Neumann entropy {tn.von_neumann(p):.6f}")
for q in (0, 0.5, 2):
    print(f"Renyi H_{q} = {tn.renyi_entropy(p, q):.6f}")
