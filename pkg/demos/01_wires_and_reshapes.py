"""Tensors as wired boxes: flavors, bends, and the reshape orbit.

Every wire is either an output (UPPER) or an input (LOWER).  Contraction
only joins opposite flavors; bending a wire with a cup or cap changes its
flavor without touching the components, which is why the snake equation
holds bitwise.
"""

import numpy as np

import tensornet as tn

rng = np.random.default_rng(1)

# a generic matrix is an order-(1,1) tensor
m = tn.matrix(rng.normal(size=(2, 2)))
print("matrix:", m)

# bending the input wire up turns the map into a 2-wire state
state = tn.raise_wire(m, "in")
print("after raise_wire:", state, "order", state.order)
print("components unchanged:", np.array_equal(state.data, m.data))

# snake equation: bend down and back up through explicit cup/cap tensors
v = tn.ket(rng.normal(size=4), dims=[4], labels=["x"])
bent = tn.contract(tn.cap(4), [("i0", "x")], v)
back = tn.contract(bent, [("i1", "o0")], tn.cup(4))
print("snake equation holds bitwise:", np.array_equal(back.data, v.data))

# the reshape orbit: cups, caps, and swaps generate (p+q+1)! matrices
print("generic (1,1) tensor reshapes:", len(tn.enumerate_reshapes(m)))
sym = tn.Tensor([[1.0, 2.0], [2.0, 1.0]],
                [tn.WireSpec("a", 2, tn.UPPER), tn.WireSpec("b", 2, tn.LOWER)])
print("symmetric tensor reshapes (fewer):", len(tn.enumerate_reshapes(sym)))
