"""#SAT by tensor contraction: the count is the value of a closed network.

Each variable becomes a COPY spider, each literal and clause a Boolean
gate, and summing over all assignments is closing every variable wire
with the unnormalized <+|.
"""

import tensornet as tn
from tensornet.counting import boolean_norm_value, formula_state_network

dimacs = """\
c (x1 or not x2) and (x2 or x3) and (not x1 or not x3)
p cnf 3 3
1 -2 0
2 3 0
-1 -3 0
"""

f = tn.parse_dimacs(dimacs)
result = tn.count_sat(f)
print("contraction count:", result.count, " raw:", result.raw)
print("brute force:", tn.brute_force_sat(f))

# the Boolean state |f> has one basis term per satisfying assignment
net, _ = formula_state_network(f)
state = net.contract_all()
support = [idx for idx, amp in zip(
    [(a, b, c) for a in range(2) for b in range(2) for c in range(2)],
    state.data.reshape(-1)) if abs(amp) > 0.5]
print("satisfying assignments:", support)

# <f|f> contracts two mirrored copies of the network to the same count
print("<f|f> =", boolean_norm_value(f))
