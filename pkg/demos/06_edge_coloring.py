"""Penrose's edge-coloring count: one epsilon tensor per node.

For planar 3-regular graphs the contraction equals the number of proper
3-edge-colorings.  For non-planar graphs the terms can cancel: K33 has
12 colorings but the contraction vanishes.
"""

import tensornet as tn

theta = tn.Graph(2, [(0, 1), (0, 1), (0, 1)])
print("theta graph:", tn.count_3_edge_colorings(theta).count,
      "(brute force", str(tn.brute_force_colorings(theta)) + ")")

cube = tn.Graph(8, [(0, 1), (1, 2), (2, 3), (3, 0),
                    (4, 5), (5, 6), (6, 7), (7, 4),
                    (0, 4), (1, 5), (2, 6), (3, 7)])
print("cube:", tn.count_3_edge_colorings(cube).count,
      "(brute force", str(tn.brute_force_colorings(cube)) + ")")

petersen = tn.Graph(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                         (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                         (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)])
print("Petersen (not 3-edge-colorable):", tn.count_3_edge_colorings(petersen).count)

k33 = tn.Graph(6, [(i, j) for i in range(3) for j in range(3, 6)])
print("K33 contraction:", tn.count_3_edge_colorings(k33).count,
      "but brute force finds", tn.brute_force_colorings(k33),
      "(non-planar: signed terms cancel)")
