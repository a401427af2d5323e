"""
Firing matrices of cycle systems
================================

The firing matrix has |C_i| on the diagonal and -|C_i & C_j| elsewhere.
For the fan it is an M-matrix; for the triangle system of the cone over
K5 it is not.
"""

import numpy as np

from cyclesystems import complete_graph, cone_circuit_system, exact_inverse, firing_matrix, is_m_matrix
from cyclesystems import gallery

for name, cs in [("fan", gallery.three_face_system()), ("cone over K5", cone_circuit_system(complete_graph(range(5))))]:
    lap = firing_matrix(cs)
    inv = np.array(exact_inverse(lap), dtype=float)
    print(name, "g =", cs.g, "M-matrix:", is_m_matrix(lap))
    print("  smallest inverse entry:", inv.min().round(4))

print(firing_matrix(gallery.three_face_system()))
