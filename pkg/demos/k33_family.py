"""
Running the tree on K3,3 without a cycle system
===============================================

K3,3 has no cycle system, but four 4-cycles through one edge keep the
unique union nonempty at every node.  The leaf vectors still count the
h-vector and form a pure multicomplex.
"""

from cyclesystems import GraphicMatroid, degree_vector, generalized_dc_tree, h_vector, maximal_elements
from cyclesystems import gallery

m = GraphicMatroid(gallery.k33())
found = generalized_dc_tree(m, gallery.k33_four_cycles(), gallery.k33_edge_order())
vectors = [leaf.coparking for leaf in found]

print(len(vectors), "leaves")
print("degrees: ", degree_vector(None, vectors))
print("h-vector:", h_vector(m))
tops = maximal_elements(vectors)
print(len(tops), "maximal vectors, degrees", sorted({sum(a) for a in tops}))
