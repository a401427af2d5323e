"""
Bases and coparking functions through a deletion/contraction tree
=================================================================

A triangle with one doubled side has five spanning trees and five
coparking functions.  The tree pairs them up; the two iterative
algorithms reproduce the pairing without building the tree.
"""

from cyclesystems import basis_to_coparking, build_dc_tree, coparking_to_basis, leaves
from cyclesystems import gallery
from cyclesystems.bijection import leaves_tsv, tree_dot

cs = gallery.doubled_triangle_system()
xi = "abcd"

root = build_dc_tree(cs, xi)
print(leaves_tsv(root))

for leaf in leaves(root):
    basis = sorted(leaf.basis)
    a = basis_to_coparking(cs, basis, xi)
    back = sorted(coparking_to_basis(cs, a, xi))
    print(basis, "->", a, "->", back)

# graphviz source; render with `dot -Tpng`
print(tree_dot(root))
