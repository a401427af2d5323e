"""
Coparking functions of a three-face fan
=======================================

A fan with four spokes and three rim edges, whose bounded faces form a
cycle system.  The coparking functions are counted by degree and compared
with the h-vector from the Tutte polynomial.
"""

from cyclesystems import burn, degree_vector, enumerate_coparking, h_vector, maximal_elements, tutte
from cyclesystems import gallery

cs = gallery.three_face_system()
m = cs.matroid
print("cycles:", cs.lists())

functions = enumerate_coparking(cs)
print(len(functions), "coparking functions")
for a in functions:
    print("  ", a)

# degree histogram against the h-vector
print("degrees:", degree_vector(cs, functions))
print("h-vector:", h_vector(m))
print("T(x,y) =", tutte(m))

print("maximal:", maximal_elements(functions))

# the burning loop either empties sigma or gets stuck on a violating set
for a in [(2, 0, 2), (2, 2, 0)]:
    result = burn(cs, a)
    if result.is_coparking:
        print(a, "burns in order", result.order)
    else:
        print(a, "is stuck on", sorted(result.stuck))
