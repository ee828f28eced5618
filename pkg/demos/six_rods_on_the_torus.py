# The six-rod device lifts to the torus map (-1 -1; -2 -3).
# Its fixed points, their permutation, and the dilatation 2 + sqrt(3).

from taffy.braids import burau_minus_one, char_poly, permutation
from taffy.devices import compile_braid, device
from taffy.dynnikov import entropy
from taffy.torus import make_map, periodic_orbits, quadratic_dilatation

m = make_map(-1, -1, -2, -3)
for orbit in periodic_orbits(m, 1):
    print("fixed:", orbit.points[0])
print("dilatation", quadratic_dilatation(m).closed_form(), "=", quadratic_dilatation(m).value)

b = compile_braid(device("six_rod"))
perm = permutation(b)
print("braid over half a period:", b)
print("punctures go", {i + 1: perm[i] + 1 for i in range(6)})
print("Burau polynomial:", char_poly(burau_minus_one(b)))
print("loop growth:", entropy(b).value)
