# Are four rods better than three?
#
# The standard 3-rod puller and the standard 4-rod puller look quite different,
# yet they stretch taffy at exactly the same rate.  Compile both motions to
# braids and compare.

from taffy.braids import burau_minus_one, char_poly, dominant_factor, largest_root
from taffy.devices import compile_braid, device
from taffy.dynnikov import entropy
from taffy.torus import conjugate, make_map, periodic_orbits

for name in ["standard_3rod", "standard_4rod"]:
    spec = device(name)
    b = compile_braid(spec)
    full = char_poly(burau_minus_one(b))
    p = dominant_factor(full)
    print(f"{name}: braid {b}")
    print(f"   Burau polynomial {full}  ->  {p}, dilatation {largest_root(p):.6f}")
    print(f"   loop growth per period {entropy(b).value:.6f}")

# on the torus the two motions are (5 2; 2 1) and (3 2; 4 3), conjugate by (1 0; 1 1)
three = make_map(5, 2, 2, 1)
four = make_map(3, 2, 4, 3)
print("conjugate:", conjugate(three, make_map(1, 0, 1, 1)) == four)

# the extra fixed points of the four-rod map; only two period-2 orbits are symmetric
orbits = periodic_orbits(four, 2)
print(len(orbits), "orbits of period 2")
for o in orbits:
    if o.is_involution_invariant():
        print("   symmetric:", ", ".join(map(str, o.points)))
