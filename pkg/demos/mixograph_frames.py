# The mixograph in two frames.
#
# In the lab the three vessel rods stand still and the gears sweep around.
# Riding along with the lid, the rods come back to their starting set every
# sixth of a period, so the whole motion is the sixth power of a short braid.

import math

import numpy as np

from taffy.devices import compile_braid, mixograph, positions
from taffy.dynnikov import entropy
from taffy.report import MIXOGRAPH_BRAID

lid = mixograph()
lab = mixograph(corotating=False)
print("rods:", lid.n_rods, " fixed in lid frame:", lid.n_fixed, " fixed in lab frame:", lab.n_fixed)

short = compile_braid(lid)
print("one sixth of a period:", short)
print("full period equals its sixth power:", compile_braid(lid, duration=1) == short**6)

h_lid = entropy(compile_braid(lid, duration=1), tol=1e-6).value
h_lab = entropy(compile_braid(lab, duration=1), tol=1e-6).value
print(f"entropy per period, lid frame {h_lid:.6f}, lab frame {h_lab:.6f}")

# the default gear ratios are a guess; the published braid stretches faster
print(f"default geometry dilatation per sixth: {math.exp(entropy(short).value):.4f}")
print(f"published braid dilatation per sixth:  {math.exp(entropy(MIXOGRAPH_BRAID).value):.4f}")

# distance of closest approach, a sanity check on the geometry
ts = np.linspace(0, 1 / 6, 400)
closest = min(
    np.min(np.linalg.norm(p[:, None] - p[None, :], axis=-1) + np.eye(len(p)) * 9)
    for p in (positions(lid, t) for t in ts)
)
print(f"rods never come closer than {closest:.3f}")
