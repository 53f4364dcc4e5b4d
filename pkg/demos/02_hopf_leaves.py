"""The singular Hopf leaf decomposition, sampled.

Classifies points of D^2 into leaves (slope + radius), samples point clouds
on a leaf, writes them to CSV, and measures the leaf dimension at unit-sphere
points for each division algebra: 0, 1, 3, 7 along the tower.
"""

import math

import numpy as np

from ohopf.algebra import AlgebraElement
from ohopf.leaves import (
    INFINITY,
    LeafId,
    PointD2,
    classify,
    export_csv,
    leaf_dimension_at,
    sample_leaf,
    same_leaf,
)

E = [AlgebraElement.basis(8, i) for i in range(8)]
s = 1.0 / math.sqrt(2.0)

# classify a few points
print("classify (0, 2e1):   ", classify(PointD2(AlgebraElement.zero(8), E[1].scale(2.0))))
p = PointD2(E[1].scale(s), E[2].scale(s))
leaf = classify(p)
print("classify (e1, e2)/sqrt2: slope =", np.round(leaf.slope.as_floats(), 12), "r^2 =", leaf.radius_sq)

# two points on the same leaf, two points that are not
q = PointD2(E[0].scale(1.0), E[3].scale(0.0))
print("same leaf as itself:", same_leaf(p, p, 1e-9), " p vs (1, 0):", same_leaf(p, q, 1e-9))

# sample a leaf of slope e1 on the unit sphere and export it
pts = sample_leaf(LeafId(E[1], 1.0), 500, seed=41)
export_csv(pts, "leaf_e1.csv")
worst = max(abs(float(pt.x.norm_sq() + pt.y.norm_sq()) - 1.0) for pt in pts)
print("\nwrote leaf_e1.csv with 500 points, max |p|^2 - 1 =", worst)

pts_inf = sample_leaf(LeafId(INFINITY, 1.0), 5, seed=41)
print("five points of the infinite-slope leaf, x block all zero:",
      all(pt.x.is_zero() for pt in pts_inf))

# leaf dimensions along the tower: rank of the fiberwise tangency system
print("\nunit-sphere leaf dimension by algebra:")
rng = np.random.default_rng(2)
for dim in (1, 2, 4, 8):
    v = rng.normal(size=2 * dim)
    v /= np.linalg.norm(v)
    print("  dim %d -> leaf dimension %d" % (dim, leaf_dimension_at(v[:dim], v[dim:], dim)))
