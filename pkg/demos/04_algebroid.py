"""The Lie algebroid under the groupoid.

Prints anchor fields symbolically, checks the bracket facts that make the
structure a Lie algebroid, and confirms by finite differences that the
anchor really is the derivative of the groupoid's target map.
"""

import numpy as np

from ohopf.algebra import AlgebraElement
from ohopf.algebroid import (
    anchor,
    anchor_at,
    bracket_e0,
    constant_section,
    vf_commutator,
    verify_algebroid_symbolic,
    verify_groupoid_consistency,
)
from ohopf.polyring import PolyRing

ring = PolyRing(8)

# the anchor of the first basis section, openly
X = anchor(constant_section(8, 1, 0), ring)
print("rho(e1, 0), first three components of the d/dx block:")
for comp in X.u.coeffs[:3]:
    print("   ", comp)

# the bracket of two basis sections: coefficients are coordinates
s1, s2 = constant_section(8, 0, 0), constant_section(8, 0, 1)
br = bracket_e0(s1, s2, ring)
print("\n[(e0,0), (0,e0)] =  x0 (0,e0) - y0 (e0,0):")
print("    u block:", [str(c) for c in br.u.coeffs[:2]], "...")
print("    v block:", [str(c) for c in br.v.coeffs[:2]], "...")

# anchor is a bracket morphism, proved in full symbols
lhs = vf_commutator(anchor(s1, ring), anchor(s2, ring), ring)
rhs = anchor(br, ring)
print("\n[rho s1, rho s2] - rho[s1, s2] vanishes:", (lhs - rhs).is_zero())

report = verify_algebroid_symbolic()
print("\nsymbolic algebroid suite:", "all passed" if report.passed else "FAILED")
for check in report.checks:
    print("   %-26s %s" % (check.name, "ok" if check.passed else "FAIL"))

# numeric tie to the groupoid: d/dtau t(tau e_i, 0, x, y) = rho(e_i, 0)
report = verify_groupoid_consistency(samples=100, seed=3, tol=1e-6)
print("\nfinite differences vs anchor:", "all passed" if report.passed else "FAILED")
for check in report.checks:
    print("   %-26s max residual %s" % (check.name, check.info.get("max_residual", "-")))

# the anchor at a concrete point
rng = np.random.default_rng(0)
x = AlgebraElement(tuple(rng.normal(size=8)), 8)
y = AlgebraElement(tuple(rng.normal(size=8)), 8)
du, dv = anchor_at(AlgebraElement.basis(8, 0), AlgebraElement.zero(8), x, y)
print("\nrho(e0, 0) at a random point, dx block:", np.round(du.as_floats(), 4))
