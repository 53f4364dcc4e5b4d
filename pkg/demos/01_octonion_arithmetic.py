"""Octonion arithmetic from the ground up.

Walks the Cayley-Dickson tower R -> C -> H -> O -> S: the multiplication
table, the identities that survive each doubling, and the sedenion step
where the norm stops being multiplicative.
"""

from ohopf.algebra import (
    AlgebraElement,
    associator,
    doubling_table,
    mult_table,
    octonion_table,
    verify_algebra_identities,
)

E = [AlgebraElement.basis(8, i) for i in range(8)]

# The table in its raw form: e_i e_j = sign * e_index
sign, index = mult_table(8)
print("octonion multiplication table (index / sign):")
for i in range(8):
    print("  " + " ".join("%+d*e%d" % (sign[i][j], index[i][j]) for j in range(8)))

# The doubling recursion reproduces it exactly
print("\ndoubling construction agrees with the table:", doubling_table(8) == octonion_table())

# A few products worth knowing by heart
print("\ne1*e2 =", (E[1] * E[2]).coeffs)
print("e5*e4 =", (E[5] * E[4]).coeffs, " (antisymmetry of the triple 1-4-5)")
print("[e1, e2, e4] =", associator(E[1], E[2], E[4]).coeffs, " (nonzero: not associative)")

a = E[1] + E[2].scale(2)
print("\n[a, a, b] for a = e1+2e2, b = e7:", associator(a, a, E[7]).coeffs, "(alternative)")

# The identity suites prove everything symbolically, dimension by dimension
for dim in (1, 2, 4, 8, 16):
    report = verify_algebra_identities(dim)
    print("\ndim %-2d: %d checks, all passed = %s" % (dim, len(report.checks), report.passed))
    if dim == 16:
        for check in report.checks:
            if check.name == "norm_multiplicativity_fails":
                print("  sedenion norm witness:")
                print("    |a*b|^2   =", check.info["norm_sq_of_product"])
                print("    |a|^2|b|^2 =", check.info["product_of_norm_sq"])
