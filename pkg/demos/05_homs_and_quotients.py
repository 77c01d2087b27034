"""Homomorphism enumeration, hom racks, and congruence quotients.

Run as: python3 demos/05_homs_and_quotients.py
"""

from glracks import (
    associated_quandle,
    check_gl,
    dihedral,
    enumerate_homs,
    hom_glrack,
    hom_rack,
    is_medial,
    is_quandle,
    medialization,
    parse_cycles,
    permutation_rack,
    print_cycles,
    trivial_quandle,
)

# All rack homomorphisms between two racks, by lexicographic backtracking
# with constraint propagation.
r3 = dihedral(3)
homs = enumerate_homs(r3, r3)
print("endomorphisms of the order-3 dihedral quandle:", len(homs))
for phi in homs:
    print("  ", tuple(v + 1 for v in phi))

# When the target is medial, the hom set itself carries a rack structure:
# (f * g)(x) = s_{g(x)}(f(x)) pointwise.
hom_r, _ = hom_rack(r3, r3)
print("\nhom rack order:", hom_r.n,
      " quandle:", is_quandle(hom_r), " medial:", is_medial(hom_r))

# The GL version restricts to structure-preserving maps; the result is a
# subrack of the full hom rack, with u acting by postcomposition.
g1 = check_gl(trivial_quandle(3), parse_cycles("(12)", 3))
g2 = check_gl(trivial_quandle(3), parse_cycles("(23)", 3))
gl_hom, gl_maps = hom_glrack(g1, g2)
print("GL-hom rack order:", gl_hom.n, " u =", print_cycles(gl_hom.u))

# Quotients: the associated quandle is the largest quandle image, found by
# congruence closure with union-find.  A constant-action rack collapses to
# a point; its quandle content is trivial.
p = permutation_rack(6, parse_cycles("(123)(45)", 6))
quandle, proj = associated_quandle(p)
print("\nconstant-action rack of order 6 collapses to order", quandle.n,
      "with projection", tuple(v + 1 for v in proj))

# The medialization works the same way for the mediality law.
nm = dihedral(3)
medial, _ = medialization(nm)
print("medialization of an already-medial quandle keeps order", medial.n)
