"""A first tour: building racks and inspecting their basic structure.

Run as: python3 demos/01_first_steps.py
"""

from glracks import (
    check_rack,
    dihedral,
    dual,
    is_medial,
    is_quandle,
    parse_cycles,
    permutation_rack,
    print_cycles,
    takasaki,
    theta,
    trivial_quandle,
)

# A rack on {0,...,n-1} is a list of permutations s_x, one per element,
# with s_x s_y = s_{s_x(y)} s_x.  check_rack verifies this and reports the
# first violated instance if it fails.

r3 = dihedral(3)
print("dihedral quandle of order 3:")
for x, p in enumerate(r3.s):
    print(f"  s_{x + 1} = {print_cycles(p)}")
print("quandle:", is_quandle(r3), " medial:", is_medial(r3))

# Takasaki's construction a * b = 2b - a mod m gives the same thing.
assert takasaki(3).tables() == r3.tables()

# A constant-action rack applies one permutation everywhere.  It is never
# a quandle unless the permutation is the identity.
sigma = parse_cycles("(1234)", 4)
p4 = permutation_rack(4, sigma)
print("\nconstant-action rack with sigma =", print_cycles(sigma))
print("quandle:", is_quandle(p4))

# The canonical map theta sends x to s_x(x).  It measures the failure of
# the quandle axiom: theta is the identity exactly on quandles.
print("theta of the constant-action rack:", print_cycles(theta(p4)))
print("theta of the dihedral quandle:", print_cycles(theta(r3)))

# The dual rack inverts every s_x; dualizing twice returns the original.
assert dual(dual(p4)).tables() == p4.tables()

# Hand-built tables work too.  This is the smallest nonmedial quandle:
# order 4, with three overlapping transpositions.
nm = check_rack(4, [parse_cycles(c, 4) for c in ["id", "(34)", "(24)", "(23)"]])
print("\nhand-built order-4 quandle:  medial:", is_medial(nm))

# Everything of order 4 or less except this one is medial.
print("trivial quandle is medial:", is_medial(trivial_quandle(4)))
