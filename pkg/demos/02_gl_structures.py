"""GL-structures: which automorphisms can decorate a rack, and when two
decorations count as the same.

Run as: python3 demos/02_gl_structures.py
"""

from glracks import (
    aut_group,
    check_gl,
    dihedral,
    down_map,
    flags,
    gl_classes,
    gl_structures,
    print_cycles,
    trivial_quandle,
)

# A GL-structure on a rack R is an automorphism u that commutes with every
# s_x.  These form a group: the centralizer of the inner group inside the
# full automorphism group.

r4 = dihedral(4)
aut = aut_group(r4)
structures = gl_structures(r4, aut)
print("dihedral quandle of order 4:")
print("  |Aut| =", aut.order)
print("  GL-structures:", [print_cycles(u) for u in structures.elements])

# Two structures give isomorphic GL-racks exactly when they are conjugate
# under the full automorphism group.  Conjugating only by the structure
# group itself would overcount: here two of the four structures fuse.
classes = gl_classes(r4, aut)
print("  classes:")
for rep, size in classes:
    print(f"    representative {print_cycles(rep)}  (orbit size {size})")

# Each (rack, u) pair carries a derived down map d with u d s_x(x) = x.
# On quandles d is just the inverse of u.
for rep, _size in classes:
    gl = check_gl(r4, rep)
    d = down_map(gl)
    print(
        f"  u = {print_cycles(rep):10s} d = {print_cycles(d):10s} "
        f"legendrian = {flags(gl).legendrian}"
    )

# On the trivial quandle every permutation is a GL-structure, and classes
# are exactly conjugacy classes of the symmetric group.
t4 = trivial_quandle(4)
print("\ntrivial quandle of order 4:")
print("  GL-structures:", gl_structures(t4).order)
print("  classes:", len(gl_classes(t4)))
