"""Computational algebra for finite racks, quandles, and GL-racks.

The package enumerates racks up to isomorphism, classifies GL-structures on
them via automorphism-group centralizers, and exposes the morphism, functor,
and quotient machinery needed to cross-check every step independently.
"""

from .perm import (
    Permutation,
    SmallGroup,
    closure,
    centralizer,
    are_conjugate,
    conjugacy_classes,
    parse_cycles,
    print_cycles,
)
from .racks import (
    Rack,
    check_rack,
    is_quandle,
    is_medial,
    dual,
    theta,
    permutation_rack,
    trivial_quandle,
    takasaki,
    dihedral,
    conjugation_quandle,
    associated_quandle,
    medialization,
    transvection_group,
    profile,
)
from .glrack import GLRack, GLFlags, check_gl, down_map, is_legendrian, flags
from .morphisms import (
    is_rack_hom,
    enumerate_homs,
    find_iso,
    is_isomorphic,
    aut_group,
    inn_group,
    is_gl_hom,
    enumerate_gl_homs,
    find_gl_iso,
    aut_glr,
    hom_rack,
    hom_glrack,
    is_bihom,
)
from .classify import (
    ClassRecord,
    CountReport,
    gl_structures,
    gl_structures_brute,
    gl_classes,
    enumerate_racks,
    classify_gl,
    count_report,
)
from .functors import functor_f, functor_g, roundtrip_check, hom_transport_check
from .formats import StructureRecord, ingest_rack_library

__version__ = "0.1.0"
