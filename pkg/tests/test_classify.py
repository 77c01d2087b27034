import itertools

import pytest

from glracks.classify import (
    LongRunRequired,
    classify_gl,
    count_report,
    enumerate_racks,
    gl_classes,
    gl_structures,
    gl_structures_brute,
)
from glracks.glrack import check_gl
from glracks.morphisms import aut_group, find_gl_iso, is_isomorphic
from glracks.racks import check_rack, dihedral, is_medial, is_quandle

from golden_tables import EXPECTED_COUNTS, RACK_COUNTS


class TestEnumeration:
    def test_counts_up_to_5(self, racks_by_order):
        for n, racks in racks_by_order.items():
            assert len(racks) == RACK_COUNTS[n]

    def test_no_two_classes_isomorphic_order_4(self, racks_by_order):
        for a, b in itertools.combinations(racks_by_order[4], 2):
            assert not is_isomorphic(a, b)

    def test_every_rack_validates(self, small_racks):
        for n, rack in small_racks:
            check_rack(n, rack.s)

    def test_deterministic(self):
        assert [r.tables() for r in enumerate_racks(4)] == [
            r.tables() for r in enumerate_racks(4)
        ]

    def test_long_run_gate(self):
        with pytest.raises((LongRunRequired, ValueError)):
            enumerate_racks(7)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            enumerate_racks(-1)
        with pytest.raises(ValueError):
            enumerate_racks(9, long_run=True)


class TestGLStructures:
    def test_centralizer_equals_brute_force(self, racks_by_order):
        for n in (0, 1, 2, 3, 4):
            for rack in racks_by_order[n]:
                fast = set(gl_structures(rack).elements)
                assert fast == set(gl_structures_brute(rack))

    def test_structures_form_normal_subgroup_of_aut(self, small_racks):
        for _n, rack in small_racks:
            aut = aut_group(rack)
            u_group = gl_structures(rack, aut)
            for g in aut.elements:
                for u in u_group.elements:
                    assert g * u * g.inverse() in u_group

    def test_dual_has_same_structures(self, small_racks):
        from glracks.racks import dual

        for _n, rack in small_racks:
            assert set(gl_structures(rack).elements) == set(
                gl_structures(dual(rack)).elements
            )

    def test_classes_partition_structures(self, small_racks):
        for _n, rack in small_racks:
            aut = aut_group(rack)
            structures = gl_structures(rack, aut)
            classes = gl_classes(rack, aut)
            assert sum(size for _rep, size in classes) == structures.order
            reps = [rep for rep, _size in classes]
            assert reps == sorted(reps)

    def test_classes_are_aut_orbits_not_u_orbits(self):
        # on R_4 the two nontrivial-u classes fuse under the full
        # automorphism group but not under U itself
        rack = dihedral(4)
        classes = gl_classes(rack)
        assert len(classes) == 3
        assert sorted(size for _rep, size in classes) == [1, 1, 2]


class TestClassification:
    def test_full_counts_small(self):
        for n in range(5):
            report = count_report(n)
            assert (
                report.g,
                report.g_m,
                report.g_q,
                report.g_qm,
                report.r,
                report.r_m,
                report.r_q,
                report.r_qm,
            ) == EXPECTED_COUNTS[n]

    def test_complete_against_all_pairs_brute_force(self, racks_by_order):
        # every GL-structure on every rack of order <= 3 is GL-isomorphic to
        # exactly one classified representative
        for n in (0, 1, 2, 3):
            result = classify_gl(n, racks_by_order[n])
            reps = [rec.glrack() for rec in result.records]
            for rack in racks_by_order[n]:
                for u in gl_structures(rack).elements:
                    gl = check_gl(rack, u)
                    matches = [r for r in reps if find_gl_iso(gl, r) is not None]
                    assert len(matches) == 1

    def test_filters(self, racks_by_order):
        full = classify_gl(4, racks_by_order[4])
        quandles = classify_gl(4, racks_by_order[4], quandles_only=True)
        medial = classify_gl(4, racks_by_order[4], medial_only=True)
        assert len(quandles.records) == sum(
            1 for r in full.records if r.flags.gl_quandle
        )
        assert len(medial.records) == sum(1 for r in full.records if r.flags.medial)

    def test_jobs_deterministic(self, racks_by_order):
        serial = classify_gl(4, racks_by_order[4], jobs=1)
        parallel = classify_gl(4, racks_by_order[4], jobs=2)
        key = lambda rec: (rec.rack_index, rec.u.images)
        assert [key(r) for r in serial.records] == [key(r) for r in parallel.records]

    def test_records_carry_consistent_down_maps(self, racks_by_order):
        from glracks.glrack import down_map

        for rec in classify_gl(4, racks_by_order[4]).records:
            assert rec.d == down_map(rec.glrack())
            assert rec.flags.gl_quandle == is_quandle(rec.rack)
            assert rec.flags.medial == is_medial(rec.rack)
