from __future__ import annotations

import numpy as np
import pytest

from amalgam_zdg import (
    Ideal,
    NotAnIdealError,
    amalgamated_duplication,
    build_graph,
    classify_zero_divisors,
    idealization,
    ideal_from_generators,
    is_ideal,
    make_zn,
    minimal_primes,
    parse_ideal_spec,
    parse_ring_spec,
    structure_checks,
    to_product_rep,
    verify_product_embedding,
    verify_ring_axioms,
    zero_divisors,
)

Z8 = make_zn(8)
I8 = ideal_from_generators(Z8, [4])


def dup(ring, gens):
    return amalgamated_duplication(ring, ideal_from_generators(ring, gens))


def full_dup(ring):
    return amalgamated_duplication(ring, Ideal(ring, frozenset(ring.elements())))


class TestConstruction:
    def test_order_and_identities(self):
        a = amalgamated_duplication(Z8, I8)
        assert a.ring.order == 16
        assert a.pair_of(a.ring.zero) == (0, 0)
        assert a.pair_of(a.ring.one) == (1, 0)
        assert verify_ring_axioms(a.ring) == []

    def test_known_nonzero_zero_divisors(self):
        a = amalgamated_duplication(Z8, I8)
        got = {a.ring.labels[v] for v in zero_divisors(a.ring) - {a.ring.zero}}
        assert got == {"(0,4)", "(4,4)", "(6,0)", "(2,0)", "(4,0)", "(2,4)", "(6,4)"}

    def test_two_element_field_full_duplication_is_one_edge(self):
        a = full_dup(make_zn(2))
        g = build_graph(a.ring)
        labels = {a.ring.labels[v] for v in g.vertices}
        assert labels == {"(0,1)", "(1,1)"}
        assert a.ring.mul(a.index_of(0, 1), a.index_of(1, 1)) == a.ring.zero

    def test_zero_ideal_reproduces_the_base_graph(self):
        r = make_zn(6)
        a = dup(r, [0])
        assert a.ring.order == r.order
        base, joined = build_graph(r), build_graph(a.ring)
        assert [a.pair_of(v)[0] for v in joined.vertices] == list(base.vertices)
        assert np.array_equal(base.adjacency, joined.adjacency)

    def test_non_ideal_is_rejected_with_detail(self):
        r = make_zn(6)
        with pytest.raises(NotAnIdealError, match="not closed under addition"):
            amalgamated_duplication(r, Ideal(r, frozenset({0, 1, 2})))

    def test_multiplication_rule(self):
        # (r,i)(s,j) = (rs, rj+si+ij) worked out at (1,3)(0,3) in Z6.
        r = make_zn(6)
        a = dup(r, [3])
        product = a.ring.mul(a.index_of(1, 3), a.index_of(0, 3))
        assert a.pair_of(product) == (0, 0)


class TestIdealization:
    def test_square_zero_multiplication(self):
        r = make_zn(4)
        ext = idealization(r, ideal_from_generators(r, [2]))
        v = ext.element_index("(1,2)")
        assert ext.labels[ext.mul(v, v)] == "(1,0)"

    def test_second_component_squares_to_zero(self):
        r = make_zn(6)
        ext = idealization(r, ideal_from_generators(r, [3]))
        zero_part = ext.element_index("(0,3)")
        assert ext.mul(zero_part, zero_part) == ext.zero

    def test_tables_match_duplication_when_ideal_squares_to_zero(self):
        a = amalgamated_duplication(Z8, I8)
        ext = idealization(Z8, I8)
        assert np.array_equal(a.ring.mul_table, ext.mul_table)
        assert np.array_equal(a.ring.add_table, ext.add_table)

    def test_tables_differ_when_ideal_square_is_nonzero(self):
        r = make_zn(6)
        ideal = ideal_from_generators(r, [2])
        a = amalgamated_duplication(r, ideal)
        ext = idealization(r, ideal)
        assert not np.array_equal(a.ring.mul_table, ext.mul_table)


class TestProductEmbedding:
    def test_known_images(self):
        a = amalgamated_duplication(Z8, I8)
        assert to_product_rep(a, a.index_of(4, 4)) == (4, 0)
        assert to_product_rep(a, a.ring.zero) == (0, 0)

    @pytest.mark.parametrize(
        "ring,gens",
        [(Z8, [4]), (make_zn(6), [3]), (make_zn(4), [1]), (parse_ring_spec("Z2xZ2"), [1])],
    )
    def test_embedding_is_exhaustively_verified(self, ring, gens):
        a = amalgamated_duplication(ring, ideal_from_generators(ring, gens))
        assert verify_product_embedding(a) == []


class TestProjectionKernels:
    def test_kernels_of_z6(self):
        a = dup(make_zn(6), [3])
        assert {a.ring.labels[m] for m in a.o1} == {"(0,0)", "(0,3)"}
        assert {a.ring.labels[m] for m in a.o2} == {"(0,0)", "(3,3)"}

    def test_kernels_are_ideals_of_matching_size(self):
        a = amalgamated_duplication(Z8, I8)
        assert len(a.o1) == len(a.o2) == len(a.ideal)
        assert is_ideal(a.ring, a.o1.members)
        assert is_ideal(a.ring, a.o2.members)
        assert a.o1.members & a.o2.members == {a.ring.zero}

    def test_domain_duplication_minimal_primes_are_the_kernels(self):
        a = full_dup(make_zn(3))
        got = {p.members for p in minimal_primes(a.ring)}
        assert got == {a.o1.members, a.o2.members}


class TestClassification:
    def test_z8_classes(self):
        a = amalgamated_duplication(Z8, I8)
        cls = classify_zero_divisors(a)
        zero = a.ring.zero
        lab = a.ring.labels
        assert {lab[v] for v in cls.t1 - {zero}} == {"(0,4)"}
        assert {lab[v] for v in cls.t2 - {zero}} == {"(4,4)"}
        assert {lab[v] for v in cls.t3} == {
            "(2,0)", "(2,4)", "(4,0)", "(4,4)", "(6,0)", "(6,4)",
        }
        assert cls.t4 == frozenset()

    def test_domain_case_has_only_kernel_classes(self):
        a = full_dup(make_zn(3))
        cls = classify_zero_divisors(a)
        zero = a.ring.zero
        assert cls.t3 == cls.t4 == frozenset()
        vertices = frozenset(build_graph(a.ring).vertices)
        assert (cls.t1 | cls.t2) - {zero} == vertices

    def test_zero_ideal_classes_collapse(self):
        a = dup(make_zn(6), [0])
        cls = classify_zero_divisors(a)
        zero = a.ring.zero
        assert cls.t1 == cls.t2 == frozenset({zero})
        assert cls.t4 == frozenset()

    def test_t4_disjoint_from_earlier_classes(self):
        a = full_dup(make_zn(4))
        cls = classify_zero_divisors(a)
        assert cls.t4
        assert not cls.t4 & (cls.t1 | cls.t2 | cls.t3)
        base_zd = zero_divisors(a.base)
        assert all(a.pair_of(v)[0] not in base_zd for v in cls.t4)

    @pytest.mark.parametrize(
        "spec,ideal_spec",
        [
            ("Z6", "gen(3)"),
            ("Z6", "gen(2)"),
            ("Z8", "gen(2)"),
            ("Z9", "full"),
            ("Z2xZ2", "gen((1,0))"),
            ("Z4", "full"),
            ("Z12", "gen(6)"),
        ],
    )
    def test_union_matches_brute_force(self, spec, ideal_spec):
        ring = parse_ring_spec(spec)
        a = amalgamated_duplication(ring, parse_ideal_spec(ring, ideal_spec))
        cls = classify_zero_divisors(a)
        zero = a.ring.zero
        assert cls.union() - {zero} == zero_divisors(a.ring) - {zero}


class TestStructure:
    def test_crossing_edges_in_z6(self):
        a = dup(make_zn(6), [3])
        checks = structure_checks(a)
        assert not checks.vacuous
        assert checks.crossings_complete
        assert checks.embeds_base

    def test_exclusive_neighbors_for_regular_members(self):
        checks = structure_checks(full_dup(make_zn(3)))
        assert checks.regular_members_exclusive and checks.all_hold()

    def test_zero_ideal_is_vacuous(self):
        checks = structure_checks(dup(make_zn(6), [0]))
        assert checks.vacuous
