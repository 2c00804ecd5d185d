"""Permutation arithmetic and the group engine."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wexp import OverCapError, PermGroup, Permutation
from wexp.constructors import make_alternating, make_symmetric

import _catalog


def perm(text, degree=None):
    return Permutation.parse(text, degree)


perms_of_degree = st.integers(3, 8).flatmap(
    lambda n: st.permutations(range(1, n + 1)).map(Permutation.from_images)
)


def same_degree_pair(n):
    images = st.permutations(range(1, n + 1)).map(Permutation.from_images)
    return st.tuples(images, images)


class TestPermutation:
    def test_parse_and_str_round_trip(self):
        for text in ("(1 2)", "(1 2 3)", "(1 3)(2 4)", "(1 2 3 4 5)"):
            assert str(perm(text)) == text

    def test_identity(self):
        e = Permutation.identity(4)
        assert e.is_identity() and str(e) == "id" and e.order() == 1
        assert perm("id", 3) == Permutation.identity(3)
        assert perm("()", 3) == Permutation.identity(3)

    def test_composition_applies_left_factor_first(self):
        # (1 2) then (2 3) sends 1 -> 2 -> 3, i.e. equals (1 3 2)
        assert perm("(1 2)", 3) * perm("(2 3)", 3) == perm("(1 3 2)")
        assert perm("(2 3)", 3) * perm("(1 2)", 3) == perm("(1 2 3)")

    def test_conjugation_relabels_points(self):
        assert perm("(1 2)", 3).conjugate_by(perm("(1 3)", 3)) == perm("(2 3)", 3)
        assert perm("(1 2 3)").conjugate_by(perm("(1 2)", 3)) == perm("(2 1 3)", 3)

    def test_inverse_and_power(self):
        c = perm("(1 2 3 4)")
        assert c * c.inverse() == Permutation.identity(4)
        assert c**-1 == c.inverse()
        assert c**2 == perm("(1 3)(2 4)")
        assert c**4 == Permutation.identity(4)
        assert c**-3 == c

    def test_cycles_and_cycle_type(self):
        p = perm("(1 2)(3 4 5)", 6)
        assert p.cycles() == [(1, 2), (3, 4, 5)]
        assert p.cycle_type() == (3, 2, 1)  # descending, fixed point included
        assert p.order() == 6

    def test_image_of_and_moved_points(self):
        p = perm("(1 4)(2 3)", 5)
        assert p.image_of(1) == 4 and p.image_of(5) == 5
        assert p.moved_points() == [1, 2, 3, 4]

    def test_from_images_validates(self):
        with pytest.raises(ValueError):
            Permutation.from_images([1, 1, 3])
        with pytest.raises(ValueError):
            Permutation.from_images([0, 1, 2])

    def test_parse_rejects_bad_cycles(self):
        with pytest.raises(ValueError):
            perm("(1 2 1)")
        with pytest.raises(ValueError):
            perm("(1 5)", 3)
        with pytest.raises(ValueError):
            perm("(1 x)")

    def test_degree_mismatch_in_product(self):
        with pytest.raises(ValueError):
            perm("(1 2)", 3) * perm("(1 2)", 4)

    @given(perms_of_degree)
    def test_inverse_law(self, p):
        assert p * p.inverse() == Permutation.identity(p.degree)
        assert p.inverse() * p == Permutation.identity(p.degree)

    @given(st.integers(3, 7).flatmap(lambda n: st.tuples(*[
        st.permutations(range(1, n + 1)).map(Permutation.from_images)] * 3)))
    def test_associativity_and_conjugation_homomorphism(self, triple):
        p, q, r = triple
        assert (p * q) * r == p * (q * r)
        assert (p * q).conjugate_by(r) == p.conjugate_by(r) * q.conjugate_by(r)

    @given(perms_of_degree, st.integers(-12, 12))
    def test_power_matches_repeated_product(self, p, n):
        expected = Permutation.identity(p.degree)
        step = p if n >= 0 else p.inverse()
        for _ in range(abs(n)):
            expected = expected * step
        assert p**n == expected

    @given(perms_of_degree)
    def test_order_is_lcm_of_cycle_lengths(self, p):
        assert (p ** p.order()).is_identity()
        for d in range(1, p.order()):
            if p.order() % d == 0:
                assert not (p**d).is_identity() or d == p.order()


class TestPermGroup:
    def test_s3_element_listing_is_deterministic(self):
        g = make_symmetric(3)
        listed = [str(p) for p in g.elements()]
        assert listed == ["id", "(2 3)", "(1 2)", "(1 2 3)", "(1 3)", "(1 3 2)"]

    def test_orders_of_standard_groups(self):
        assert make_symmetric(5).order() == 120
        assert make_alternating(5).order() == 60
        assert PermGroup(4, [perm("(1 2 3 4)"), perm("(1 2)", 4)]).order() == 24

    def test_membership(self):
        g = make_alternating(4)
        assert g.contains(perm("(1 2 3)", 4))
        assert not g.contains(perm("(1 2)", 4))
        assert not g.contains(perm("(1 2 3)", 5))

    def test_orbit_and_orbits(self):
        g = PermGroup(5, [perm("(1 2 3)", 5), perm("(4 5)", 5)])
        assert g.orbit(1) == [1, 2, 3]
        assert g.orbits() == [[1, 2, 3], [4, 5]]

    def test_point_stabilizer_order_times_orbit(self):
        for name in ("S4", "A5", "D6", "PSL2(7)"):
            g = _catalog.group(name)
            for pt in (1, g.degree):
                stab = g.point_stabilizer(pt)
                assert stab.order() * len(g.orbit(pt)) == g.order()
                assert all(p.image_of(pt) == pt for p in stab.generators)

    def test_point_stabilizer_of_symmetric_is_smaller_symmetric(self):
        stab = make_symmetric(5).point_stabilizer(5)
        assert stab.order() == 24
        assert all(p.image_of(5) == 5 for p in stab.elements())

    def test_elements_cap(self):
        g = make_symmetric(5)
        assert len(g.elements()) == 120
        assert len(set(g.elements())) == 120
        with pytest.raises(OverCapError):
            g.elements(100)

    def test_elements_match_membership(self):
        g = _catalog.group("D6")
        els = g.elements()
        assert len(els) == 12
        assert all(g.contains(p) for p in els)

    def test_random_element_is_member_and_seeded(self):
        g = make_alternating(5)
        seq1 = [g.random_element(random.Random(7)) for _ in range(5)]
        seq2 = [g.random_element(random.Random(7)) for _ in range(5)]
        assert seq1 == seq2
        assert all(g.contains(p) for p in seq1)

    def test_trivial_group(self):
        g = PermGroup(3, [])
        assert g.order() == 1
        assert g.elements() == [Permutation.identity(3)]

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=25)
    def test_random_elements_cover_membership(self, seed):
        g = make_symmetric(4)
        p = g.random_element(random.Random(seed))
        assert g.contains(p)
