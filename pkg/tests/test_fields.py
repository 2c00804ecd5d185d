"""Finite field arithmetic."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wexp.fields import FiniteField, all_irreducibles, least_irreducible


FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (5, 2), (3, 3), (7, 2)]


class TestModulus:
    def test_least_irreducible_frozen_values(self):
        # coefficient tuples are constant-term first, leading monic term implicit
        assert least_irreducible(2, 2) == (1, 1)      # x^2 + x + 1
        assert least_irreducible(2, 3) == (1, 0, 1)   # x^3 + x^2 + 1
        assert least_irreducible(3, 2) == (1, 0)      # x^2 + 1
        assert least_irreducible(5, 2) == (1, 1)      # x^2 + x + 1
        assert least_irreducible(3, 3) == (1, 0, 2)   # x^3 + 2x^2 + 1
        assert least_irreducible(7, 2) == (1, 0)      # x^2 + 1

    def test_all_irreducible_quadratics_over_f3(self):
        assert all_irreducibles(3, 2) == [(1, 0), (2, 1), (2, 2)]

    def test_irreducible_count_matches_necklace_formula(self):
        # number of monic irreducible degree-d polynomials over GF(p)
        assert len(all_irreducibles(2, 3)) == 2
        assert len(all_irreducibles(2, 4)) == 3
        assert len(all_irreducibles(3, 2)) == 3
        assert len(all_irreducibles(5, 2)) == 10

    def test_bad_modulus_rejected(self):
        with pytest.raises(ValueError):
            FiniteField(3, 2, modulus=(0, 0))  # x^2, reducible
        with pytest.raises(ValueError):
            FiniteField(3, 2, modulus=(1, 0, 0))  # wrong length


class TestFieldStructure:
    @pytest.mark.parametrize("p,d", FIELDS)
    def test_size_and_identities(self, p, d):
        f = FiniteField(p, d)
        els = f.elements()
        assert len(els) == len(set(els)) == p**d
        for a in els:
            assert f.add(a, f.zero) == a
            assert f.mul(a, f.one) == a
            assert f.add(a, f.neg(a)) == f.zero

    @pytest.mark.parametrize("p,d", FIELDS)
    def test_alpha_generates_multiplicative_group(self, p, d):
        f = FiniteField(p, d)
        assert f.elem_order(f.alpha) == f.q - 1
        powers = {f.power(f.alpha, k) for k in range(f.q - 1)}
        assert len(powers) == f.q - 1 and f.zero not in powers

    @pytest.mark.parametrize("p,d", FIELDS)
    def test_inverse(self, p, d):
        f = FiniteField(p, d)
        for a in f.elements():
            if a == f.zero:
                with pytest.raises(ZeroDivisionError):
                    f.inverse(a)
            else:
                assert f.mul(a, f.inverse(a)) == f.one

    @pytest.mark.parametrize("p,d", FIELDS)
    def test_element_orders_divide_group_order(self, p, d):
        f = FiniteField(p, d)
        for a in f.elements():
            if a != f.zero:
                assert (f.q - 1) % f.elem_order(a) == 0

    def test_index_round_trip(self):
        f = FiniteField(3, 2)
        for k in range(f.q):
            assert f.index(f.element(k)) == k

    def test_size_cap(self):
        with pytest.raises(ValueError):
            FiniteField(2, 21, size_cap=1 << 20)

    def test_non_prime_characteristic_rejected(self):
        with pytest.raises(ValueError):
            FiniteField(4, 1)
        with pytest.raises(ValueError):
            FiniteField(6, 2)


class TestFieldLaws:
    @given(st.sampled_from([(2, 3), (3, 2), (5, 2)]), st.data())
    def test_ring_laws_on_sampled_triples(self, pd, data):
        f = FiniteField(*pd)
        pick = st.integers(0, f.q - 1).map(f.element)
        a, b, c = data.draw(pick), data.draw(pick), data.draw(pick)
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))

    def test_frobenius_is_additive_in_characteristic_p(self):
        f = FiniteField(3, 2)
        for a in f.elements():
            for b in f.elements():
                assert f.power(f.add(a, b), 3) == f.add(f.power(a, 3), f.power(b, 3))

    def test_no_zero_divisors(self):
        f = FiniteField(2, 3)
        nonzero = [a for a in f.elements() if a != f.zero]
        for a in nonzero:
            for b in nonzero:
                assert f.mul(a, b) != f.zero
