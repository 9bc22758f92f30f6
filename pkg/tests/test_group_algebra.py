import pytest
from hypothesis import given, settings, strategies as st

from abelcodes.group_algebra import (
    AbelianGroup,
    AlgebraElement,
    Subgroup,
    as_cyclic,
    cyclic_exponent,
    from_cyclic_exponents,
)

C15 = AbelianGroup([15])
C3x5 = AbelianGroup([3, 5])
C9x25 = AbelianGroup([9, 25])

SMALL_ODD_GROUPS = [
    AbelianGroup([9]),
    AbelianGroup([15]),
    AbelianGroup([3, 5]),
    AbelianGroup([3, 3]),
    AbelianGroup([45]),
    AbelianGroup([9, 25]),
]


def random_element(group, data):
    bits = data.draw(st.integers(0, (1 << group.order) - 1))
    return AlgebraElement(group, bits)


class TestAddition:
    def test_self_cancellation(self):
        x = AlgebraElement.from_terms(C15, [(1,), (7,)])
        assert (x + x).bits == 0

    def test_zero_is_identity(self):
        x = AlgebraElement.from_terms(C15, [(3,)])
        assert x + AlgebraElement.zero(C15) == x

    def test_middle_terms_cancel(self):
        one_plus_a = AlgebraElement.from_terms(C15, [(0,), (1,)])
        a_plus_a2 = AlgebraElement.from_terms(C15, [(1,), (2,)])
        assert one_plus_a + a_plus_a2 == AlgebraElement.from_terms(C15, [(0,), (2,)])

    def test_group_mismatch(self):
        with pytest.raises(ValueError, match="group mismatch"):
            AlgebraElement.one(C15) + AlgebraElement.one(C3x5)


class TestHat:
    def test_trivial_subgroup_is_one(self):
        assert Subgroup.trivial(C15).hat() == AlgebraElement.one(C15)

    def test_order_five_subgroup(self):
        h = Subgroup.from_generators(C15, [(3,)])
        hat = h.hat()
        assert hat.weight == 5
        assert hat * hat == hat

    def test_whole_group(self):
        assert Subgroup.whole(C15).hat() == AlgebraElement.all_ones(C15)

    def test_every_subgroup_hat_is_idempotent(self):
        from abelcodes.idempotents import all_subgroups

        for group in (C15, AbelianGroup([3, 3]), AbelianGroup([45])):
            for sub in all_subgroups(group):
                hat = sub.hat()
                assert hat * hat == hat


class TestMultiplication:
    def test_subgroup_hat_is_idempotent(self):
        a_hat = Subgroup.from_generators(C15, [(5,)]).hat()
        assert a_hat * a_hat == a_hat

    def test_disjoint_supports(self):
        one_plus_a = AlgebraElement.from_terms(C3x5, [(0, 0), (1, 0)])
        one_plus_b = AlgebraElement.from_terms(C3x5, [(0, 0), (0, 1)])
        product = one_plus_a * one_plus_b
        assert product == AlgebraElement.from_terms(
            C3x5, [(0, 0), (1, 0), (0, 1), (1, 1)]
        )

    def test_known_split_idempotent_product(self):
        # u = 1 + g^5, v = g^3 + g^12 in the cyclic order-15 group
        u = AlgebraElement.from_terms(C15, [(0,), (5,)])
        v = AlgebraElement.from_terms(C15, [(3,), (12,)])
        e = u * v + (u * u) * (v * v)
        assert sorted(e.support_ranks()) == [1, 2, 3, 4, 6, 8, 9, 12]

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from(SMALL_ODD_GROUPS[:4]), st.data())
    def test_ring_axioms(self, group, data):
        x = random_element(group, data)
        y = random_element(group, data)
        z = random_element(group, data)
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


class TestFrobenius:
    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(SMALL_ODD_GROUPS), st.data())
    def test_squaring_is_support_doubling(self, group, data):
        x = random_element(group, data)
        assert x * x == x.frobenius()

    def test_square_by_doubling_in_c5(self):
        c5 = AbelianGroup([5])
        x = AlgebraElement.from_terms(c5, [(1,), (4,)])
        assert x.frobenius() == AlgebraElement.from_terms(c5, [(2,), (3,)])


class TestPower:
    def test_first_power(self):
        x = AlgebraElement.from_terms(C15, [(2,), (7,)])
        assert x**1 == x

    def test_cube_of_block_is_component_unity(self):
        c5 = AbelianGroup([5])
        u = AlgebraElement.from_terms(c5, [(1,), (4,)])
        a_hat = Subgroup.whole(c5).hat()
        assert u**3 == AlgebraElement.one(c5) + a_hat

    def test_zeroth_power(self):
        x = AlgebraElement.from_terms(C15, [(2,)])
        assert x**0 == AlgebraElement.one(C15)


class TestTranslate:
    def test_identity_translation(self):
        x = AlgebraElement.from_terms(C15, [(1,), (2,)])
        assert x.translated((0,)) == x

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(SMALL_ODD_GROUPS), st.data())
    def test_weight_is_preserved(self, group, data):
        x = random_element(group, data)
        g = data.draw(st.sampled_from(list(group.elements())))
        assert x.translated(g).weight == x.weight

    def test_subgroup_sum_is_stable(self):
        a_hat = Subgroup.from_generators(C15, [(5,)]).hat()
        assert a_hat.translated((5,)) == a_hat


class TestAugmentation:
    def test_examples(self):
        assert AlgebraElement.one(C15).augmentation() == 1
        assert AlgebraElement.zero(C15).augmentation() == 0

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(SMALL_ODD_GROUPS[:4]), st.data())
    def test_ring_homomorphism(self, group, data):
        x = random_element(group, data)
        y = random_element(group, data)
        assert (x * y).augmentation() == x.augmentation() & y.augmentation()
        assert (x + y).augmentation() == x.augmentation() ^ y.augmentation()


class TestSubgroupClosure:
    def test_cyclic_subgroup_orders(self):
        assert Subgroup.from_generators(C15, [(3,)]).order == 5
        assert Subgroup.from_generators(C15, [(1,)]).order == 15

    def test_two_generator_closure(self):
        h = Subgroup.from_generators(C9x25, [(3, 0), (0, 5)])
        assert h.order == 15


class TestSerialization:
    def test_known_hex(self):
        # ranks 0 and 1 set, order 15 -> two little-endian bytes
        x = AlgebraElement.from_terms(C3x5, [(0, 0), (1, 0)])
        assert x.to_hex() == "0300"
        assert AlgebraElement.from_hex(C3x5, "0300") == x

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from(SMALL_ODD_GROUPS), st.data())
    def test_roundtrip(self, group, data):
        x = random_element(group, data)
        assert AlgebraElement.from_hex(group, x.to_hex()) == x


class TestCyclicBridge:
    def test_generator_exponents(self):
        assert cyclic_exponent(C3x5, (1, 0)) == 10
        assert cyclic_exponent(C3x5, (0, 1)) == 6
        assert cyclic_exponent(C3x5, (1, 1)) == 1

    def test_roundtrip(self):
        x = AlgebraElement.from_terms(C3x5, [(1, 2), (2, 0), (0, 4)])
        back = from_cyclic_exponents(C3x5, as_cyclic(x).support_ranks())
        assert back == x

    def test_rejects_non_coprime_factors(self):
        with pytest.raises(ValueError, match="coprime"):
            cyclic_exponent(AbelianGroup([3, 3]), (1, 1))
