from collections import Counter

import pytest

from abelcodes.cyclotomic import class_count
from abelcodes.group_algebra import AbelianGroup, AlgebraElement, Subgroup, as_cyclic
from abelcodes.idempotents import (
    family_pq,
    family_prime_power,
    family_three_primes,
    family_two_factor,
    p_group_idempotents,
    uv_block,
    verify_primitivity,
)
from abelcodes.number_theory import HypothesisError

GOLDEN_15 = [1, 2, 3, 4, 6, 8, 9, 12]
GOLDEN_33 = [1, 2, 3, 4, 6, 8, 9, 11, 12, 15, 16, 17, 18, 21, 22, 24, 25, 27, 29, 30, 31, 32]


class TestUVBlocks:
    def test_p3(self):
        g = AbelianGroup([3])
        block = uv_block(g, (1,), 3)
        assert block.element == AlgebraElement.from_terms(g, [(0,), (1,)])
        assert block.conjugate == AlgebraElement.from_terms(g, [(0,), (2,)])

    def test_p5(self):
        g = AbelianGroup([5])
        block = uv_block(g, (1,), 5)
        assert block.element == AlgebraElement.from_terms(g, [(1,), (4,)])

    def test_prime_power_level(self):
        g = AbelianGroup([9])
        h = Subgroup.from_generators(g, [(3,)])
        block = uv_block(g, (1,), 3, h)
        assert sorted(block.element.support_ranks()) == [0, 1, 3, 4, 6, 7]

    @pytest.mark.parametrize("p", [3, 5, 11, 13])
    def test_block_relations(self, p):
        g = AbelianGroup([p])
        block = uv_block(g, (1,), p)
        assert block.element + block.conjugate == block.unity
        assert block.element**3 == block.unity
        assert block.element.augmentation() == 0


class TestFamilyPQ:
    def test_c15_golden(self):
        fam = family_pq(3, 5)
        assert (fam.params["p"], fam.params["q"]) == (5, 3)
        assert fam.params["case"] == "b"
        assert sorted(as_cyclic(fam.elements["e3"]).support_ranks()) == GOLDEN_15
        assert sorted(as_cyclic(fam.elements["e4"]).support_ranks()) == [
            3, 6, 7, 9, 11, 12, 13, 14,
        ]
        assert fam.elements["e0"].weight == 15
        assert fam.predicted_dims == {"e0": 1, "e1": 2, "e2": 4, "e3": 4, "e4": 4}

    def test_c33_golden(self):
        fam = family_pq(3, 11)
        assert fam.params["case"] == "a"
        e3 = fam.elements["e3"]
        assert e3.weight == 22
        assert sorted(as_cyclic(e3).support_ranks()) == GOLDEN_33

    def test_c15_bit_exact_export(self):
        # frozen: rank order over factors [5, 3], little-endian bytes
        fam = family_pq(3, 5)
        assert list(fam.group.factor_orders) == [5, 3]
        assert {lab: fam.elements[lab].to_hex() for lab in fam.labels} == {
            "e0": "ff7f", "e1": "e07f", "e2": "de7b", "e3": "5e32", "e4": "9e49",
        }
        payload = fam.to_json()
        assert payload["idempotents"]["e3"]["hex"] == "5e32"
        assert payload["idempotents"]["e3"]["support_ranks"] == [1, 2, 3, 4, 6, 9, 12, 13]

    def test_e3_contains_the_generator(self):
        for p, q in ((3, 5), (3, 11), (11, 13)):
            fam = family_pq(p, q)
            assert fam.elements["e3"].contains((1, 1))
            assert not fam.elements["e4"].contains((1, 1))

    @pytest.mark.parametrize("pq", [(3, 5), (3, 11), (11, 13)])
    def test_axioms(self, pq):
        fam = family_pq(*pq)
        assert all(c["passed"] for c in fam.verify_axioms())
        assert len(fam.labels) == class_count(fam.group) == 5

    def test_rejects_bad_pairs(self):
        with pytest.raises(HypothesisError):
            family_pq(5, 11)


class TestFamilyPrimePower:
    def test_c45(self):
        fam = family_prime_power(3, 2, 5, 1)
        assert len(fam.labels) == 8
        assert fam.predicted_dims == {
            "I0": 1, "I01": 4, "I10": 2, "I20": 6,
            "I11*": 4, "I11**": 4, "I21*": 12, "I21**": 12,
        }
        assert all(c["passed"] for c in fam.verify_axioms())

    def test_c225_shape(self):
        fam = family_prime_power(3, 2, 5, 2)
        assert len(fam.labels) == 1 + 2 + 2 + 2 * 2 * 2
        assert fam.predicted_dims["I11*"] == 4
        assert fam.predicted_dims["I12*"] == 20
        assert fam.predicted_dims["I22*"] == 60
        assert sum(fam.predicted_dims.values()) == 225
        assert len(fam.labels) == class_count(fam.group)

    def test_deeper_exponent_dims_by_rank(self):
        fam = family_prime_power(3, 3, 5, 1)
        from abelcodes.codes import ideal_dimension

        assert sum(fam.predicted_dims.values()) == 135
        for label in fam.labels:
            assert ideal_dimension(fam.elements[label]) == fam.predicted_dims[label]

    def test_degenerate_case_equals_pq_family(self):
        pp = family_prime_power(3, 1, 5, 1)
        pq = family_pq(3, 5)
        pp_set = {as_cyclic(e).bits for e in pp.elements.values()}
        pq_set = {as_cyclic(e).bits for e in pq.elements.values()}
        assert pp_set == pq_set
        # labels correspond through the hat structure and the split order
        pairs = {
            "I0": "e0", "I01": "e2", "I10": "e1", "I11*": "e3", "I11**": "e4",
        }
        for pp_label, pq_label in pairs.items():
            assert as_cyclic(pp.elements[pp_label]).bits == as_cyclic(
                pq.elements[pq_label]
            ).bits
            assert pp.predicted_dims[pp_label] == pq.predicted_dims[pq_label]


class TestFamilyThreePrimes:
    def test_c165(self):
        fam = family_three_primes(3, 5, 11)
        assert len(fam.labels) == 14
        assert [fam.predicted_dims[l] for l in fam.labels] == [
            1, 10, 4, 2, 4, 4, 10, 10, 20, 20, 20, 20, 20, 20,
        ]
        assert sum(fam.predicted_dims.values()) == 165
        assert all(c["passed"] for c in fam.verify_axioms())
        assert len(fam.labels) == class_count(fam.group)

    def test_rejects_bad_triples(self):
        with pytest.raises(HypothesisError):
            family_three_primes(3, 5, 13)  # gcd(4, 12) = 4
        with pytest.raises(HypothesisError):
            family_three_primes(3, 5, 7)  # 2 has order 3 mod 7


class TestPGroupIdempotents:
    def test_c9(self):
        recs = p_group_idempotents([9])
        assert Counter(r.predicted_dim for r in recs) == Counter({1: 1, 2: 1, 6: 1})
        g = AbelianGroup([9])
        hat3 = Subgroup.from_generators(g, [(3,)]).hat()
        by_dim = {r.predicted_dim: r.element for r in recs}
        assert by_dim[1] == AlgebraElement.all_ones(g)
        assert by_dim[2] == hat3 + AlgebraElement.all_ones(g)
        assert by_dim[6] == AlgebraElement.one(g) + hat3

    def test_c3(self):
        recs = p_group_idempotents([3])
        g = AbelianGroup([3])
        elements = {r.element for r in recs}
        hat = AlgebraElement.all_ones(g)
        assert elements == {hat, AlgebraElement.one(g) + hat}

    def test_c3x3(self):
        recs = p_group_idempotents([3, 3])
        assert len(recs) == 5
        assert Counter(r.predicted_dim for r in recs) == Counter({1: 1, 2: 4})
        total = AlgebraElement.zero(AbelianGroup([3, 3]))
        for r in recs:
            assert r.element * r.element == r.element
            total = total + r.element
        assert total == AlgebraElement.one(AbelianGroup([3, 3]))

    def test_c27_depth_three_chain(self):
        recs = p_group_idempotents([27])
        assert Counter(r.predicted_dim for r in recs) == Counter({1: 1, 2: 1, 6: 1, 18: 1})
        from abelcodes.codes import ideal_dimension

        for rec in recs:
            assert ideal_dimension(rec.element) == rec.predicted_dim


class TestFamilyTwoFactor:
    def test_c3x3_times_c11_smoke(self):
        fam = family_two_factor([3, 3], [11])
        assert len(fam.labels) == 14
        assert sum(fam.predicted_dims.values()) == 99
        assert all(c["passed"] for c in fam.verify_axioms())
        assert len(fam.labels) == class_count(fam.group)

    def test_cyclic_case_matches_direct_construction(self):
        general = family_two_factor([9], [5])
        direct = family_prime_power(3, 2, 5, 1)
        assert {e.bits for e in general.elements.values()} == {
            e.bits for e in direct.elements.values()
        }


class TestPrimitivity:
    def test_scan_on_small_ideal(self):
        fam = family_pq(3, 5)
        report = verify_primitivity(fam.elements["e3"], 4)
        assert report["method"] == "exhaustive-scan"
        assert report["idempotents_found"] == 2
        assert report["primitive"] is True
        assert report["dimension_matches"]

    def test_family_certificate(self):
        fam = family_pq(11, 13)
        report = verify_primitivity(
            fam.elements["e3"], 60, budget=1 << 10, family_size=len(fam.labels)
        )
        assert report["method"] == "component-count"
        assert report["primitive"] is True

    def test_negative_control(self):
        g = AbelianGroup([3])
        report = verify_primitivity(AlgebraElement.one(g), None)
        assert report["idempotents_found"] == 4
        assert report["primitive"] is False

    def test_scan_agrees_with_convolution_idempotency(self):
        # spot check that the orbit-mask test used in the scan matches x*x == x
        fam = family_pq(3, 5)
        e3 = fam.elements["e3"]
        g = fam.group
        candidates = [
            e3,
            e3 + fam.elements["e4"],
            AlgebraElement.from_terms(g, [(1, 1)]),
            AlgebraElement.from_terms(g, [(1, 0), (2, 0)]),
        ]
        from abelcodes.cyclotomic import cyclotomic_classes

        masks = []
        for cls in cyclotomic_classes(g):
            m = 0
            for r in cls.member_ranks:
                m |= 1 << r
            masks.append(m)
        for x in candidates:
            mask_fixed = all(
                not (x.bits & m) or (x.bits & m) == m for m in masks
            )
            assert mask_fixed == (x * x == x)
