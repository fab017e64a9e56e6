"""
Tests for regularity, quasi-inverses, the regular-semigroup classification
and idempotents.
"""

import pytest

from restricted_range.algorithms.core import compose, identity, image_of, kernel_of
from restricted_range.algorithms.semigroup import enumerate_members, is_member
from restricted_range.algorithms.structure import (
    idempotent_with_kernel,
    is_idempotent,
    is_regular_by_search,
    is_regular_element,
    is_regular_semigroup,
    nonregular_witness,
    quasi_inverse,
    regular_stratum,
    regularity_witness,
)
from restricted_range.schemas import (
    ErrorCode,
    KernelPartition,
    NotMemberError,
    NotRegularError,
    SemigroupError,
    make_map,
    make_universe,
)
from restricted_range.verification import universes


class TestRegularElement:

    def test_regular(self, u321):
        assert is_regular_element(u321, make_map("0,0,2"))

    def test_not_regular(self, u321):
        assert not is_regular_element(u321, make_map("0,0,1"))

    def test_full_semigroup_is_regular(self, u333):
        assert all(is_regular_element(u333, a) for a in enumerate_members(u333))

    def test_requires_member(self, u321):
        with pytest.raises(NotMemberError) as info:
            is_regular_element(u321, make_map("0,1,0"))
        assert info.value.code == ErrorCode.NOT_MEMBER

    def test_invariant_set_reading(self, u322):
        # with Z = Y the condition reads Xα ∩ Y ⊆ Yα
        for a in enumerate_members(u322):
            hits = image_of(a, u322.x).as_set() & set(u322.y)
            assert is_regular_element(u322, a) == (hits <= image_of(a, u322.y).as_set())

    def test_restricted_range_reading(self, u442):
        # with Y = X the condition reads Xα ⊆ Zα
        for a in enumerate_members(u442):
            assert is_regular_element(u442, a) == image_of(a, u442.x).issubset(image_of(a, u442.z))

    def test_regular_stratum(self, u432):
        assert regular_stratum(u432, make_map("0,1,1,3")) == 2
        assert regular_stratum(u432, make_map("1,1,1,3")) == 1

    @pytest.mark.slow
    def test_matches_brute_force(self):
        for u in universes(4):
            for a in enumerate_members(u):
                assert is_regular_element(u, a) == (is_regular_by_search(u, a) is not None)


class TestQuasiInverse:

    def test_no_outside_image(self, u321):
        assert quasi_inverse(u321, make_map("0,0,0")) == make_map("0,0,0")

    def test_outside_image(self, u321):
        assert quasi_inverse(u321, make_map("0,0,2")) == make_map("0,0,2")

    def test_identity(self, u333):
        assert quasi_inverse(u333, identity(3)) == identity(3)

    def test_not_regular(self, u321):
        with pytest.raises(NotRegularError) as info:
            quasi_inverse(u321, make_map("0,0,1"))
        assert info.value.code == ErrorCode.NOT_REGULAR

    def test_witness_postconditions(self, u432):
        for a in enumerate_members(u432):
            if not is_regular_element(u432, a):
                continue
            witness = regularity_witness(u432, a)
            assert is_member(u432, witness.quasi_inverse)
            assert compose(compose(a, witness.quasi_inverse), a) == a

    def test_search_finds_first_in_enumeration_order(self, u321):
        assert is_regular_by_search(u321, make_map("0,0,2")) == make_map("0,0,2")
        assert is_regular_by_search(u321, make_map("0,0,1")) is None


class TestRegularSemigroup:

    @pytest.mark.parametrize("n,m,k,expected", [
        (3, 2, 1, False),
        (5, 1, 1, True),
        (4, 4, 4, True),
        (4, 4, 1, True),
        (4, 4, 2, False),
        (4, 2, 2, False),
    ])
    def test_classification(self, n, m, k, expected):
        assert is_regular_semigroup(make_universe(n, m, k)) is expected

    def test_witness_small(self, u321):
        assert nonregular_witness(u321) == make_map("0,0,1")

    def test_witness_two_point_range(self, u432):
        assert nonregular_witness(u432) == make_map("0,0,0,2")

    def test_witness_invariant_set(self, u322):
        a = nonregular_witness(u322)
        assert a == make_map("0,0,1")
        assert not is_regular_element(u322, a)

    def test_witness_restricted_range(self, u442):
        assert nonregular_witness(u442) == make_map("0,0,1,1")

    def test_no_witness_in_regular_semigroup(self, u222):
        with pytest.raises(SemigroupError) as info:
            nonregular_witness(u222)
        assert info.value.code == ErrorCode.SEMIGROUP_REGULAR

    @pytest.mark.slow
    def test_matches_all_members_regular(self):
        for u in universes(4):
            assert is_regular_semigroup(u) == all(is_regular_element(u, a) for a in enumerate_members(u))


class TestIdempotents:

    @pytest.mark.parametrize("literal,expected", [("0,0,2", True), ("0,0,1", False), ("0,0,0", True)])
    def test_is_idempotent(self, u321, literal, expected):
        assert is_idempotent(u321, make_map(literal)) is expected

    def test_with_kernel(self, u321):
        assert idempotent_with_kernel(u321, KernelPartition.of(3, [[0, 1], [2]])) == make_map("0,0,2")

    def test_with_single_block(self, u321):
        assert idempotent_with_kernel(u321, KernelPartition.of(3, [[0, 1, 2]])) == make_map("0,0,0")

    def test_block_missing_z(self, u432):
        assert idempotent_with_kernel(u432, KernelPartition.of(4, [[0, 1], [2], [3]])) is None

    def test_kernel_is_respected(self, u432):
        p = KernelPartition.of(4, [[0, 2], [1], [3]])
        e = idempotent_with_kernel(u432, p)
        assert e == make_map("0,1,0,3")
        assert kernel_of(e) == p

    def test_partition_size_mismatch(self, u321):
        with pytest.raises(SemigroupError) as info:
            idempotent_with_kernel(u321, KernelPartition.of(2, [[0], [1]]))
        assert info.value.code == ErrorCode.DIMENSION_MISMATCH

    @pytest.mark.slow
    def test_kernel_existence_matches_brute_force(self):
        for u in universes(4):
            kernels = {kernel_of(a) for a in enumerate_members(u) if is_idempotent(u, a)}
            for a in enumerate_members(u):
                p = kernel_of(a)
                assert (idempotent_with_kernel(u, p) is not None) == (p in kernels)
