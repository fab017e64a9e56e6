"""
Tests for Λ, the starred Green's relations, their oracles, classes and
abundance.
"""

import pytest

from restricted_range.algorithms.relations import (
    abundance,
    abundance_table,
    classes_with_idempotent,
    l_related,
    lambda_related,
    lstar_oracle,
    lstar_related,
    r_related,
    relation_classes,
    rstar_oracle,
    rstar_related,
)
from restricted_range.algorithms.semigroup import members
from restricted_range.schemas import (
    ClassMethod,
    ErrorCode,
    MaterializationError,
    NotMemberError,
    RelationKind,
    SemigroupError,
    make_map,
    make_maps,
    make_universe,
)
from restricted_range.verification import universes


class TestLambda:

    def test_both_empty(self, u321):
        assert lambda_related(u321, make_map("0,0,0"), make_map("0,0,2"))

    def test_one_empty(self, u321):
        assert not lambda_related(u321, make_map("0,0,0"), make_map("0,0,1"))

    def test_reflexive(self, u432):
        for a in members(u432):
            assert lambda_related(u432, a, a)

    def test_wrong_case(self, u333):
        with pytest.raises(SemigroupError) as info:
            lambda_related(u333, make_map("0,1,2"), make_map("0,0,0"))
        assert info.value.code == ErrorCode.WRONG_CASE

    def test_requires_members(self, u321):
        with pytest.raises(NotMemberError):
            lambda_related(u321, make_map("0,1,0"), make_map("0,0,0"))


class TestLStar:

    def test_lambda_fails(self, u321):
        assert not lstar_related(u321, make_map("0,0,1"), make_map("0,0,0"))

    def test_outside_image_differs(self, u321):
        assert not lstar_related(u321, make_map("0,0,0"), make_map("0,0,2"))

    def test_same_image(self, u432):
        assert lstar_related(u432, make_map("0,1,0,0"), make_map("1,0,1,1"))

    def test_oracle_small(self, u321):
        elements = members(u321)
        for a in elements:
            for b in elements:
                assert lstar_oracle(u321, a, b) == lstar_related(u321, a, b)

    def test_oracle_is_image_equality(self, u432):
        elements = members(u432)
        for a in elements:
            for b in elements:
                assert lstar_oracle(u432, a, b) == (set(a.images) == set(b.images))

    def test_boundary_case_uses_oracle(self, u442):
        elements = members(u442)
        for a in elements[:20]:
            for b in elements:
                assert lstar_related(u442, a, b) == lstar_oracle(u442, a, b)


class TestRStar:

    def test_same_kernel(self, u321):
        assert rstar_related(u321, make_map("0,0,1"), make_map("0,0,2"))

    def test_different_kernel(self, u321):
        assert not rstar_related(u321, make_map("0,0,0"), make_map("0,0,2"))

    def test_reflexive(self, u432):
        for a in members(u432):
            assert rstar_related(u432, a, a)

    def test_oracle_is_kernel_equality(self, u432):
        elements = members(u432)
        for a in elements:
            for b in elements:
                same_kernel = all(
                    (a[x] == a[y]) == (b[x] == b[y]) for x in range(4) for y in range(4)
                )
                assert rstar_oracle(u432, a, b) == same_kernel

    @pytest.mark.slow
    def test_characterizations_match_oracles(self):
        for u in universes(4):
            elements = members(u)
            for a in elements:
                for b in elements:
                    assert lstar_related(u, a, b) == lstar_oracle(u, a, b)
                    assert rstar_related(u, a, b) == rstar_oracle(u, a, b)


class TestEquivalence:

    @pytest.mark.parametrize("related", [lstar_related, rstar_related])
    def test_equivalence_on_small_universes(self, related):
        for u in universes(3):
            elements = members(u)
            holds = {(a, b): related(u, a, b) for a in elements for b in elements}
            for a in elements:
                assert holds[(a, a)]
                for b in elements:
                    assert holds[(a, b)] == holds[(b, a)]
                    if not holds[(a, b)]:
                        continue
                    for c in elements:
                        if holds[(b, c)]:
                            assert holds[(a, c)]

    @pytest.mark.parametrize("kind,related", [
        (RelationKind.LSTAR, lstar_related),
        (RelationKind.RSTAR, rstar_related),
    ])
    def test_classes_are_exactly_the_related_pairs(self, kind, related):
        for u in list(universes(3)) + [make_universe(4, 3, 2)]:
            classes = relation_classes(u, kind).classes
            for i, left in enumerate(classes):
                for j, right in enumerate(classes):
                    for a in left:
                        for b in right:
                            assert related(u, a, b) == (i == j)


class TestGreen:

    def test_l_inside_lstar(self, u432):
        elements = members(u432)
        for a in elements:
            for b in elements:
                if l_related(u432, a, b):
                    assert lstar_related(u432, a, b)

    def test_r_inside_rstar(self, u432):
        elements = members(u432)
        for a in elements:
            for b in elements:
                if r_related(u432, a, b):
                    assert rstar_related(u432, a, b)

    def test_full_semigroup_l_is_image_equality(self, u222):
        assert l_related(u222, make_map("0,1"), make_map("1,0"))
        assert not l_related(u222, make_map("0,0"), make_map("1,1"))


class TestClasses:

    def test_lstar_singletons(self, u321):
        classes = relation_classes(u321, RelationKind.LSTAR)
        assert classes.classes == [[m] for m in make_maps("0,0,0", "0,0,1", "0,0,2")]

    def test_rstar_kernels(self, u321):
        classes = relation_classes(u321, RelationKind.RSTAR)
        assert classes.classes == [make_maps("0,0,0"), make_maps("0,0,1", "0,0,2")]

    def test_full_semigroup_lstar(self, u222):
        classes = relation_classes(u222, RelationKind.LSTAR)
        assert classes.classes == [make_maps("0,0"), make_maps("0,1", "1,0"), make_maps("1,1")]

    @pytest.mark.parametrize("kind", [RelationKind.LSTAR, RelationKind.RSTAR])
    def test_oracle_method_agrees(self, u432, kind):
        by_characterization = relation_classes(u432, kind)
        by_oracle = relation_classes(u432, kind, ClassMethod.ORACLE)
        assert by_characterization.classes == by_oracle.classes

    def test_classes_partition_the_semigroup(self, u432):
        classes = relation_classes(u432, RelationKind.LAMBDA)
        flattened = sorted(a for members_ in classes.classes for a in members_)
        assert flattened == members(u432)
        assert len(classes.classes) == 2

    def test_lambda_classes_need_proper_universe(self, u442):
        with pytest.raises(SemigroupError) as info:
            relation_classes(u442, RelationKind.LAMBDA)
        assert info.value.code == ErrorCode.WRONG_CASE

    def test_lambda_classes_have_no_oracle(self, u321):
        with pytest.raises(SemigroupError) as info:
            relation_classes(u321, RelationKind.LAMBDA, ClassMethod.ORACLE)
        assert info.value.code == ErrorCode.USAGE_ERROR

    def test_class_of(self, u321):
        classes = relation_classes(u321, RelationKind.RSTAR)
        assert classes.class_of(make_map("0,0,2")) == make_maps("0,0,1", "0,0,2")

    def test_idempotent_flags(self, u321):
        classes = relation_classes(u321, RelationKind.LSTAR)
        assert classes_with_idempotent(classes) == [True, False, True]

    def test_bound(self, small_params):
        with pytest.raises(MaterializationError):
            relation_classes(make_universe(4, 4, 4), RelationKind.RSTAR, params=small_params)


class TestAbundance:

    @pytest.mark.parametrize("n,m,k,pair", [
        (3, 3, 3, "(true, true)"),
        (4, 4, 1, "(true, true)"),
        (4, 4, 2, "(true, false)"),
        (4, 2, 2, "(true, true)"),
        (3, 2, 1, "(false, true)"),
        (4, 3, 2, "(false, false)"),
    ])
    def test_table(self, n, m, k, pair):
        assert abundance_table(make_universe(n, m, k)).pair() == pair

    def test_empirical_witness(self, u321):
        verdict = abundance(u321, empirical=True)
        assert (verdict.left, verdict.right) == (False, True)
        assert verdict.witness_class == make_maps("0,0,1")
        assert verdict.right_witness is None

    def test_empirical_neither(self, u432):
        verdict = abundance(u432, empirical=True)
        assert not verdict.left and not verdict.right
        assert verdict.left_witness and verdict.right_witness

    def test_empirical_full(self, u333):
        verdict = abundance(u333, empirical=True)
        assert verdict.abundant
        assert verdict.witness_class is None

    @pytest.mark.slow
    def test_empirical_matches_table(self):
        for u in universes(4):
            assert abundance(u, empirical=True).pair() == abundance_table(u).pair()
