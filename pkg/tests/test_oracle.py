import pytest

from wellgraded import (
    CapacityError,
    DomainError,
    SetFamily,
    StateSet,
    UsageError,
    distance,
    enumerate_families,
    is_union_closed,
    oracle_empty_set_criterion,
    oracle_is_base,
    oracle_is_well_graded,
    oracle_tight_path,
    oracle_wg_via_base_paths,
    span,
)

from conftest import SUBFAMILY_13_A, SUBFAMILY_13_B, GROUND_13, fam


class TestWellGraded:
    def test_full_family(self, family13):
        assert oracle_is_well_graded(family13)

    def test_base_alone_is_not(self, base13):
        assert not oracle_is_well_graded(base13)

    def test_both_minimal_subfamilies(self, family13):
        for sets in (SUBFAMILY_13_A, SUBFAMILY_13_B):
            sub = SetFamily.from_members(sets, ground=GROUND_13)
            assert oracle_is_well_graded(sub)
            assert span(sub) == family13

    def test_capacity(self, family13):
        with pytest.raises(CapacityError):
            oracle_is_well_graded(family13, limit=5)


class TestTightPath:
    def test_path_from_empty(self, family13):
        p = StateSet(family13.ground, 0)
        q = StateSet.of(family13.ground, ["a", "b", "c"])
        path = oracle_tight_path(family13, p, q)
        assert path is not None
        path.validate()
        assert path.steps[0] == p and path.steps[-1] == q
        assert len(path) == 3

    def test_identical_endpoints(self, family13):
        p = StateSet.of(family13.ground, ["a"])
        path = oracle_tight_path(family13, p, p)
        assert path is not None and len(path) == 0

    def test_none_within_base(self, base13):
        p = StateSet.of(base13.ground, ["c", "d"])
        q = StateSet.of(base13.ground, ["a", "b", "c", "d", "e"])
        assert oracle_tight_path(base13, p, q) is None

    def test_non_member(self, base13):
        with pytest.raises(UsageError):
            oracle_tight_path(
                base13,
                StateSet.of(base13.ground, ["a", "b"]),
                StateSet.of(base13.ground, ["a"]),
            )


class TestBasePathCriterion:
    def test_example_one_base(self, base13):
        assert oracle_wg_via_base_paths(base13)

    def test_gap(self):
        assert not oracle_wg_via_base_paths(fam("a", "c d"))

    def test_empty_only(self):
        assert oracle_wg_via_base_paths(fam("{}"))


class TestEmptySetCriterion:
    def test_example_one_base(self, base13):
        assert oracle_empty_set_criterion(base13)

    def test_unreachable_pair(self):
        assert not oracle_empty_set_criterion(fam("{}", "a", "b c"))

    def test_empty_only(self):
        assert oracle_empty_set_criterion(fam("{}"))

    def test_requires_empty(self):
        with pytest.raises(DomainError):
            oracle_empty_set_criterion(fam("a"))


class TestOracleIsBase:
    def test_simple(self):
        assert oracle_is_base(fam("a", "b"))
        assert not oracle_is_base(fam("a", "b", "a b"))


class TestEnumeration:
    def test_ground_one_counts(self):
        fams = list(enumerate_families(1))
        assert len(fams) == 3
        shapes = {tuple(sorted(f.masks)) for f in fams}
        assert shapes == {(0,), (1,), (0, 1)}

    def test_two_orders_agree(self):
        direct = sum(1 for _ in enumerate_families(2, is_union_closed))
        refiltered = sum(1 for f in enumerate_families(2) if is_union_closed(f))
        assert direct == refiltered

    def test_always_false_predicate(self):
        assert list(enumerate_families(2, lambda f: False)) == []

    def test_ground_limit(self):
        with pytest.raises(CapacityError):
            next(enumerate_families(5))


def test_returned_paths_always_tight(family13):
    ground = family13.ground
    sets = list(family13.sets)
    for p in sets:
        for q in sets:
            path = oracle_tight_path(family13, p, q)
            if path is not None:
                path.validate()
                assert len(path) == distance(p, q)
