import random

import pytest

from wellgraded import (
    PathFamily,
    SetFamily,
    StateSet,
    ValidationError,
    minimal_wg_extension,
    oracle_is_well_graded,
    path_extension,
    span,
    verify_extension,
)
from wellgraded.generate import distinct_set_count, random_base, random_family

from conftest import fam


def sets_by_name(family: SetFamily) -> dict[tuple[str, ...], StateSet]:
    return {s.members(): s for s in family.sets}


class TestPathExtension:
    def test_single_pair(self):
        b = fam("{}", "a b")
        g = b.ground
        empty = StateSet(g, 0)
        ab = StateSet.of(g, ["a", "b"])
        a = StateSet.of(g, ["a"])
        pf = PathFamily.from_state_sets(
            {(empty, ab): [empty, a, ab], (ab, empty): [ab]}
        )
        assert path_extension(b, pf) == fam("{}", "a", "a b")

    def test_paths_inside_span_add_nothing(self, base_no_partition):
        spanned = span(base_no_partition)
        g = base_no_partition.ground
        paths = {}
        from wellgraded import oracle_tight_path

        for k in base_no_partition.sets:
            for l in base_no_partition.sets:
                if k == l:
                    continue
                paths[(k, l)] = oracle_tight_path(spanned, k, k | l).steps
        assert path_extension(base_no_partition, PathFamily.from_state_sets(paths)) == spanned

    def test_three_sets(self):
        b = fam("{}", "a", "b c")
        g = b.ground
        S = lambda *names: StateSet.of(g, names)
        empty = StateSet(g, 0)
        pf = PathFamily.from_state_sets(
            {
                (empty, S("a")): [empty, S("a")],
                (S("a"), empty): [S("a")],
                (empty, S("b", "c")): [empty, S("b"), S("b", "c")],
                (S("b", "c"), empty): [S("b", "c")],
                (S("a"), S("b", "c")): [S("a"), S("a", "b"), S("a", "b", "c")],
                (S("b", "c"), S("a")): [S("b", "c"), S("a", "b", "c")],
            }
        )
        assert path_extension(b, pf) == fam(
            "{}", "a", "b", "b c", "a b", "a b c"
        )

    def test_missing_pair_rejected(self):
        b = fam("{}", "a b")
        g = b.ground
        ab = StateSet.of(g, ["a", "b"])
        pf = PathFamily.from_state_sets({(ab, StateSet(g, 0)): [ab]})
        with pytest.raises(ValidationError, match="missing path"):
            path_extension(b, pf)

    def test_non_tight_path_rejected(self):
        b = fam("{}", "a")
        g = b.ground
        empty = StateSet(g, 0)
        a = StateSet.of(g, ["a"])
        pf = PathFamily.from_state_sets(
            {(empty, a): [empty, a, empty, a], (a, empty): [a]}
        )
        with pytest.raises(ValidationError, match="not tight"):
            path_extension(b, pf)

    def test_wrong_endpoints_rejected(self):
        b = fam("a", "b")
        g = b.ground
        a = StateSet.of(g, ["a"])
        bb = StateSet.of(g, ["b"])
        pf = PathFamily.from_state_sets({(a, bb): [a], (bb, a): [bb]})
        with pytest.raises(ValidationError, match="wrong endpoints"):
            path_extension(b, pf)

    def test_random_valid_path_families_are_well_graded(self):
        rng = random.Random(20)
        for _ in range(40):
            b = random_family(rng, n=rng.randint(2, 4), ell=3, ground_size=4)
            paths = {}
            for k in b.sets:
                for l in b.sets:
                    if k == l:
                        continue
                    target = k | l
                    steps = [k]
                    cur = k
                    missing = [
                        i for i in range(len(b.ground)) if target.mask >> i & 1 and not cur.mask >> i & 1
                    ]
                    rng.shuffle(missing)
                    for i in missing:
                        cur = StateSet(b.ground, cur.mask | (1 << i))
                        steps.append(cur)
                    paths[(k, l)] = steps
            ext = path_extension(b, PathFamily.from_state_sets(paths))
            assert oracle_is_well_graded(ext)
            assert all(m in set(ext.masks) for m in b.masks)


class TestMinimalExtension:
    def test_already_wg_base_is_fixpoint(self, base_no_partition):
        res = minimal_wg_extension(base_no_partition, check_tables=True)
        assert res.added == ()
        assert res.spanned() == span(base_no_partition)

    def test_two_set_gap_prefers_a(self):
        res = minimal_wg_extension(fam("{}", "a b"), check_tables=True)
        assert [s.members() for s in res.added] == [("a",)]
        assert res.spanned() == fam("{}", "a", "a b")

    def test_three_set_case_adds_one_singleton(self):
        b = fam("{}", "a", "b c")
        res = minimal_wg_extension(b, check_tables=True)
        assert len(res.added) == 1
        assert res.added[0].members() in {("b",), ("c",)}
        assert len(res.spanned()) == 6

    def test_group_mismatch_regression(self):
        # two pending pairs can satisfy the one-sided inclusion predicate
        # while holding different S values; grouping must compare S values
        b = fam("d1 d2", "d1 d2 e f", "c1 c2", "c1 c2 d1 d2")
        res = minimal_wg_extension(b, check_tables=True)
        assert verify_extension(b, res.spanned()).verdict

    def test_monotone_cardinality_growth(self):
        for b in (
            fam("{}", "a b", "c d e"),
            fam("a", "b c", "a b c d"),
            fam("{}", "a b c"),
        ):
            res = minimal_wg_extension(b, check_tables=True)
            cards = [len(s) for s in res.added]
            assert cards == sorted(cards)

    def test_paths_cover_all_ordered_pairs(self):
        b = fam("{}", "a b", "c")
        res = minimal_wg_extension(b)
        res.paths.validate(b)
        total = res.paths.total_length()
        budget = sum(len(l) for k in b.sets for l in b.sets if k != l)
        assert total <= budget

    def test_idempotent_on_output_base(self):
        rng = random.Random(4)
        for _ in range(30):
            b = random_family(
                rng,
                n=rng.randint(1, 5),
                ell=rng.randint(1, 4),
                ground_size=5,
                include_empty=rng.random() < 0.5,
            )
            res = minimal_wg_extension(b)
            again = minimal_wg_extension(res.base)
            assert again.added == ()
            assert again.spanned() == res.spanned()

    def test_state_tables(self):
        b = fam("{}", "a b")
        res = minimal_wg_extension(b)
        g = b.ground
        empty = StateSet(g, 0)
        ab = StateSet.of(g, ["a", "b"])
        s = res.state.s_table[(empty, ab)]
        assert s.members() == ("a",)
        assert res.state.c(empty, ab, empty, ab)


class TestVerifyExtension:
    def test_accepts_minimal(self):
        b = fam("{}", "a b")
        assert verify_extension(b, fam("{}", "a", "a b")).verdict

    def test_rejects_non_minimal(self):
        b = fam("{}", "a b")
        report = verify_extension(b, fam("{}", "a", "b", "a b"))
        assert not report.verdict
        assert "not minimal" in report.witnesses[0].reason

    def test_accepts_span_of_wg_base(self, base_no_partition):
        assert verify_extension(base_no_partition, span(base_no_partition)).verdict

    def test_rejects_not_union_closed(self):
        ground = ["a", "b"]
        b = SetFamily.from_members([["a"], ["b"]], ground=ground)
        ext = SetFamily.from_members([["a"], ["b"]], ground=ground)
        report = verify_extension(b, ext)
        assert not report.verdict
        assert "union" in report.witnesses[0].reason

    def test_rejects_missing_input(self):
        ground = ["a", "b"]
        b = SetFamily.from_members([["a"], ["b"]], ground=ground)
        ext = SetFamily.from_members([["a"], ["a", "b"]], ground=ground)
        report = verify_extension(b, ext)
        assert not report.verdict
        assert any("input set missing" in w.reason for w in report.witnesses)

    def test_rejects_not_well_graded(self):
        b = fam("{}", "a b")
        report = verify_extension(b, fam("{}", "a b"))
        assert not report.verdict
        assert any("not well-graded" in w.reason for w in report.witnesses)


class TestRandomizedSweep:
    def test_random_families_ground_up_to_six(self):
        rng = random.Random(99)
        for _ in range(120):
            g = rng.randint(2, 6)
            ell = rng.randint(1, min(4, g))
            n = rng.randint(1, min(6, distinct_set_count(g, ell)))
            b = random_family(
                rng,
                n=n,
                ell=ell,
                ground_size=g,
                include_empty=rng.random() < 0.4,
            )
            res = minimal_wg_extension(b, check_tables=True)
            assert verify_extension(b, res.spanned()).verdict
