"""Shared fixture families used across the suite."""

import pytest

from wellgraded import SetFamily

# 13-set union-closed well-graded family whose base is not well-graded
FAMILY_13 = [
    [],
    ["a"],
    ["b"],
    ["c"],
    ["a", "b"],
    ["a", "c"],
    ["b", "c"],
    ["c", "d"],
    ["a", "b", "c"],
    ["a", "c", "d"],
    ["b", "c", "d"],
    ["a", "b", "c", "d"],
    ["a", "b", "c", "d", "e"],
]
BASE_13 = [[], ["a"], ["b"], ["c"], ["c", "d"], ["a", "b", "c", "d", "e"]]

# its two distinct minimal well-graded spanning subfamilies
SUBFAMILY_13_A = [
    [],
    ["a"],
    ["b"],
    ["c"],
    ["a", "b"],
    ["a", "c"],
    ["c", "d"],
    ["a", "b", "c"],
    ["a", "c", "d"],
    ["a", "b", "c", "d"],
    ["a", "b", "c", "d", "e"],
]
SUBFAMILY_13_B = [
    [],
    ["a"],
    ["b"],
    ["c"],
    ["a", "b"],
    ["b", "c"],
    ["c", "d"],
    ["a", "b", "c"],
    ["b", "c", "d"],
    ["a", "b", "c", "d"],
    ["a", "b", "c", "d", "e"],
]

# union- and intersection-closed family whose base is not well-graded
FAMILY_UI = [
    [],
    ["a"],
    ["b"],
    ["d"],
    ["a", "b"],
    ["a", "d"],
    ["b", "d"],
    ["a", "b", "c"],
    ["a", "b", "d"],
    ["a", "b", "c", "d"],
    ["a", "b", "c", "d", "e"],
]
BASE_UI = [[], ["a"], ["b"], ["d"], ["a", "b", "c"], ["a", "b", "c", "d", "e"]]

# discriminative well-graded base without the empty set whose surmise
# function is not a partition
BASE_NO_PARTITION = [["x", "y", "c"], ["y", "d"], ["c", "d"]]

GROUND_13 = ["a", "b", "c", "d", "e"]


@pytest.fixture
def family13() -> SetFamily:
    return SetFamily.from_members(FAMILY_13, ground=GROUND_13)


@pytest.fixture
def base13() -> SetFamily:
    return SetFamily.from_members(BASE_13, ground=GROUND_13)


@pytest.fixture
def family_ui() -> SetFamily:
    return SetFamily.from_members(FAMILY_UI)


@pytest.fixture
def base_ui() -> SetFamily:
    return SetFamily.from_members(BASE_UI)


@pytest.fixture
def base_no_partition() -> SetFamily:
    return SetFamily.from_members(BASE_NO_PARTITION)


def fam(*sets: str) -> SetFamily:
    """Compact family builder: fam("{}", "a", "a b") with "{}" the empty set."""
    return SetFamily.from_members(
        [() if s == "{}" else tuple(s.split()) for s in sets]
    )
