"""Seeded random generation of bases and families for benchmarks and
randomized tests."""

from __future__ import annotations

import random
from math import comb
from typing import Iterable

from .core import GroundSet, SetFamily, canonical_key
from .errors import UsageError


def distinct_set_count(ground_size: int, ell: int) -> int:
    """Number of distinct nonempty sets of cardinality at most ell."""
    return sum(comb(ground_size, k) for k in range(1, ell + 1))


def ground_of_size(size: int) -> GroundSet:
    if size < 1:
        raise UsageError("ground size must be positive")
    if size <= 26:
        return GroundSet("abcdefghijklmnopqrstuvwxyz"[:size])
    return GroundSet(f"e{i}" for i in range(1, size + 1))


def random_family(
    rng: random.Random,
    *,
    n: int,
    ell: int,
    ground_size: int,
    include_empty: bool = False,
) -> SetFamily:
    """n distinct random sets of cardinality at most ell (at least one,
    plus the empty set when requested)."""
    ground = ground_of_size(ground_size)
    if ell > ground_size:
        raise UsageError("largest cardinality cannot exceed the ground size")
    masks: list[int] = []
    seen: set[int] = set()
    if include_empty:
        masks.append(0)
        seen.add(0)
    attempts = 0
    while len(masks) < n:
        attempts += 1
        if attempts > 1000 * n + 1000:
            raise UsageError(
                f"could not draw {n} distinct sets with ell={ell} over {ground_size} elements"
            )
        size = rng.randint(1, ell)
        mask = 0
        for i in rng.sample(range(ground_size), size):
            mask |= 1 << i
        if mask not in seen:
            seen.add(mask)
            masks.append(mask)
    return SetFamily(ground, sorted(masks, key=canonical_key))


def random_base(
    rng: random.Random,
    *,
    n: int,
    ell: int,
    ground_size: int,
    include_empty: bool = False,
) -> SetFamily:
    """A random base with exactly n sets: candidate sets are sampled by
    size-biased element inclusion and rejected whenever they are a union
    of the sets already drawn or would turn one of those into a union.

    The covered-union of every accepted set is maintained incrementally,
    so each candidate costs one pass over the family.
    """
    ground = ground_of_size(ground_size)
    if ell > ground_size:
        raise UsageError("largest cardinality cannot exceed the ground size")
    if n < 1 or (include_empty and n < 2):
        raise UsageError("base size too small for the requested shape")
    masks: list[int] = []
    covered: list[int] = []  # union of accepted proper subsets, per set
    if include_empty:
        masks.append(0)
        covered.append(0)
    attempts = 0
    have_largest = False  # the first accepted set is drawn at exactly ell
    while len(masks) < n:
        attempts += 1
        if attempts > 2000 * n + 2000:
            raise UsageError(
                f"could not grow a base of {n} sets with ell={ell} over {ground_size} elements"
            )
        size = ell if not have_largest else rng.randint(1, ell)
        cand = 0
        for i in rng.sample(range(ground_size), size):
            cand |= 1 << i
        if cand in masks:
            continue
        cand_covered = 0
        for m in masks:
            if m != cand and m & ~cand == 0:
                cand_covered |= m
        if cand_covered == cand:
            continue  # candidate is a union of accepted sets
        bad = False
        for i, m in enumerate(masks):
            if cand & ~m == 0 and m != cand and (covered[i] | cand) == m:
                bad = True  # candidate would finish covering an accepted set
                break
        if bad:
            continue
        for i, m in enumerate(masks):
            if cand & ~m == 0 and m != cand:
                covered[i] |= cand
        masks.append(cand)
        covered.append(cand_covered)
        if size == ell:
            have_largest = True
    return SetFamily(ground, sorted(masks, key=canonical_key))
