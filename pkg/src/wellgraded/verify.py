"""Polynomial-time base verification: the base test, the learning-space
test and the well-graded-base test, each with per-set diagnostics.

All three reduce to endpoint computations.  The endpoints of X in a
family B are the elements of X not covered by any proper subset of X in
B; the scan marks the members of X, marks the elements covered by the
proper subsets, and collects the unmarked members, so one call is linear
in the total input size.  The boolean marks live in machine-word
bitmasks rather than per-element arrays, which preserves the linear
scaling while keeping the constant factor small.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import GroundSet, SetFamily, StateSet, canonical_key
from .errors import DomainError, UsageError


@dataclass(frozen=True)
class Witness:
    """One diagnostic: the set at fault and the reason it fails."""

    set: StateSet
    reason: str


@dataclass(frozen=True)
class VerificationReport:
    verdict: bool
    witnesses: tuple[Witness, ...] = ()

    def __post_init__(self):
        assert self.verdict == (not self.witnesses)

    def __bool__(self) -> bool:
        return self.verdict


@dataclass(frozen=True)
class EndpointEntry:
    set: StateSet
    endpoints: StateSet
    flag: str  # "empty-set-atom" | "none" | "single" | "multiple"


@dataclass(frozen=True)
class EndpointReport:
    entries: tuple[EndpointEntry, ...]

    def __iter__(self):
        return iter(self.entries)


def endpoints(family: SetFamily, x: StateSet) -> StateSet:
    """Elements of x not contained in any proper subset of x within the
    family.  x must be a member."""
    if x.ground != family.ground:
        raise UsageError("set is over a different ground set than the family")
    if x.mask not in set(family.masks):
        raise UsageError(f"set {x} is not a member of the family")
    return StateSet(family.ground, _endpoint_mask(family.masks, x.mask))


def _endpoint_mask(masks: Sequence[int], x: int) -> int:
    covered = 0
    for y in masks:
        if y != x and y & ~x == 0:
            covered |= y
    return x & ~covered


def endpoint_report(family: SetFamily) -> EndpointReport:
    entries = []
    for m in sorted(family.masks, key=canonical_key):
        e = _endpoint_mask(family.masks, m)
        if m == 0:
            flag = "empty-set-atom"
        elif e == 0:
            flag = "none"
        elif e.bit_count() == 1:
            flag = "single"
        else:
            flag = "multiple"
        entries.append(
            EndpointEntry(StateSet(family.ground, m), StateSet(family.ground, e), flag)
        )
    return EndpointReport(tuple(entries))


def is_base(family: SetFamily) -> VerificationReport:
    """Whether the family is the base of its span: every nonempty member
    must have a nonempty endpoint set."""
    witnesses = []
    for entry in endpoint_report(family):
        if entry.flag == "none":
            witnesses.append(Witness(entry.set, "no endpoint"))
    return VerificationReport(not witnesses, tuple(witnesses))


def is_learning_space_base(family: SetFamily) -> VerificationReport:
    """Whether the family is the base of a learning space: it must contain
    the empty set and every nonempty member must have exactly one
    endpoint."""
    witnesses = []
    if 0 not in family.masks:
        witnesses.append(Witness(StateSet(family.ground, 0), "missing empty set"))
    for entry in endpoint_report(family):
        if entry.flag == "empty-set-atom":
            continue
        k = len(entry.endpoints)
        if k != 1:
            witnesses.append(
                Witness(entry.set, f"{k} endpoints (expected exactly 1)")
            )
    return VerificationReport(not witnesses, tuple(witnesses))


def surmise_is_partition(family: SetFamily) -> bool:
    """Whether the surmise function partitions the nonempty base sets:
    the atom collections of the elements must cover them, and distinct
    elements' collections must be disjoint (no set may be an atom at two
    different elements)."""
    if not is_base(family).verdict:
        raise DomainError("surmise partition test requires a base")
    from .core import surmise

    sigma = surmise(family)
    classes = [frozenset(s.mask for s in sigma[x]) for x in sigma.elements()]
    nonempty = {m for m in family.masks if m != 0}
    covered: set[int] = set()
    for cls in classes:
        covered |= cls
    if covered != nonempty:
        return False
    for i, a in enumerate(classes):
        for b in classes[i + 1 :]:
            if a & b:
                return False
    return True


def quotient(family: SetFamily, x: StateSet) -> SetFamily:
    """The family {Y \\ X : Y in B}, duplicates merged, over the ground
    set (union of B) minus X."""
    if x.ground != family.ground:
        raise UsageError("set is over a different ground set than the family")
    ground = family.ground
    union = family.union_mask()
    kept_names = ground.names_of(union & ~x.mask)
    new_ground = GroundSet(kept_names)
    reindex = {ground.index(name): new_ground.index(name) for name in kept_names}
    out: list[int] = []
    seen: set[int] = set()
    for y in family.masks:
        m = 0
        rest = y & ~x.mask
        while rest:
            low = rest & -rest
            m |= 1 << reindex[low.bit_length() - 1]
            rest ^= low
        if m not in seen:
            seen.add(m)
            out.append(m)
    return SetFamily(new_ground, out)


def _quotient_masks(masks: Sequence[int], x: int) -> list[int]:
    # same-ground variant used by the wg test's inner loop
    out: list[int] = []
    seen: set[int] = set()
    for y in masks:
        m = y & ~x
        if m not in seen:
            seen.add(m)
            out.append(m)
    return out


def _base_of_quotient(masks: Sequence[int], x: int) -> list[int]:
    # the empty set plus the quotient sets with nonempty endpoints
    # relative to the quotient; this is the base of the quotient's span
    q = _quotient_masks(masks, x)
    kept = [0]
    for z in q:
        if z != 0 and _endpoint_mask(q, z) != 0:
            kept.append(z)
    return kept


def is_wg_base(family: SetFamily, *, parallel: bool = False) -> VerificationReport:
    """Whether the family is the base of a union-closed well-graded family.

    Checks the base condition, then for every member X whether the base
    of the quotient-by-X span is a learning-space base.  The n quotient
    subproblems are independent; with parallel=True they are evaluated on
    a thread pool, with identical results in either mode.
    """
    base_report = is_base(family)
    if not base_report.verdict:
        return base_report
    masks = family.masks
    order = sorted(masks, key=canonical_key)

    def check(x: int) -> Witness | None:
        bx = _base_of_quotient(masks, x)
        for z in bx:
            if z == 0:
                continue
            if _endpoint_mask(bx, z).bit_count() != 1:
                return Witness(
                    StateSet(family.ground, x),
                    "quotient by this set does not span a learning space",
                )
        return None

    if parallel:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor() as pool:
            results = list(pool.map(check, order))
    else:
        results = [check(x) for x in order]
    witnesses = tuple(w for w in results if w is not None)
    return VerificationReport(not witnesses, witnesses)
