"""Brute-force reference implementations of the definitions, used to
validate the polynomial algorithms on small instances.  These are meant
to be obviously correct, not fast."""

from __future__ import annotations

from typing import Callable, Iterator, Sequence

from .core import (
    GroundSet,
    SetFamily,
    StateSet,
    TightPath,
    canonical_key,
    span_masks,
)
from .errors import CapacityError, DomainError, UsageError

DEFAULT_ORACLE_LIMIT = 4096
EXHAUSTIVE_GROUND_LIMIT = 4


def _check_limit(family: SetFamily, limit: int) -> None:
    if len(family) > limit:
        raise CapacityError(
            f"family has {len(family)} sets, above the oracle limit of {limit}"
        )


class AdjacencyGraph:
    """Graph on the members of a family with an edge exactly between sets
    at symmetric-difference distance 1; realizes tight paths as graph
    paths."""

    __slots__ = ("family", "neighbor_masks")

    def __init__(self, family: SetFamily):
        masks = family.masks
        n = len(masks)
        adj = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if (masks[i] ^ masks[j]).bit_count() == 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        self.family = family
        self.neighbor_masks = adj

    @property
    def vertices(self) -> tuple[StateSet, ...]:
        return self.family.sets

    def edges(self) -> Iterator[tuple[StateSet, StateSet]]:
        sets = self.family.sets
        for i, mask in enumerate(self.neighbor_masks):
            for j in _vertex_bits(mask):
                if j > i:
                    yield (sets[i], sets[j])


def oracle_is_well_graded(
    family: SetFamily, *, limit: int = DEFAULT_ORACLE_LIMIT
) -> bool:
    """Definitional wellgradedness test: for every pair of members, the
    hop distance in the distance-1 adjacency graph must equal the
    symmetric-difference distance."""
    _check_limit(family, limit)
    masks = family.masks
    n = len(masks)
    adj = AdjacencyGraph(family).neighbor_masks
    for src in range(n):
        # breadth-first levels as vertex bitmasks
        seen = 1 << src
        frontier = seen
        dist = 0
        level = {src: 0}
        while frontier:
            nxt = 0
            for v in _vertex_bits(frontier):
                nxt |= adj[v]
            nxt &= ~seen
            dist += 1
            for v in _vertex_bits(nxt):
                level[v] = dist
            seen |= nxt
            frontier = nxt
        for dst in range(n):
            if dst == src:
                continue
            want = (masks[src] ^ masks[dst]).bit_count()
            if level.get(dst) != want:
                return False
    return True


def _vertex_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def oracle_tight_path(
    family: SetFamily, p: StateSet, q: StateSet
) -> TightPath | None:
    """A tight path from p to q inside the family, or None.  The search
    only ever steps to sets that strictly decrease the remaining
    distance, which is exactly the tightness condition."""
    members = set(family.masks)
    for s in (p, q):
        if s.ground != family.ground or s.mask not in members:
            raise UsageError(f"set {s} is not a member of the family")
    if p.mask == q.mask:
        return TightPath((p,))
    target = q.mask
    start = p.mask
    # BFS over (set, remaining distance); parents for path recovery
    parent: dict[int, int] = {start: -1}
    frontier = [start]
    while frontier:
        nxt: list[int] = []
        for cur in frontier:
            remaining = (cur ^ target).bit_count()
            for m in family.masks:
                if m in parent:
                    continue
                if (cur ^ m).bit_count() != 1:
                    continue
                if (m ^ target).bit_count() != remaining - 1:
                    continue
                parent[m] = cur
                if m == target:
                    steps = [m]
                    while steps[-1] != start:
                        steps.append(parent[steps[-1]])
                    steps.reverse()
                    return TightPath(
                        tuple(StateSet(family.ground, s) for s in steps)
                    )
                nxt.append(m)
        frontier = nxt
    return None


def oracle_wg_via_base_paths(
    base: SetFamily, *, limit: int = DEFAULT_ORACLE_LIMIT
) -> bool:
    """Tight-path criterion over base pairs: the span is well-graded iff
    for every ordered pair K, L there is a tight path in the span from K
    to K union L."""
    spanned = base.replaced(span_masks(base.masks, limit=limit))
    _check_limit(spanned, limit)
    for k in base.masks:
        for l in base.masks:
            if k == l:
                continue
            src = StateSet(base.ground, k)
            dst = StateSet(base.ground, k | l)
            if oracle_tight_path(spanned, src, dst) is None:
                return False
    return True


def oracle_empty_set_criterion(
    base: SetFamily, *, limit: int = DEFAULT_ORACLE_LIMIT
) -> bool:
    """Learning-space form of the criterion: with the empty set in the
    base, the span is well-graded iff every base set is reachable from
    the empty set by a tight path."""
    if 0 not in base.masks:
        raise DomainError("criterion requires the empty set in the base")
    spanned = base.replaced(span_masks(base.masks, limit=limit))
    _check_limit(spanned, limit)
    empty = StateSet(base.ground, 0)
    for k in base.masks:
        if oracle_tight_path(spanned, empty, StateSet(base.ground, k)) is None:
            return False
    return True


def oracle_is_base(family: SetFamily, *, limit: int = DEFAULT_ORACLE_LIMIT) -> bool:
    """Definitional base test: no single member may be dropped without
    shrinking the span."""
    full = span_masks(family.masks, limit=limit)
    if len(family.masks) == 1:
        return True
    for i in range(len(family.masks)):
        rest = family.masks[:i] + family.masks[i + 1 :]
        if span_masks(rest, limit=limit) == full:
            return False
    return True


def enumerate_families(
    ground_size: int,
    predicate: Callable[[SetFamily], bool] | None = None,
) -> Iterator[SetFamily]:
    """Every duplicate-free family over a fixed ground set of the given
    size, optionally filtered.  Exhaustive enumeration is only feasible
    for tiny grounds."""
    if not 1 <= ground_size <= EXHAUSTIVE_GROUND_LIMIT:
        raise CapacityError(
            f"exhaustive enumeration supports ground sizes 1..{EXHAUSTIVE_GROUND_LIMIT}"
        )
    ground = GroundSet("abcdefgh"[:ground_size])
    subsets = 1 << ground_size
    for code in range(1, 1 << subsets):
        masks = [m for m in range(subsets) if code >> m & 1]
        family = SetFamily(ground, masks)
        if predicate is None or predicate(family):
            yield family
